// word.hpp -- alphabets, fixed-length words and the letterwise permutation theta

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graycycle {

/// A character is stored as its index 0..p-1 in the alphabet.
using Character = std::uint8_t;

/// Largest alphabet representable by Character.
inline constexpr unsigned kMaxAlphabetSize = 256;

/// The ordered alphabet {0, 1, ..., p-1}, p >= 2.
class Alphabet {
public:
    explicit Alphabet(unsigned size);

    unsigned size() const noexcept { return size_; }
    bool contains(unsigned c) const noexcept { return c < size_; }

    bool operator==(const Alphabet&) const = default;

private:
    unsigned size_;
};

/// A word of fixed length over an Alphabet.
///
/// Positions are 1-indexed in the public interface (`at(1)` is the first
/// character); `chars()` exposes the underlying 0-indexed storage.
class Word {
public:
    Word(Alphabet alphabet, std::vector<Character> chars);
    Word(Alphabet alphabet, std::span<const Character> chars);

    /// The word 0^n.
    static Word zeros(Alphabet alphabet, std::size_t n);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t length() const noexcept { return chars_.size(); }
    bool empty() const noexcept { return chars_.empty(); }

    /// Character at 1-indexed `position`; throws DimensionError when out of range.
    Character at(std::size_t position) const;

    std::span<const Character> chars() const noexcept { return chars_; }

    /// Number of occurrences of `c`.
    std::size_t count(Character c) const noexcept;

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& other) const;

private:
    Alphabet alphabet_;
    std::vector<Character> chars_;
};

enum class Parity { even, odd };

/// Number of positions where `u` and `v` differ.
std::size_t hamming_distance(const Word& u, const Word& v);

/// Same as above on raw storage of equal length.
std::size_t hamming_distance(std::span<const Character> u, std::span<const Character> v);

/// True iff v is a k-character substitution of u, i.e. their Hamming distance is exactly k.
bool sigma_k_related(const Word& u, const Word& v, std::size_t k);

/// theta(c) = (c + 1) mod p.
Character theta_char(unsigned c, const Alphabet& alphabet);

/// theta^e(c) = (c + e) mod p; e may be negative.
Character theta_power_char(unsigned c, std::int64_t e, const Alphabet& alphabet);

/// Letterwise extension of theta^e; theta_word(empty) is empty.
Word theta_word(const Word& w, std::int64_t e);

/// Parity of |w|_1. Binary words only.
Parity ones_count_parity(const Word& w);
Parity ones_count_parity(std::span<const Character> w);

/// Componentwise sum in Z/2Z. Binary words only.
Word xor_add(const Word& u, const Word& v);

/// base^exp, throwing CapacityError when the result does not fit in 64 bits.
std::uint64_t checked_power(std::uint64_t base, std::size_t exp);

} // namespace graycycle
