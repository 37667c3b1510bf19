// sequence.hpp -- an indexed list of equal-length words claimed to be a sigma_k-Gray cycle

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "graycycle/word.hpp"

namespace graycycle {

/// Largest number of terms a construction will materialize in memory.
inline constexpr std::uint64_t kMaxMaterializedTerms = std::uint64_t{1} << 24;

/// Throws CapacityError when `terms` exceeds kMaxMaterializedTerms.
void require_materializable(std::uint64_t terms);

/// Non-empty list of words of length n over {0..p-1}, tagged with the
/// substitution parameter k. Terms are stored contiguously.
class GraySequence {
public:
    /// `flat` holds size()*n characters, term i at [i*n, (i+1)*n).
    GraySequence(unsigned p, std::size_t n, std::size_t k, std::vector<Character> flat);

    static GraySequence from_words(std::span<const Word> words, std::size_t k);

    unsigned p() const noexcept { return p_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    Alphabet alphabet() const { return Alphabet(p_); }

    std::size_t size() const noexcept { return flat_.size() / n_; }

    std::span<const Character> chars(std::size_t i) const noexcept
    {
        return std::span<const Character>(flat_).subspan(i * n_, n_);
    }

    Word term(std::size_t i) const;
    Word operator[](std::size_t i) const { return term(i); }

    std::vector<Word> words() const;

    std::span<const Character> flat() const noexcept { return flat_; }

    bool operator==(const GraySequence&) const = default;

private:
    unsigned p_;
    std::size_t n_;
    std::size_t k_;
    std::vector<Character> flat_;
};

} // namespace graycycle
