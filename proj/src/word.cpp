#include "graycycle/word.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "graycycle/errors.hpp"

namespace graycycle {

namespace {

void require_same_shape(const Word& u, const Word& v, const char* op)
{
    if (u.alphabet() != v.alphabet()) {
        throw DimensionError(std::string(op) + ": alphabet sizes differ (" +
                             std::to_string(u.alphabet().size()) + " vs " +
                             std::to_string(v.alphabet().size()) + ")");
    }
    if (u.length() != v.length()) {
        throw DimensionError(std::string(op) + ": word lengths differ (" +
                             std::to_string(u.length()) + " vs " + std::to_string(v.length()) + ")");
    }
}

void require_binary(const Alphabet& alphabet, const char* op)
{
    if (alphabet.size() != 2) {
        throw ParameterError(std::string(op) + " requires a binary alphabet, got p = " +
                             std::to_string(alphabet.size()));
    }
}

} // namespace

Alphabet::Alphabet(unsigned size) : size_(size)
{
    if (size < 2 || size > kMaxAlphabetSize) {
        throw ParameterError("alphabet size must lie in [2, " + std::to_string(kMaxAlphabetSize) +
                             "], got " + std::to_string(size));
    }
}

Word::Word(Alphabet alphabet, std::vector<Character> chars)
    : alphabet_(alphabet), chars_(std::move(chars))
{
    for (std::size_t i = 0; i < chars_.size(); ++i) {
        if (!alphabet_.contains(chars_[i])) {
            throw DomainError("character " + std::to_string(chars_[i]) + " at position " +
                              std::to_string(i + 1) + " is outside the alphabet of size " +
                              std::to_string(alphabet_.size()));
        }
    }
}

Word::Word(Alphabet alphabet, std::span<const Character> chars)
    : Word(alphabet, std::vector<Character>(chars.begin(), chars.end()))
{
}

Word Word::zeros(Alphabet alphabet, std::size_t n)
{
    return Word(alphabet, std::vector<Character>(n, 0));
}

Character Word::at(std::size_t position) const
{
    if (position < 1 || position > chars_.size()) {
        throw DimensionError("position " + std::to_string(position) + " outside [1, " +
                             std::to_string(chars_.size()) + "]");
    }
    return chars_[position - 1];
}

std::size_t Word::count(Character c) const noexcept
{
    return static_cast<std::size_t>(std::count(chars_.begin(), chars_.end(), c));
}

std::strong_ordering Word::operator<=>(const Word& other) const
{
    if (auto cmp = alphabet_.size() <=> other.alphabet_.size(); cmp != 0) {
        return cmp;
    }
    return std::lexicographical_compare_three_way(chars_.begin(), chars_.end(),
                                                  other.chars_.begin(), other.chars_.end());
}

std::size_t hamming_distance(std::span<const Character> u, std::span<const Character> v)
{
    if (u.size() != v.size()) {
        throw DimensionError("hamming_distance: word lengths differ (" + std::to_string(u.size()) +
                             " vs " + std::to_string(v.size()) + ")");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d += u[i] != v[i];
    }
    return d;
}

std::size_t hamming_distance(const Word& u, const Word& v)
{
    require_same_shape(u, v, "hamming_distance");
    return hamming_distance(u.chars(), v.chars());
}

bool sigma_k_related(const Word& u, const Word& v, std::size_t k)
{
    require_same_shape(u, v, "sigma_k_related");
    if (k < 1 || k > u.length()) {
        throw ParameterError("sigma_k_related: k must lie in [1, " + std::to_string(u.length()) +
                             "], got " + std::to_string(k));
    }
    return hamming_distance(u.chars(), v.chars()) == k;
}

Character theta_char(unsigned c, const Alphabet& alphabet)
{
    return theta_power_char(c, 1, alphabet);
}

Character theta_power_char(unsigned c, std::int64_t e, const Alphabet& alphabet)
{
    if (!alphabet.contains(c)) {
        throw DomainError("character " + std::to_string(c) + " is outside the alphabet of size " +
                          std::to_string(alphabet.size()));
    }
    const auto p = static_cast<std::int64_t>(alphabet.size());
    auto shift = e % p;
    if (shift < 0) {
        shift += p;
    }
    return static_cast<Character>((static_cast<std::int64_t>(c) + shift) % p);
}

Word theta_word(const Word& w, std::int64_t e)
{
    std::vector<Character> out(w.length());
    std::transform(w.chars().begin(), w.chars().end(), out.begin(),
                   [&](Character c) { return theta_power_char(c, e, w.alphabet()); });
    return Word(w.alphabet(), std::move(out));
}

Parity ones_count_parity(std::span<const Character> w)
{
    std::size_t ones = 0;
    for (auto c : w) {
        ones += c == 1;
    }
    return ones % 2 == 0 ? Parity::even : Parity::odd;
}

Parity ones_count_parity(const Word& w)
{
    require_binary(w.alphabet(), "ones_count_parity");
    return ones_count_parity(w.chars());
}

Word xor_add(const Word& u, const Word& v)
{
    require_binary(u.alphabet(), "xor_add");
    require_same_shape(u, v, "xor_add");
    std::vector<Character> out(u.length());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<Character>(u.chars()[i] ^ v.chars()[i]);
    }
    return Word(u.alphabet(), std::move(out));
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp)
{
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw CapacityError(std::to_string(base) + "^" + std::to_string(exp) +
                                " does not fit in a 64-bit count");
        }
        result *= base;
    }
    return result;
}

} // namespace graycycle
