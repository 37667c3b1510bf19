#include "graycycle/sequence.hpp"

#include <string>

#include "graycycle/errors.hpp"

namespace graycycle {

void require_materializable(std::uint64_t terms)
{
    if (terms > kMaxMaterializedTerms) {
        throw CapacityError("sequence of " + std::to_string(terms) +
                            " terms exceeds the materialization limit of " +
                            std::to_string(kMaxMaterializedTerms));
    }
}

GraySequence::GraySequence(unsigned p, std::size_t n, std::size_t k, std::vector<Character> flat)
    : p_(p), n_(n), k_(k), flat_(std::move(flat))
{
    const Alphabet alphabet(p);
    if (n < 1) {
        throw ParameterError("sequence word length must be at least 1");
    }
    if (k < 1 || k > n) {
        throw ParameterError("sequence parameter k must lie in [1, " + std::to_string(n) +
                             "], got " + std::to_string(k));
    }
    if (flat_.empty() || flat_.size() % n != 0) {
        throw DimensionError("sequence storage of " + std::to_string(flat_.size()) +
                             " characters is not a non-empty multiple of n = " + std::to_string(n));
    }
    for (std::size_t i = 0; i < flat_.size(); ++i) {
        if (!alphabet.contains(flat_[i])) {
            throw DomainError("term " + std::to_string(i / n) + ", position " +
                              std::to_string(i % n + 1) + ": character " +
                              std::to_string(flat_[i]) + " outside alphabet of size " +
                              std::to_string(p));
        }
    }
}

GraySequence GraySequence::from_words(std::span<const Word> words, std::size_t k)
{
    if (words.empty()) {
        throw ParameterError("a sequence needs at least one term");
    }
    const auto& first = words.front();
    std::vector<Character> flat;
    flat.reserve(words.size() * first.length());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto& w = words[i];
        if (w.length() != first.length() || w.alphabet() != first.alphabet()) {
            throw DimensionError("term " + std::to_string(i) + " has length " +
                                 std::to_string(w.length()) + ", expected " +
                                 std::to_string(first.length()));
        }
        flat.insert(flat.end(), w.chars().begin(), w.chars().end());
    }
    return GraySequence(first.alphabet().size(), first.length(), k, std::move(flat));
}

Word GraySequence::term(std::size_t i) const
{
    if (i >= size()) {
        throw DimensionError("term index " + std::to_string(i) + " outside [0, " +
                             std::to_string(size()) + ")");
    }
    return Word(Alphabet(p_), chars(i));
}

std::vector<Word> GraySequence::words() const
{
    std::vector<Word> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out.push_back(term(i));
    }
    return out;
}

} // namespace graycycle
