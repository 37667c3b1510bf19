#include "graycycle/text_format.hpp"

#include <string>
#include <vector>

#include "graycycle/errors.hpp"

namespace graycycle {

std::string to_string(std::span<const Character> chars)
{
    std::string out(chars.size(), '0');
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (chars[i] >= kMaxTextAlphabetSize) {
            throw ParameterError("character " + std::to_string(chars[i]) +
                                 " has no single-digit rendering");
        }
        out[i] = static_cast<char>('0' + chars[i]);
    }
    return out;
}

std::string to_string(const Word& w)
{
    return to_string(w.chars());
}

Word parse_word(std::string_view text, const Alphabet& alphabet)
{
    if (alphabet.size() > kMaxTextAlphabetSize) {
        throw ParameterError("digit text format supports p <= 10, got p = " +
                             std::to_string(alphabet.size()));
    }
    std::vector<Character> chars;
    chars.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch < '0' || ch > '9' || static_cast<unsigned>(ch - '0') >= alphabet.size()) {
            throw DomainError("invalid character '" + std::string(1, ch) + "' at position " +
                              std::to_string(i + 1) + " for alphabet of size " +
                              std::to_string(alphabet.size()));
        }
        chars.push_back(static_cast<Character>(ch - '0'));
    }
    return Word(alphabet, std::move(chars));
}

} // namespace graycycle
