// text_format.hpp -- digit rendering of words: character c is the decimal digit c

#pragma once

#include <span>
#include <string>
#include <string_view>

#include "graycycle/word.hpp"

namespace graycycle {

/// Alphabets larger than this cannot be written as one digit per character.
inline constexpr unsigned kMaxTextAlphabetSize = 10;

std::string to_string(std::span<const Character> chars);
std::string to_string(const Word& w);

/// Parses "0120" style text. Throws ParameterError if p > 10 and
/// DomainError on a non-digit or a digit >= p.
Word parse_word(std::string_view text, const Alphabet& alphabet);

} // namespace graycycle
