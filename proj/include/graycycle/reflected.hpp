// reflected.hpp -- binary and p-ary reflected Gray codes and the two derived binary bases

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "graycycle/sequence.hpp"
#include "graycycle/word.hpp"

namespace graycycle {

/// Writes term i of the p-ary reflected Gray code of length n into `out`.
///
/// With a_1..a_n the base-p digits of i (most significant first) and a_0 = 0,
/// position j holds (a_j - a_{j-1}) mod p. Requires out.size() == n and i < p^n.
void reflected_term_into(unsigned p, std::uint64_t i, std::span<Character> out);

/// Term i of the p-ary reflected Gray code over words of length n.
Word reflected_term_at(unsigned p, std::size_t n, std::uint64_t i);

/// The 2^n-term binary reflected Gray code, starting at 0^n.
GraySequence binary_reflected(std::size_t n);

/// The p^n-term p-ary reflected Gray code. Every cyclic step replaces one
/// character c by theta(c).
GraySequence p_ary_reflected(unsigned p, std::size_t n);

/// Index into the binary reflected code of term i of the reversed base:
/// 0 stays 0, i maps to 2^n0 - i.
std::uint64_t gamma_base_source(std::size_t n0, std::uint64_t i);

/// Index into the binary reflected code of term i of the shifted base:
/// 0 maps to 2^n0 - 1, i maps to i - 1.
std::uint64_t rho_base_source(std::size_t n0, std::uint64_t i);

/// Reversal of binary_reflected(n0) that keeps term 0 in place.
/// Starts at 0^n0 and ends at 0^(n0-1)1.
GraySequence gamma_base(std::size_t n0);

/// binary_reflected(n0) rotated one step: starts at 10^(n0-1), ends at 10^(n0-2)1.
GraySequence rho_base(std::size_t n0);

} // namespace graycycle
