// constructions.hpp -- maximum-length sigma_k-Gray cycles over words of length n
//
// Four parameter regimes, each with its own construction:
//   (i)   p >= 3, n >= k          -> all p^n words          (build_hnk)
//   (ii)  p == 2, n == k          -> {x, theta(x)}          (build_n_equals_k)
//   (iii) p == 2, n > k, k odd    -> all 2^n words          (build_odd_pair)
//   (iv)  p == 2, n > k, k even   -> one parity class       (build_even)

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "graycycle/sequence.hpp"
#include "graycycle/word.hpp"

namespace graycycle {

enum class TheoremCase { i, ii, iii, iv };

std::string_view to_string(TheoremCase c) noexcept;

struct CaseTag {
    TheoremCase theorem_case;
    /// Present only for case iv.
    std::optional<Parity> parity_class;

    bool operator==(const CaseTag&) const = default;
};

/// Which regime (p, n, k) falls into. Throws ParameterError unless p >= 2 and n >= k >= 1.
CaseTag classify(unsigned p, std::size_t n, std::size_t k, Parity parity = Parity::even);

/// Largest length of a sigma_k-Gray cycle over words of length at most n:
/// p^n, 2, 2^n or 2^(n-1) for cases i..iv.
std::uint64_t lambda_max(unsigned p, std::size_t n, std::size_t k);

/// Case i. Starting from the p-ary reflected code of length n-k+1, each of the
/// k-1 passes maps a sequence h of length m to
///     h'[q*p^m + r] = theta^(q+r)(0) . h[r],   0 <= q < p, 0 <= r < p^m.
/// Requires p >= 3: the block boundaries need theta(0) != theta^-2(0).
GraySequence build_hnk(unsigned p, std::size_t n, std::size_t k);

/// The coupled pair (gamma, rho) for binary alphabets and odd k.
struct OddPair {
    GraySequence gamma;
    GraySequence rho;
};

/// Called after the base level and after each induction pass with the
/// current pair; `level_k` is the k both sequences are sigma_k-Gray cycles for.
using OddPairObserver = std::function<void(const OddPair& pair, std::size_t level_k)>;

/// Case iii. Base: gamma_base / rho_base of length n-k+1. Each of the (k-1)/2
/// passes prepends two characters, with i = q*2^m + r:
///     gamma'[i] = theta^r(00|01|11|10) . (gamma|rho|gamma|rho)[r]
///     rho'[i]   = theta^r(10|11|01|00) . (gamma|rho|gamma|rho)[r]
/// Requires n >= k+1 and k odd.
OddPair build_odd_pair(std::size_t n, std::size_t k, const OddPairObserver& observer = {});

/// Case iv. term[i] = theta^i(c) . gamma^{n-1,k-1}[i] with c = 0 (even class)
/// or c = 1 (odd class). 2^(n-1) terms. Requires n >= k+1 and k even.
GraySequence build_even(std::size_t n, std::size_t k, Parity parity);

/// Case ii: the two-term cycle (x, theta(x)) with k = |x|. Binary only.
GraySequence build_n_equals_k(const Word& x);

enum class BaseVariant { gamma, rho };

struct CycleOptions {
    /// Case iv class.
    Parity parity = Parity::even;
    /// Case iii: which member of the odd pair to return.
    BaseVariant variant = BaseVariant::gamma;
    /// Case ii seed; 0^n when absent.
    std::optional<Word> seed_word;
};

/// A sigma_k-Gray cycle of length lambda_max(p, n, k).
GraySequence max_gray_cycle(unsigned p, std::size_t n, std::size_t k, const CycleOptions& options = {});

/// Emits the terms of max_gray_cycle(p, n, k, options) in order without
/// materializing the final level (only the previous, shorter level is kept).
void for_each_term(unsigned p, std::size_t n, std::size_t k, const CycleOptions& options,
                   const std::function<void(std::span<const Character>)>& sink);

} // namespace graycycle
