// verifier.hpp -- Gray-cycle axiom checks and an exhaustive longest-cycle oracle

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graycycle/sequence.hpp"
#include "graycycle/word.hpp"

namespace graycycle {

/// G1: every ground-set word occurs. G2: consecutive terms (and last -> first)
/// are related. G3: terms are pairwise distinct.
enum class Condition { g1, g2, g3 };

std::string_view to_string(Condition c) noexcept;

struct Violation {
    Condition condition;
    /// G3: the two clashing term indices. G2: index i such that term[i] is not
    /// related to term[i-1] (0 for the wraparound). G1: index of the offending
    /// word, into the ground set when it is missing from the sequence, into the
    /// sequence when it lies outside the ground set.
    std::size_t index;
    std::optional<std::size_t> other_index;
};

struct VerificationReport {
    bool g1_pass = true;
    bool g2_pass = true;
    bool g3_pass = true;
    std::size_t ground_set_size = 0;
    std::optional<Violation> first_violation;
    std::vector<std::string> notes;

    bool passed() const noexcept { return g1_pass && g2_pass && g3_pass; }
};

/// Relation a Gray cycle must follow between consecutive terms.
using WordRelation = std::function<bool(const Word& from, const Word& to)>;

/// Checks G1-G3 for an arbitrary relation. Without a ground set, G1 is checked
/// against the sequence's own terms (vacuous). The first violation reported is
/// the first G3 clash, else the first G2 break, else the first G1 mismatch.
VerificationReport verify_cycle(std::span<const Word> terms, const WordRelation& relation,
                                const std::optional<std::vector<Word>>& ground_set = std::nullopt);

/// G1-G3 for sigma_k. Words of differing length fail G2 (sigma_k preserves length).
VerificationReport verify_gray_cycle(std::span<const Word> terms, std::size_t k,
                                     const std::optional<std::vector<Word>>& ground_set = std::nullopt);

/// G1-G3 for sigma_{seq.k()}.
VerificationReport verify_gray_cycle(const GraySequence& seq,
                                     const std::optional<std::vector<Word>>& ground_set = std::nullopt);

enum class ParityClass { even, odd, mixed };

std::string_view to_string(ParityClass c) noexcept;

/// Common ones-count parity of all terms. Binary sequences only.
ParityClass check_parity_class(const GraySequence& seq);

/// All p^n words in lexicographic order.
std::vector<Word> all_words(unsigned p, std::size_t n);

/// Binary words of length n with the given ones-count parity.
std::vector<Word> parity_class_words(std::size_t n, Parity parity);

/// C(n, k) * (p - 1)^k: number of sigma_k neighbours of any word.
std::uint64_t relation_graph_degree(unsigned p, std::size_t n, std::size_t k);

struct OracleLimits {
    /// Largest p^n the oracle accepts.
    std::uint64_t max_words = 32;
    /// Search nodes allowed before giving up.
    std::uint64_t node_budget = 50'000'000;
};

struct OracleResult {
    enum class Status { exact, inconclusive };

    Status status = Status::inconclusive;
    /// Longest cycle found; exact only when status == exact.
    std::uint64_t length = 0;
    /// A cycle of that length (absent when inconclusive).
    std::optional<GraySequence> witness;
    /// Word length m for which the maximum was first reached.
    std::size_t best_word_length = 0;
    /// Maximum per word length m in [k, n].
    std::vector<std::pair<std::size_t, std::uint64_t>> per_length;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return status == Status::exact; }
};

/// Exact maximum size of a set X of words of length at most n admitting a
/// sigma_k-Gray cycle, by longest-simple-cycle search on the sigma_k graph over
/// A^m for each m in [k, n]. Throws CapacityError when p^n > limits.max_words.
OracleResult oracle_lambda(unsigned p, std::size_t n, std::size_t k, const OracleLimits& limits = {});

} // namespace graycycle
