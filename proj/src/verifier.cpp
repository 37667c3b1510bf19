#include "graycycle/verifier.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "graycycle/errors.hpp"
#include "graycycle/text_format.hpp"

namespace graycycle {

namespace {

std::string key_of(const Word& w)
{
    const auto chars = w.chars();
    return std::string(chars.begin(), chars.end());
}

std::string describe(const Word& w)
{
    if (w.alphabet().size() <= kMaxTextAlphabetSize) {
        return to_string(w);
    }
    std::string out;
    for (auto c : w.chars()) {
        out += (out.empty() ? "" : ",") + std::to_string(c);
    }
    return "<" + out + ">";
}

void record(VerificationReport& report, Violation violation, std::string note)
{
    if (!report.first_violation) {
        report.first_violation = violation;
    }
    report.notes.push_back(std::move(note));
}

std::vector<Word> enumerate_words(unsigned p, std::size_t n)
{
    const Alphabet alphabet(p);
    const std::uint64_t count = checked_power(p, n);
    require_materializable(count);
    std::vector<Word> out;
    out.reserve(count);
    std::vector<Character> digits(n, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.emplace_back(alphabet, digits);
        for (std::size_t j = n; j-- > 0;) {
            if (++digits[j] < p) {
                break;
            }
            digits[j] = 0;
        }
    }
    return out;
}

// Exhaustive longest simple cycle on one connected vertex set. Cycles are
// enumerated from their least vertex only.
class LongestCycleSearch {
public:
    LongestCycleSearch(const std::vector<std::vector<std::size_t>>& adjacency, std::uint64_t budget,
                       std::uint64_t& nodes)
        : adjacency_(adjacency), budget_(budget), nodes_(nodes), on_path_(adjacency.size(), false)
    {
    }

    /// Returns false when the node budget ran out.
    bool run(const std::vector<std::size_t>& component)
    {
        std::vector<std::size_t> sorted = component;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
            const std::size_t remaining = sorted.size() - idx;
            if (remaining <= best_.size()) {
                break;
            }
            start_ = sorted[idx];
            limit_ = remaining;
            path_.assign(1, start_);
            on_path_[start_] = true;
            const bool ok = extend(start_);
            on_path_[start_] = false;
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    const std::vector<std::size_t>& best() const noexcept { return best_; }

private:
    bool extend(std::size_t v)
    {
        if (++nodes_ > budget_) {
            return false;
        }
        for (std::size_t w : adjacency_[v]) {
            if (w == start_ && path_.size() >= 2 && path_.size() > best_.size()) {
                best_ = path_;
            }
        }
        for (std::size_t w : adjacency_[v]) {
            if (best_.size() >= limit_) {
                return true;
            }
            if (w <= start_ || on_path_[w]) {
                continue;
            }
            on_path_[w] = true;
            path_.push_back(w);
            const bool ok = extend(w);
            path_.pop_back();
            on_path_[w] = false;
            if (!ok) {
                return false;
            }
        }
        return true;
    }

    const std::vector<std::vector<std::size_t>>& adjacency_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<bool> on_path_;
    std::vector<std::size_t> path_;
    std::vector<std::size_t> best_;
    std::size_t start_ = 0;
    std::size_t limit_ = 0;
};

} // namespace

std::string_view to_string(Condition c) noexcept
{
    switch (c) {
    case Condition::g1: return "G1";
    case Condition::g2: return "G2";
    case Condition::g3: return "G3";
    }
    return "?";
}

std::string_view to_string(ParityClass c) noexcept
{
    switch (c) {
    case ParityClass::even: return "even";
    case ParityClass::odd: return "odd";
    case ParityClass::mixed: return "mixed";
    }
    return "?";
}

VerificationReport verify_cycle(std::span<const Word> terms, const WordRelation& relation,
                                const std::optional<std::vector<Word>>& ground_set)
{
    if (terms.empty()) {
        throw ParameterError("cannot verify an empty sequence");
    }
    VerificationReport report;

    std::unordered_map<std::string, std::size_t> first_seen;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto [it, inserted] = first_seen.emplace(key_of(terms[i]), i);
        if (!inserted && report.g3_pass) {
            report.g3_pass = false;
            record(report, {Condition::g3, it->second, i},
                   "G3: terms " + std::to_string(it->second) + " and " + std::to_string(i) +
                       " are both " + describe(terms[i]));
        }
    }

    for (std::size_t i = 1; i <= terms.size(); ++i) {
        const std::size_t cur = i % terms.size();
        if (!relation(terms[i - 1], terms[cur])) {
            report.g2_pass = false;
            record(report, {Condition::g2, cur, std::nullopt},
                   "G2: term " + std::to_string(cur) + " (" + describe(terms[cur]) +
                       ") is not related to term " + std::to_string(i - 1) + " (" +
                       describe(terms[i - 1]) + ")");
            break;
        }
    }

    if (!ground_set) {
        report.ground_set_size = first_seen.size();
        return report;
    }
    std::unordered_set<std::string> ground;
    for (const auto& w : *ground_set) {
        ground.insert(key_of(w));
    }
    report.ground_set_size = ground.size();
    for (std::size_t i = 0; i < ground_set->size() && report.g1_pass; ++i) {
        if (!first_seen.contains(key_of((*ground_set)[i]))) {
            report.g1_pass = false;
            record(report, {Condition::g1, i, std::nullopt},
                   "G1: ground-set word " + describe((*ground_set)[i]) + " never occurs");
        }
    }
    for (std::size_t i = 0; i < terms.size() && report.g1_pass; ++i) {
        if (!ground.contains(key_of(terms[i]))) {
            report.g1_pass = false;
            record(report, {Condition::g1, i, std::nullopt},
                   "G1: term " + std::to_string(i) + " (" + describe(terms[i]) +
                       ") lies outside the ground set");
        }
    }
    return report;
}

VerificationReport verify_gray_cycle(std::span<const Word> terms, std::size_t k,
                                     const std::optional<std::vector<Word>>& ground_set)
{
    if (k < 1) {
        throw ParameterError("k must be at least 1");
    }
    std::vector<std::string> length_notes;
    auto relation = [&](const Word& from, const Word& to) {
        if (from.length() != to.length() || from.alphabet() != to.alphabet()) {
            length_notes.push_back("G2 precondition: words " + describe(from) + " and " +
                                   describe(to) + " differ in length or alphabet");
            return false;
        }
        return from.length() >= k && hamming_distance(from.chars(), to.chars()) == k;
    };
    VerificationReport report = verify_cycle(terms, relation, ground_set);
    report.notes.insert(report.notes.end(), length_notes.begin(), length_notes.end());
    return report;
}

VerificationReport verify_gray_cycle(const GraySequence& seq, const std::optional<std::vector<Word>>& ground_set)
{
    const auto words = seq.words();
    return verify_gray_cycle(words, seq.k(), ground_set);
}

ParityClass check_parity_class(const GraySequence& seq)
{
    if (seq.p() != 2) {
        throw ParameterError("parity classes need a binary alphabet, got p = " + std::to_string(seq.p()));
    }
    bool even = false;
    bool odd = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        (ones_count_parity(seq.chars(i)) == Parity::even ? even : odd) = true;
    }
    if (even && odd) {
        return ParityClass::mixed;
    }
    return even ? ParityClass::even : ParityClass::odd;
}

std::vector<Word> all_words(unsigned p, std::size_t n)
{
    return enumerate_words(p, n);
}

std::vector<Word> parity_class_words(std::size_t n, Parity parity)
{
    std::vector<Word> out;
    for (auto& w : enumerate_words(2, n)) {
        if (ones_count_parity(w.chars()) == parity) {
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::uint64_t relation_graph_degree(unsigned p, std::size_t n, std::size_t k)
{
    static_cast<void>(Alphabet(p));
    if (k < 1 || n < k) {
        throw ParameterError("relation_graph_degree needs n >= k >= 1, got n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
    }
    // C(n, k) built incrementally; each partial product is itself a binomial.
    std::uint64_t binom = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t factor = n - k + i;
        if (binom > UINT64_MAX / factor) {
            throw CapacityError("C(n, k) does not fit in 64 bits");
        }
        binom = binom * factor / i;
    }
    const std::uint64_t substitutions = checked_power(p - 1, k);
    if (substitutions != 0 && binom > UINT64_MAX / substitutions) {
        throw CapacityError("relation graph degree does not fit in 64 bits");
    }
    return binom * substitutions;
}

OracleResult oracle_lambda(unsigned p, std::size_t n, std::size_t k, const OracleLimits& limits)
{
    static_cast<void>(Alphabet(p));
    if (k < 1 || n < k) {
        throw ParameterError("oracle needs n >= k >= 1, got n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
    }
    const std::uint64_t total = checked_power(p, n);
    if (total > limits.max_words) {
        throw CapacityError("oracle instance has " + std::to_string(total) +
                            " words, above the exhaustive-search limit of " +
                            std::to_string(limits.max_words));
    }

    OracleResult result;
    for (std::size_t m = k; m <= n; ++m) {
        const std::vector<Word> words = enumerate_words(p, m);
        const std::size_t count = words.size();
        std::vector<std::vector<std::size_t>> adjacency(count);
        for (std::size_t u = 0; u < count; ++u) {
            for (std::size_t v = 0; v < count; ++v) {
                if (hamming_distance(words[u].chars(), words[v].chars()) == k) {
                    adjacency[u].push_back(v);
                }
            }
        }

        // For binary alphabets and even k no edge crosses parity classes.
        std::vector<std::vector<std::size_t>> classes;
        if (p == 2 && k % 2 == 0) {
            classes.resize(2);
            for (std::size_t u = 0; u < count; ++u) {
                classes[ones_count_parity(words[u].chars()) == Parity::even ? 0 : 1].push_back(u);
            }
        } else {
            classes.emplace_back(count);
            for (std::size_t u = 0; u < count; ++u) {
                classes.back()[u] = u;
            }
        }

        std::vector<std::size_t> label(count, count);
        std::vector<std::vector<std::size_t>> components;
        for (const auto& cls : classes) {
            for (std::size_t seed : cls) {
                if (label[seed] != count) {
                    continue;
                }
                components.emplace_back();
                std::vector<std::size_t> stack{seed};
                label[seed] = components.size() - 1;
                while (!stack.empty()) {
                    const std::size_t u = stack.back();
                    stack.pop_back();
                    components.back().push_back(u);
                    for (std::size_t v : adjacency[u]) {
                        if (label[v] == count) {
                            label[v] = components.size() - 1;
                            stack.push_back(v);
                        }
                    }
                }
            }
        }
        // Larger components first so the size bound prunes the rest.
        std::stable_sort(components.begin(), components.end(),
                         [](const auto& a, const auto& b) { return a.size() > b.size(); });

        std::vector<std::size_t> best_cycle;
        for (const auto& component : components) {
            if (component.size() <= best_cycle.size()) {
                break;
            }
            LongestCycleSearch search(adjacency, limits.node_budget, result.nodes);
            if (!search.run(component)) {
                result.status = OracleResult::Status::inconclusive;
                result.witness.reset();
                return result;
            }
            if (search.best().size() > best_cycle.size()) {
                best_cycle = search.best();
            }
        }

        result.per_length.emplace_back(m, best_cycle.size());
        if (best_cycle.size() > result.length) {
            result.length = best_cycle.size();
            result.best_word_length = m;
            std::vector<Word> cycle_words;
            for (std::size_t v : best_cycle) {
                cycle_words.push_back(words[v]);
            }
            result.witness = GraySequence::from_words(cycle_words, k);
        }
    }
    result.status = OracleResult::Status::exact;
    return result;
}

} // namespace graycycle
