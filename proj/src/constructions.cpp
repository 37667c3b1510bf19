#include "graycycle/constructions.hpp"

#include <array>
#include <string>
#include <vector>

#include "graycycle/errors.hpp"
#include "graycycle/reflected.hpp"

namespace graycycle {

namespace {

using Sink = std::function<void(std::span<const Character>)>;
using Prefix = std::array<Character, 2>;

// Two-character prefixes for q = 0..3 of the gamma and rho passes.
constexpr std::array<Prefix, 4> kGammaPrefixes{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
constexpr std::array<Prefix, 4> kRhoPrefixes{{{1, 0}, {1, 1}, {0, 1}, {0, 0}}};

void require_triple(unsigned p, std::size_t n, std::size_t k)
{
    static_cast<void>(Alphabet(p));
    if (k < 1) {
        throw ParameterError("k must be at least 1, got " + std::to_string(k));
    }
    if (n < k) {
        throw ParameterError("n must be at least k (sigma_k is undefined on words shorter than k), got n = " +
                             std::to_string(n) + ", k = " + std::to_string(k));
    }
}

void require_odd_pair_params(std::size_t n, std::size_t k)
{
    require_triple(2, n, k);
    if (k % 2 == 0) {
        throw ParameterError("odd-pair construction needs odd k, got k = " + std::to_string(k));
    }
    if (n < k + 1) {
        throw ParameterError("odd-pair construction needs n >= k + 1, got n = " + std::to_string(n) +
                             ", k = " + std::to_string(k) + " (use the n = k construction)");
    }
}

void require_even_params(std::size_t n, std::size_t k)
{
    require_triple(2, n, k);
    if (k % 2 != 0) {
        throw ParameterError("parity-class construction needs even k, got k = " + std::to_string(k));
    }
    if (n < k + 1) {
        throw ParameterError("parity-class construction needs n >= k + 1, got n = " + std::to_string(n) +
                             ", k = " + std::to_string(k));
    }
}

// One pass of the case-i induction: block q, offset r gets theta^(q+r)(0)
// in front of prev[r].
void emit_hnk_level(const GraySequence& prev, const Sink& sink)
{
    const unsigned p = prev.p();
    const std::size_t m = prev.n();
    const std::size_t count = prev.size();
    std::vector<Character> buffer(m + 1);
    for (unsigned q = 0; q < p; ++q) {
        for (std::size_t r = 0; r < count; ++r) {
            buffer[0] = static_cast<Character>((q + r % p) % p);
            const auto body = prev.chars(r);
            std::copy(body.begin(), body.end(), buffer.begin() + 1);
            sink(buffer);
        }
    }
}

// One pass of the case-iii induction. Bodies alternate gamma, rho, gamma, rho;
// theta^r on a binary prefix is complementation when r is odd.
void emit_odd_level(const std::array<Prefix, 4>& prefixes, const OddPair& prev, const Sink& sink)
{
    const std::size_t m = prev.gamma.n();
    const std::size_t count = prev.gamma.size();
    std::vector<Character> buffer(m + 2);
    for (std::size_t q = 0; q < 4; ++q) {
        const GraySequence& body_seq = q % 2 == 0 ? prev.gamma : prev.rho;
        for (std::size_t r = 0; r < count; ++r) {
            const auto flip = static_cast<Character>(r & 1U);
            buffer[0] = prefixes[q][0] ^ flip;
            buffer[1] = prefixes[q][1] ^ flip;
            const auto body = body_seq.chars(r);
            std::copy(body.begin(), body.end(), buffer.begin() + 2);
            sink(buffer);
        }
    }
}

void emit_even_level(Character lead, const GraySequence& odd_gamma, const Sink& sink)
{
    const std::size_t m = odd_gamma.n();
    std::vector<Character> buffer(m + 1);
    for (std::size_t i = 0; i < odd_gamma.size(); ++i) {
        buffer[0] = lead ^ static_cast<Character>(i & 1U);
        const auto body = odd_gamma.chars(i);
        std::copy(body.begin(), body.end(), buffer.begin() + 1);
        sink(buffer);
    }
}

template <typename Emit>
GraySequence collect(unsigned p, std::size_t n, std::size_t k, std::uint64_t count, Emit emit)
{
    require_materializable(count);
    std::vector<Character> flat;
    flat.reserve(count * n);
    emit([&](std::span<const Character> term) { flat.insert(flat.end(), term.begin(), term.end()); });
    return GraySequence(p, n, k, std::move(flat));
}

Word seed_for(std::size_t n, const CycleOptions& options)
{
    if (!options.seed_word) {
        return Word::zeros(Alphabet(2), n);
    }
    const Word& seed = *options.seed_word;
    if (seed.alphabet().size() != 2 || seed.length() != n) {
        throw ParameterError("seed word must be a binary word of length n = " + std::to_string(n));
    }
    return seed;
}

void reject_seed_outside_case_ii(const CaseTag& tag, const CycleOptions& options)
{
    if (options.seed_word && tag.theorem_case != TheoremCase::ii) {
        throw ParameterError("a seed word only applies to case ii (p = 2, n = k)");
    }
}

Character parity_lead(Parity parity)
{
    return parity == Parity::even ? 0 : 1;
}

} // namespace

std::string_view to_string(TheoremCase c) noexcept
{
    switch (c) {
    case TheoremCase::i: return "i";
    case TheoremCase::ii: return "ii";
    case TheoremCase::iii: return "iii";
    case TheoremCase::iv: return "iv";
    }
    return "?";
}

CaseTag classify(unsigned p, std::size_t n, std::size_t k, Parity parity)
{
    require_triple(p, n, k);
    if (p >= 3) {
        return {TheoremCase::i, std::nullopt};
    }
    if (n == k) {
        return {TheoremCase::ii, std::nullopt};
    }
    if (k % 2 == 1) {
        return {TheoremCase::iii, std::nullopt};
    }
    return {TheoremCase::iv, parity};
}

std::uint64_t lambda_max(unsigned p, std::size_t n, std::size_t k)
{
    switch (classify(p, n, k).theorem_case) {
    case TheoremCase::i: return checked_power(p, n);
    case TheoremCase::ii: return 2;
    case TheoremCase::iii: return checked_power(2, n);
    case TheoremCase::iv: return checked_power(2, n - 1);
    }
    return 0;
}

GraySequence build_hnk(unsigned p, std::size_t n, std::size_t k)
{
    require_triple(p, n, k);
    if (p < 3) {
        throw ParameterError("h^{n,k} needs p >= 3 (theta(0) == theta^-2(0) when p = 2), got p = " +
                             std::to_string(p));
    }
    require_materializable(checked_power(p, n));
    GraySequence level = p_ary_reflected(p, n - k + 1);
    for (std::size_t level_k = 2; level_k <= k; ++level_k) {
        const std::size_t m = level.n() + 1;
        level = collect(p, m, level_k, level.size() * std::uint64_t{p},
                        [&](const Sink& sink) { emit_hnk_level(level, sink); });
    }
    return level;
}

OddPair build_odd_pair(std::size_t n, std::size_t k, const OddPairObserver& observer)
{
    require_odd_pair_params(n, k);
    require_materializable(checked_power(2, n));
    const std::size_t n0 = n - k + 1;
    OddPair pair{gamma_base(n0), rho_base(n0)};
    if (observer) {
        observer(pair, 1);
    }
    for (std::size_t level_k = 3; level_k <= k; level_k += 2) {
        const std::size_t m = pair.gamma.n() + 2;
        const std::uint64_t count = pair.gamma.size() * std::uint64_t{4};
        OddPair next{
            collect(2, m, level_k, count, [&](const Sink& sink) { emit_odd_level(kGammaPrefixes, pair, sink); }),
            collect(2, m, level_k, count, [&](const Sink& sink) { emit_odd_level(kRhoPrefixes, pair, sink); }),
        };
        pair = std::move(next);
        if (observer) {
            observer(pair, level_k);
        }
    }
    return pair;
}

GraySequence build_even(std::size_t n, std::size_t k, Parity parity)
{
    require_even_params(n, k);
    const std::uint64_t count = checked_power(2, n - 1);
    require_materializable(count);
    const GraySequence inner = build_odd_pair(n - 1, k - 1).gamma;
    return collect(2, n, k, count, [&](const Sink& sink) { emit_even_level(parity_lead(parity), inner, sink); });
}

GraySequence build_n_equals_k(const Word& x)
{
    if (x.alphabet().size() != 2) {
        throw ParameterError("the n = k construction needs a binary alphabet, got p = " +
                             std::to_string(x.alphabet().size()));
    }
    if (x.empty()) {
        throw ParameterError("the n = k construction needs a non-empty word");
    }
    const Word complement = theta_word(x, 1);
    std::vector<Character> flat(x.chars().begin(), x.chars().end());
    flat.insert(flat.end(), complement.chars().begin(), complement.chars().end());
    return GraySequence(2, x.length(), x.length(), std::move(flat));
}

GraySequence max_gray_cycle(unsigned p, std::size_t n, std::size_t k, const CycleOptions& options)
{
    const CaseTag tag = classify(p, n, k, options.parity);
    reject_seed_outside_case_ii(tag, options);
    switch (tag.theorem_case) {
    case TheoremCase::i:
        return build_hnk(p, n, k);
    case TheoremCase::ii:
        return build_n_equals_k(seed_for(n, options));
    case TheoremCase::iii: {
        OddPair pair = build_odd_pair(n, k);
        return options.variant == BaseVariant::gamma ? std::move(pair.gamma) : std::move(pair.rho);
    }
    case TheoremCase::iv:
        return build_even(n, k, options.parity);
    }
    throw ParameterError("unclassified parameters");
}

void for_each_term(unsigned p, std::size_t n, std::size_t k, const CycleOptions& options, const Sink& sink)
{
    const CaseTag tag = classify(p, n, k, options.parity);
    reject_seed_outside_case_ii(tag, options);
    switch (tag.theorem_case) {
    case TheoremCase::i: {
        const std::uint64_t count = checked_power(p, n);
        if (k == 1) {
            std::vector<Character> buffer(n);
            for (std::uint64_t i = 0; i < count; ++i) {
                reflected_term_into(p, i, buffer);
                sink(buffer);
            }
            return;
        }
        emit_hnk_level(build_hnk(p, n - 1, k - 1), sink);
        return;
    }
    case TheoremCase::ii: {
        const GraySequence cycle = build_n_equals_k(seed_for(n, options));
        sink(cycle.chars(0));
        sink(cycle.chars(1));
        return;
    }
    case TheoremCase::iii: {
        const std::uint64_t count = checked_power(2, n);
        if (k == 1) {
            std::vector<Character> buffer(n);
            for (std::uint64_t i = 0; i < count; ++i) {
                const auto source = options.variant == BaseVariant::gamma ? gamma_base_source(n, i)
                                                                          : rho_base_source(n, i);
                reflected_term_into(2, source, buffer);
                sink(buffer);
            }
            return;
        }
        const OddPair prev = build_odd_pair(n - 2, k - 2);
        emit_odd_level(options.variant == BaseVariant::gamma ? kGammaPrefixes : kRhoPrefixes, prev, sink);
        return;
    }
    case TheoremCase::iv: {
        static_cast<void>(checked_power(2, n));
        emit_even_level(parity_lead(options.parity), build_odd_pair(n - 1, k - 1).gamma, sink);
        return;
    }
    }
}

} // namespace graycycle
