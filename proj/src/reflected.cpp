#include "graycycle/reflected.hpp"

#include <string>
#include <vector>

#include "graycycle/errors.hpp"

namespace graycycle {

namespace {

std::uint64_t term_count(unsigned p, std::size_t n)
{
    if (n < 1) {
        throw ParameterError("word length n must be at least 1");
    }
    static_cast<void>(Alphabet(p));
    return checked_power(p, n);
}

template <typename IndexMap>
GraySequence materialize_binary(std::size_t n, IndexMap source_index)
{
    const auto count = term_count(2, n);
    require_materializable(count);
    std::vector<Character> flat(count * n);
    for (std::uint64_t i = 0; i < count; ++i) {
        reflected_term_into(2, source_index(i), std::span<Character>(flat).subspan(i * n, n));
    }
    return GraySequence(2, n, 1, std::move(flat));
}

} // namespace

void reflected_term_into(unsigned p, std::uint64_t i, std::span<Character> out)
{
    // Fill digits least-significant first, then difference against the next
    // more significant digit.
    std::uint64_t rest = i;
    for (std::size_t j = out.size(); j-- > 0;) {
        out[j] = static_cast<Character>(rest % p);
        rest /= p;
    }
    if (rest != 0) {
        throw ParameterError("term index " + std::to_string(i) + " out of range for p = " +
                             std::to_string(p) + ", n = " + std::to_string(out.size()));
    }
    Character previous = 0;
    for (auto& c : out) {
        const Character digit = c;
        c = static_cast<Character>((digit + p - previous) % p);
        previous = digit;
    }
}

Word reflected_term_at(unsigned p, std::size_t n, std::uint64_t i)
{
    const auto count = term_count(p, n);
    if (i >= count) {
        throw ParameterError("term index " + std::to_string(i) + " outside [0, " +
                             std::to_string(count) + ")");
    }
    std::vector<Character> chars(n);
    reflected_term_into(p, i, chars);
    return Word(Alphabet(p), std::move(chars));
}

GraySequence binary_reflected(std::size_t n)
{
    return materialize_binary(n, [](std::uint64_t i) { return i; });
}

GraySequence p_ary_reflected(unsigned p, std::size_t n)
{
    const auto count = term_count(p, n);
    require_materializable(count);
    std::vector<Character> flat(count * n);
    for (std::uint64_t i = 0; i < count; ++i) {
        reflected_term_into(p, i, std::span<Character>(flat).subspan(i * n, n));
    }
    return GraySequence(p, n, 1, std::move(flat));
}

std::uint64_t gamma_base_source(std::size_t n0, std::uint64_t i)
{
    return i == 0 ? 0 : checked_power(2, n0) - i;
}

std::uint64_t rho_base_source(std::size_t n0, std::uint64_t i)
{
    return i == 0 ? checked_power(2, n0) - 1 : i - 1;
}

GraySequence gamma_base(std::size_t n0)
{
    return materialize_binary(n0, [n0](std::uint64_t i) { return gamma_base_source(n0, i); });
}

GraySequence rho_base(std::size_t n0)
{
    return materialize_binary(n0, [n0](std::uint64_t i) { return rho_base_source(n0, i); });
}

} // namespace graycycle
