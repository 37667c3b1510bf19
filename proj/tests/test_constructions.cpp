#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "graycycle/constructions.hpp"
#include "graycycle/errors.hpp"
#include "graycycle/reflected.hpp"
#include "graycycle/text_format.hpp"
#include "graycycle/verifier.hpp"
#include "oracles.hpp"

using namespace graycycle;

namespace {

using Strings = std::vector<std::string>;

Strings as_strings(const GraySequence& seq)
{
    Strings out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out.push_back(to_string(seq.chars(i)));
    }
    return out;
}

Strings slice(const Strings& v, std::size_t from, std::size_t to)
{
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to)};
}

// Cyclic steps all at distance k, all terms distinct, checked on strings.
void check_cycle_shape(const Strings& terms, std::size_t k)
{
    for (std::size_t i = 0; i < terms.size(); ++i) {
        CHECK(oracle::distance(terms[i], terms[(i + 1) % terms.size()]) == k);
    }
    CHECK(std::set<std::string>(terms.begin(), terms.end()).size() == terms.size());
}

} // namespace

TEST_CASE("classify")
{
    CHECK(classify(3, 4, 2).theorem_case == TheoremCase::i);
    CHECK(classify(5, 2, 2).theorem_case == TheoremCase::i);
    CHECK(classify(2, 5, 5).theorem_case == TheoremCase::ii);
    CHECK(classify(2, 5, 3).theorem_case == TheoremCase::iii);
    CHECK(classify(2, 5, 2) == CaseTag{TheoremCase::iv, Parity::even});
    CHECK(classify(2, 5, 2, Parity::odd) == CaseTag{TheoremCase::iv, Parity::odd});
    CHECK_FALSE(classify(2, 5, 3, Parity::odd).parity_class.has_value());
    CHECK_THROWS_AS(classify(2, 2, 3), ParameterError);
    CHECK_THROWS_AS(classify(3, 2, 0), ParameterError);
    CHECK_THROWS_AS(classify(1, 2, 1), ParameterError);
}

TEST_CASE("classify: exactly one case per triple")
{
    for (unsigned p = 2; p <= 5; ++p) {
        for (std::size_t n = 1; n <= 9; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                const auto c = classify(p, n, k).theorem_case;
                const int matches = (p >= 3) + (p == 2 && n == k) + (p == 2 && n >= k + 1 && k % 2 == 1) +
                                    (p == 2 && n >= k + 1 && k % 2 == 0);
                CHECK(matches == 1);
                CHECK((c == TheoremCase::i) == (p >= 3));
                CHECK((c == TheoremCase::ii) == (p == 2 && n == k));
                CHECK((c == TheoremCase::iii) == (p == 2 && n > k && k % 2 == 1));
                CHECK((c == TheoremCase::iv) == (p == 2 && n > k && k % 2 == 0));
            }
        }
    }
}

TEST_CASE("lambda_max")
{
    CHECK(lambda_max(3, 4, 2) == 81);
    CHECK(lambda_max(2, 7, 7) == 2);
    CHECK(lambda_max(2, 5, 2) == 16);
    CHECK(lambda_max(2, 5, 3) == 32);
    CHECK_THROWS_AS(lambda_max(2, 64, 3), CapacityError);
    CHECK_THROWS_AS(lambda_max(3, 41, 2), CapacityError);
    CHECK(lambda_max(2, 64, 2) == (std::uint64_t{1} << 63));
    CHECK_THROWS_AS(lambda_max(2, 3, 4), ParameterError);
}

TEST_CASE("build_hnk examples")
{
    const auto h = as_strings(build_hnk(3, 3, 2));
    REQUIRE(h.size() == 27);
    CHECK(slice(h, 0, 9) == Strings{"000", "101", "202", "012", "110", "211", "021", "122", "220"});
    CHECK(slice(h, 9, 18) == Strings{"100", "201", "002", "112", "210", "011", "121", "222", "020"});
    CHECK(slice(h, 18, 27) == Strings{"200", "001", "102", "212", "010", "111", "221", "022", "120"});
    CHECK(as_strings(build_hnk(3, 1, 1)) == Strings{"0", "1", "2"});
    CHECK(build_hnk(4, 3, 1) == p_ary_reflected(4, 3));
    CHECK_THROWS_AS(build_hnk(2, 3, 2), ParameterError);
    CHECK_THROWS_AS(build_hnk(3, 2, 3), ParameterError);
    CHECK_THROWS_AS(build_hnk(3, 20, 2), CapacityError);
}

TEST_CASE("build_hnk: block boundaries and shared suffixes")
{
    std::mt19937_64 rng(3);
    for (unsigned p : {3U, 4U, 5U}) {
        for (std::size_t n = 2; checked_power(p, n) <= 4096; ++n) {
            for (std::size_t k = 2; k <= n; ++k) {
                const auto h = build_hnk(p, n, k);
                const std::size_t block = h.size() / p;
                for (std::size_t q = 1; q < p; ++q) {
                    CHECK(hamming_distance(h.chars(q * block - 1), h.chars(q * block)) == k);
                }
                std::uniform_int_distribution<std::size_t> pick_r(0, block - 1);
                std::uniform_int_distribution<std::size_t> pick_q(0, p - 1);
                for (int trial = 0; trial < 50; ++trial) {
                    const std::size_t r = pick_r(rng), q1 = pick_q(rng), q2 = pick_q(rng);
                    if (q1 == q2) {
                        continue;
                    }
                    const auto a = h.chars(q1 * block + r), b = h.chars(q2 * block + r);
                    CHECK(a[0] != b[0]);
                    CHECK(std::equal(a.begin() + 1, a.end(), b.begin() + 1));
                }
            }
        }
    }
}

TEST_CASE("build_hnk is a sigma_k-Gray cycle over all words")
{
    for (unsigned p : {3U, 4U}) {
        for (std::size_t n = 1; checked_power(p, n) <= 1024; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                const auto h = build_hnk(p, n, k);
                CHECK(h.k() == k);
                CHECK(h.size() == checked_power(p, n));
                check_cycle_shape(as_strings(h), k);
            }
        }
    }
}

TEST_CASE("build_odd_pair examples")
{
    const auto pair = build_odd_pair(5, 3);
    const auto g = as_strings(pair.gamma);
    REQUIRE(g.size() == 32);
    CHECK(slice(g, 0, 8) == Strings{"00000", "11100", "00101", "11111", "00110", "11010", "00011", "11001"});
    CHECK(slice(g, 8, 16) == Strings{"01100", "10000", "01001", "10011", "01010", "10110", "01111", "10101"});
    CHECK(slice(g, 16, 24) == Strings{"11000", "00100", "11101", "00111", "11110", "00010", "11011", "00001"});
    CHECK(slice(g, 24, 32) == Strings{"10100", "01000", "10001", "01011", "10010", "01110", "10111", "01101"});

    const auto base = build_odd_pair(3, 1);
    CHECK(base.gamma == gamma_base(3));
    CHECK(base.rho == rho_base(3));

    CHECK_THROWS_AS(build_odd_pair(5, 2), ParameterError);
    CHECK_THROWS_AS(build_odd_pair(3, 3), ParameterError);
    CHECK_THROWS_AS(build_odd_pair(2, 3), ParameterError);
}

TEST_CASE("build_odd_pair: rho follows the substituted prefixes")
{
    // rho^{5,3}[0] = 10 . gamma^{3,1}[0], rho^{5,3}[last] = 00 . rho^{3,1}[last] (r odd -> 11).
    const auto pair = build_odd_pair(5, 3);
    CHECK(to_string(pair.rho.chars(0)) == "10000");
    CHECK(to_string(pair.rho.chars(31)) == "11101");
}

TEST_CASE("build_odd_pair: both cycles at every level, cross distance k+1")
{
    for (std::size_t n = 2; n <= 12; ++n) {
        for (std::size_t k = 1; k < n; k += 2) {
            std::vector<std::size_t> levels;
            const auto pair = build_odd_pair(n, k, [&](const OddPair& level, std::size_t level_k) {
                levels.push_back(level_k);
                const std::size_t last = level.gamma.size() - 1;
                CHECK(level.gamma.k() == level_k);
                CHECK(hamming_distance(level.gamma.chars(0), level.rho.chars(last)) == level_k + 1);
                CHECK(hamming_distance(level.rho.chars(0), level.gamma.chars(last)) == level_k + 1);
            });
            CHECK(levels.size() == (k - 1) / 2 + 1);
            CHECK(levels.back() == k);
            CHECK(pair.gamma.size() == checked_power(2, n));
            check_cycle_shape(as_strings(pair.gamma), k);
            check_cycle_shape(as_strings(pair.rho), k);
        }
    }
}

TEST_CASE("build_even examples")
{
    const auto even = build_even(6, 4, Parity::even);
    CHECK(to_string(even.chars(0)) == "000000");
    CHECK(to_string(even.chars(1)) == "111100");
    CHECK(to_string(build_even(6, 4, Parity::odd).chars(0)) == "100000");

    // theta^i(0) in front of gamma_base(2) = (00, 10, 11, 01).
    CHECK(as_strings(build_even(3, 2, Parity::even)) == Strings{"000", "110", "011", "101"});
    CHECK(as_strings(build_even(3, 2, Parity::odd)) == Strings{"100", "010", "111", "001"});

    CHECK_THROWS_AS(build_even(5, 3, Parity::even), ParameterError);
    CHECK_THROWS_AS(build_even(4, 4, Parity::even), ParameterError);
}

TEST_CASE("build_even covers exactly one parity class")
{
    for (std::size_t n = 3; n <= 12; ++n) {
        for (std::size_t k = 2; k < n; k += 2) {
            for (Parity parity : {Parity::even, Parity::odd}) {
                const auto seq = build_even(n, k, parity);
                CHECK(seq.size() == checked_power(2, n - 1));
                CHECK(check_parity_class(seq) == (parity == Parity::even ? ParityClass::even : ParityClass::odd));
                check_cycle_shape(as_strings(seq), k);
            }
        }
    }
}

TEST_CASE("build_n_equals_k")
{
    const Alphabet binary(2);
    CHECK(as_strings(build_n_equals_k(parse_word("000", binary))) == Strings{"000", "111"});
    CHECK(as_strings(build_n_equals_k(parse_word("10", binary))) == Strings{"10", "01"});
    CHECK(as_strings(build_n_equals_k(parse_word("0", binary))) == Strings{"0", "1"});
    CHECK(build_n_equals_k(parse_word("0110", binary)).k() == 4);
    CHECK_THROWS_AS(build_n_equals_k(parse_word("012", Alphabet(3))), ParameterError);
}

TEST_CASE("max_gray_cycle dispatch")
{
    CHECK(max_gray_cycle(3, 3, 2) == build_hnk(3, 3, 2));
    CHECK(as_strings(max_gray_cycle(2, 4, 4)) == Strings{"0000", "1111"});

    const auto iv = max_gray_cycle(2, 5, 2);
    CHECK(iv.size() == lambda_max(2, 5, 2));
    CHECK(verify_gray_cycle(iv, parity_class_words(5, Parity::even)).passed());

    CHECK(max_gray_cycle(2, 5, 3) == build_odd_pair(5, 3).gamma);
    CycleOptions rho;
    rho.variant = BaseVariant::rho;
    CHECK(max_gray_cycle(2, 5, 3, rho) == build_odd_pair(5, 3).rho);

    CycleOptions seeded;
    seeded.seed_word = parse_word("0110", Alphabet(2));
    CHECK(as_strings(max_gray_cycle(2, 4, 4, seeded)) == Strings{"0110", "1001"});
    CHECK_THROWS_AS(max_gray_cycle(2, 5, 4, seeded), ParameterError);
    CHECK_THROWS_AS(max_gray_cycle(2, 5, 5, seeded), ParameterError);
    CHECK_THROWS_AS(max_gray_cycle(3, 2, 3), ParameterError);
}

TEST_CASE("for_each_term emits the same terms as max_gray_cycle")
{
    for (unsigned p : {2U, 3U, 4U}) {
        for (std::size_t n = 1; checked_power(p, n) <= 1024; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                for (int variant = 0; variant < 2; ++variant) {
                    CycleOptions options;
                    options.parity = variant ? Parity::odd : Parity::even;
                    options.variant = variant ? BaseVariant::rho : BaseVariant::gamma;
                    std::vector<Character> streamed;
                    for_each_term(p, n, k, options, [&](std::span<const Character> t) {
                        streamed.insert(streamed.end(), t.begin(), t.end());
                    });
                    const auto materialized = max_gray_cycle(p, n, k, options);
                    CHECK(std::equal(streamed.begin(), streamed.end(), materialized.flat().begin(),
                                     materialized.flat().end()));
                }
            }
        }
    }
}
