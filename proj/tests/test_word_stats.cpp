#include <doctest.h>

#include <algorithm>
#include <map>

#include "outstanding/oracle.hpp"
#include "outstanding/word_stats.hpp"

using namespace outstanding;

namespace {

Polynomial from_ints(std::initializer_list<long long> coeffs) {
    std::vector<Rational> r;
    for (long long c : coeffs) {
        r.push_back(Rational(c));
    }
    return Polynomial(std::move(r));
}

Integer integer_pow(long long base, long long exponent) {
    Integer result = 1;
    for (long long i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace

TEST_CASE("strong counts") {
    CHECK(strong_count({2, 2}, 1) == 3);
    CHECK(strong_count({2, 2}, 2) == 1);
    CHECK(strong_count({3, 2}, 1) == 5);
    CHECK(strong_count({3, 2}, 2) == 3);
    for (long long n = 1; n <= 6; ++n) {
        CHECK(strong_count({n, 1}, 1) == 1);
        CHECK(strong_count({n, 1}, 2) == 0);
        CHECK(strong_count({n, 1}, 0) == 0);
    }
    CHECK_THROWS_AS(strong_count({0, 2}, 1), std::invalid_argument);
}

TEST_CASE("strong count normalization") {
    for (long long k = 1; k <= 5; ++k) {
        for (long long n = 1; n <= 8; ++n) {
            Integer sum = 0;
            for (long long r = 0; r <= n; ++r) {
                sum += strong_count({n, k}, r);
            }
            CHECK(sum == integer_pow(k, n));
        }
    }
}

TEST_CASE("strong generating polynomial") {
    CHECK(strong_gf_words({2, 2}) == from_ints({0, 3, 1}));
    CHECK(strong_gf_words({5, 1}) == Polynomial::monomial(1));
    CHECK(strong_gf_words({1, 4}) == from_ints({0, 4}));
}

TEST_CASE("strong mean") {
    CHECK(strong_mean_words({2, 2}) == Rational(5, 4));
    CHECK(strong_mean_words({7, 1}) == 1);
    CHECK(strong_mean_words({3, 2}) == Rational(11, 8));
}

TEST_CASE("weak generating polynomial via forward differences") {
    CHECK(weak_gf_words({2, 2}) == from_ints({0, 1, 3}));
    CHECK(weak_gf_words({3, 2}) == from_ints({0, 1, 3, 4}));
    CHECK(weak_gf_words({4, 1}) == Polynomial::monomial(4));
    for (long long k = 1; k <= 5; ++k) {
        for (long long n = 1; n <= 8; ++n) {
            const Polynomial gf = weak_gf_words({n, k});
            CHECK(gf.eval(1) == Rational(integer_pow(k, n)));
            CHECK(gf.coeff(0) == 0);
        }
    }
}

TEST_CASE("three weak routes agree") {
    for (long long k = 1; k <= 5; ++k) {
        for (long long n = 1; n <= 8; ++n) {
            const WordParams p{n, k};
            const Polynomial gf = weak_gf_words(p);
            CHECK(gf == weak_gf_words_alternating(p));
            CHECK(gf == weak_gf_words_recurrence(p));
        }
    }
}

TEST_CASE("weak mean") {
    CHECK(weak_mean_words({3, 2}) == Rational(19, 8));
    CHECK(weak_mean_words({6, 1}) == 6);
    CHECK(weak_mean_words({2, 2}) == Rational(7, 4));
}

TEST_CASE("distributions match exhaustive enumeration") {
    for (long long k = 1; k <= 4; ++k) {
        for (long long n = 1; n <= 6; ++n) {
            CHECK(strong_gf_words({n, k}) ==
                  oracle::to_polynomial(oracle::word_distribution(n, k, oracle::Statistic::strong)));
            CHECK(weak_gf_words({n, k}) ==
                  oracle::to_polynomial(oracle::word_distribution(n, k, oracle::Statistic::weak)));
        }
    }
}

TEST_CASE("words using every letter reduce to the permutation counts") {
    // Words over [k] that use all k letters, with r strict records, counted
    // by enumeration; this is the m = k slice of the closed sum, so it must
    // equal [k r] {n k}.
    for (long long k = 1; k <= 4; ++k) {
        for (long long n = k; n <= 6; ++n) {
            std::map<std::size_t, Integer> by_records;
            oracle::for_each_word(n, k, [&](const oracle::Sequence& w) {
                std::vector<bool> seen(k, false);
                for (int letter : w) {
                    seen[letter - 1] = true;
                }
                if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
                    by_records[oracle::strong_positions(w).size()] += 1;
                }
            });
            for (long long r = 1; r <= k; ++r) {
                const Integer expected =
                    stirling_first_unsigned(static_cast<unsigned>(k), static_cast<unsigned>(r)) *
                    stirling_second(static_cast<unsigned>(n), static_cast<unsigned>(k));
                CHECK(by_records[static_cast<std::size_t>(r)] == expected);
            }
        }
    }
}

TEST_CASE("cleared binomial-product identity") {
    for (long long k = 1; k <= 6; ++k) {
        CHECK(gauss_identity_check(k));
    }
    // k = 1: both cleared sides are 1 - t + y, expanded here directly.
    const auto y = BivariatePolynomial::monomial(1, 0);
    const auto t = BivariatePolynomial::monomial(0, 1);
    const auto one = BivariatePolynomial::constant(1);
    const BivariatePolynomial lhs = (one - t) + y;       // l = 0 and l = 1 terms
    const BivariatePolynomial rhs = one + y - t;         // single factor
    CHECK(lhs == rhs);
    CHECK(lhs.coeff(0, 0) == 1);
    CHECK(lhs.coeff(0, 1) == -1);
    CHECK(lhs.coeff(1, 0) == 1);
}

TEST_CASE("bivariate series matches the strong counts") {
    CHECK(bivariate_strong_gf_check(1, 6));
    CHECK(bivariate_strong_gf_check(2, 4));
    CHECK(bivariate_strong_gf_check(3, 5));
}
