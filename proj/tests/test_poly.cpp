#include <doctest.h>

#include <random>

#include "outstanding/poly.hpp"
#include "test_util.hpp"

using namespace outstanding;

namespace {

Polynomial from_ints(std::initializer_list<long long> coeffs) {
    std::vector<Rational> r;
    for (long long c : coeffs) {
        r.push_back(Rational(c));
    }
    return Polynomial(std::move(r));
}

}  // namespace

TEST_CASE("arithmetic basics and canonical form") {
    const Polynomial x = Polynomial::monomial(1);
    CHECK(x + Polynomial::constant(1) == from_ints({1, 1}));
    CHECK(from_ints({1, 1}) * from_ints({1, -1}) == from_ints({1, 0, -1}));
    CHECK(Polynomial() * from_ints({3, 2, 1}) == Polynomial());
    CHECK(Rational(0) * from_ints({3, 2}) == Polynomial());
    // trailing zeros are stripped on construction and after arithmetic
    CHECK(Polynomial({Rational(1), Rational(0)}) == Polynomial::constant(1));
    CHECK(from_ints({1, 2}) - from_ints({0, 2}) == Polynomial::constant(1));
    CHECK(Polynomial().degree() == -1);
}

TEST_CASE("evaluation") {
    const Polynomial p = from_ints({0, 1, 2});  // x + 2x^2
    CHECK(p.eval(1) == 3);
    CHECK(Polynomial().eval(Rational(7, 3)) == 0);
    CHECK(Polynomial::monomial(2).eval(Rational(3, 2)) == Rational(9, 4));
}

TEST_CASE("derivative") {
    CHECK(Polynomial::monomial(3).derivative() == from_ints({0, 0, 3}));
    CHECK(Polynomial::constant(5).derivative() == Polynomial());
    CHECK(from_ints({0, 1, 2}).derivative() == from_ints({1, 4}));
}

TEST_CASE("shift re-expands p(x+1)") {
    CHECK(Polynomial::monomial(1).shift() == from_ints({1, 1}));
    CHECK(Polynomial::monomial(2).shift() == from_ints({1, 2, 1}));
    CHECK(from_ints({0, -1, 0, 1}).shift() == from_ints({0, 2, 3, 1}));  // (x+1)^3-(x+1)
}

TEST_CASE("forward difference") {
    CHECK(Polynomial::monomial(2).forward_difference() == from_ints({1, 2}));
    const Polynomial p = from_ints({3, 1, 4, 1});
    CHECK(p.forward_difference(0) == p);
    // x^2(x-1) steps to 3x^2 + x
    CHECK((Polynomial::monomial(2) * from_ints({-1, 1})).forward_difference() ==
          from_ints({0, 1, 3}));
}

TEST_CASE("forward difference properties on random polynomials") {
    std::mt19937 rng(7011982);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = test::random_polynomial(rng, 6);
        const Rational c = test::random_rational(rng);
        CHECK(p.forward_difference().eval(c) == p.eval(c + 1) - p.eval(c));
        for (unsigned times = 1; times <= 3; ++times) {
            if (static_cast<int>(times) <= p.degree()) {
                CHECK(p.forward_difference(times).degree() ==
                      p.degree() - static_cast<int>(times));
            }
        }
    }
}

TEST_CASE("binomial polynomial") {
    CHECK(binomial_polynomial(-1, 1) == from_ints({-1, 1}));
    CHECK(binomial_polynomial(0, 0) == Polynomial::constant(1));
    CHECK(binomial_polynomial(-1, 2) ==
          Polynomial({Rational(1), Rational(-3, 2), Rational(1, 2)}));

    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> offsets(-4, 4);
    std::uniform_int_distribution<unsigned> orders(0, 5);
    std::uniform_int_distribution<long long> points(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const long long offset = offsets(rng);
        const unsigned m = orders(rng);
        const long long j = points(rng);
        if (j + offset >= 0) {
            CHECK(binomial_polynomial(offset, m).eval(j) == Rational(binomial(j + offset, m)));
        }
    }
}

TEST_CASE("bivariate arithmetic agrees with substitution") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<unsigned> degs(0, 3);
    const auto random_bivariate = [&]() {
        BivariatePolynomial p;
        for (int terms = 0; terms < 5; ++terms) {
            p.add_term(degs(rng), degs(rng), test::random_rational(rng));
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        const BivariatePolynomial p = random_bivariate();
        const BivariatePolynomial q = random_bivariate();
        const Rational t = test::random_rational(rng);
        CHECK((p * q).substitute_t(t) == p.substitute_t(t) * q.substitute_t(t));
        CHECK((p + q).substitute_t(t) == p.substitute_t(t) + q.substitute_t(t));
    }
}

TEST_CASE("bivariate canonical form and truncation") {
    BivariatePolynomial p = BivariatePolynomial::monomial(1, 2, Rational(3));
    p.add_term(1, 2, Rational(-3));
    CHECK(p.is_zero());
    CHECK(p == BivariatePolynomial());

    BivariatePolynomial q = BivariatePolynomial::monomial(0, 1);
    q.add_term(2, 4, Rational(5));
    const BivariatePolynomial cut = truncate_t(q, 2);
    CHECK(cut.coeff(0, 1) == 1);
    CHECK(cut.coeff(2, 4) == 0);
}
