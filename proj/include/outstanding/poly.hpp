#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "outstanding/exact.hpp"

namespace outstanding {

// Dense univariate polynomial over Rational, stored in ascending degree with
// no trailing zero coefficient. The zero polynomial keeps an empty list, so
// equality is plain structural comparison.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& value);
    static Polynomial monomial(unsigned degree, const Rational& coefficient = 1);

    bool is_zero() const { return coefficients_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

    // Coefficient of x^degree; 0 beyond the stored range.
    Rational coeff(std::size_t degree) const;

    const std::vector<Rational>& coefficients() const { return coefficients_; }

    Rational eval(const Rational& point) const;

    Polynomial derivative() const;

    // p(x+1), re-expanded in powers of x.
    Polynomial shift() const;

    // Iterated forward difference p(x+1) - p(x); times = 0 is the identity.
    Polynomial forward_difference(unsigned times = 1) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    bool operator==(const Polynomial&) const = default;

private:
    void normalize();

    std::vector<Rational> coefficients_;
};

Polynomial operator+(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
Polynomial operator*(const Rational& scalar, const Polynomial& p);

Polynomial pow(const Polynomial& base, unsigned exponent);

// C(x + offset, m) = (x+offset)(x+offset-1)...(x+offset-m+1) / m!
Polynomial binomial_polynomial(long long offset, unsigned m);

// Sparse bivariate polynomial in (y, t). Zero coefficients are never stored,
// so the term map is a canonical form.
class BivariatePolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;  // (degree in y, degree in t)

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rational& value);
    static BivariatePolynomial monomial(unsigned degree_y, unsigned degree_t,
                                        const Rational& coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(unsigned degree_y, unsigned degree_t) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    // Substitutes a fixed rational for t, leaving a polynomial in y.
    Polynomial substitute_t(const Rational& t) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    BivariatePolynomial& operator-=(const BivariatePolynomial& other);

    bool operator==(const BivariatePolynomial&) const = default;

    void add_term(unsigned degree_y, unsigned degree_t, const Rational& coefficient);

private:
    std::map<Key, Rational> terms_;
};

BivariatePolynomial operator+(BivariatePolynomial lhs, const BivariatePolynomial& rhs);
BivariatePolynomial operator-(BivariatePolynomial lhs, const BivariatePolynomial& rhs);
BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs);
BivariatePolynomial operator*(const Rational& scalar, const BivariatePolynomial& p);

// Drops every term whose t-degree exceeds max_t_degree.
BivariatePolynomial truncate_t(const BivariatePolynomial& p, unsigned max_t_degree);

}  // namespace outstanding
