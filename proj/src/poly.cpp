#include "outstanding/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace outstanding {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
    normalize();
}

Polynomial Polynomial::constant(const Rational& value) {
    return Polynomial({value});
}

Polynomial Polynomial::monomial(unsigned degree, const Rational& coefficient) {
    std::vector<Rational> coeffs(degree + 1, Rational(0));
    coeffs[degree] = coefficient;
    return Polynomial(std::move(coeffs));
}

void Polynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t degree) const {
    return degree < coefficients_.size() ? coefficients_[degree] : Rational(0);
}

Rational Polynomial::eval(const Rational& point) const {
    Rational result = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        result = result * point + *it;
    }
    return result;
}

Polynomial Polynomial::derivative() const {
    if (coefficients_.size() <= 1) {
        return {};
    }
    std::vector<Rational> coeffs(coefficients_.size() - 1);
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        coeffs[i - 1] = Rational(i) * coefficients_[i];
    }
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::shift() const {
    // Horner in (x+1): result <- result * (x+1) + c_i, top degree first.
    std::vector<Rational> acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] += acc[j];
            next[j + 1] += acc[j];
        }
        next[0] += *it;
        acc = std::move(next);
    }
    return Polynomial(std::move(acc));
}

Polynomial Polynomial::forward_difference(unsigned times) const {
    Polynomial result = *this;
    for (unsigned i = 0; i < times; ++i) {
        result = result.shift() - result;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (coefficients_.size() < other.coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] += other.coefficients_[i];
    }
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (coefficients_.size() < other.coefficients_.size()) {
        coefficients_.resize(other.coefficients_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
        coefficients_[i] -= other.coefficients_[i];
    }
    normalize();
    return *this;
}

Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
}

Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

Polynomial operator-(const Polynomial& p) {
    std::vector<Rational> coeffs(p.coefficients().size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = -p.coefficients()[i];
    }
    return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    std::vector<Rational> coeffs(lhs.coefficients().size() + rhs.coefficients().size() - 1,
                                 Rational(0));
    for (std::size_t i = 0; i < lhs.coefficients().size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients().size(); ++j) {
            coeffs[i + j] += lhs.coefficients()[i] * rhs.coefficients()[j];
        }
    }
    return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Rational& scalar, const Polynomial& p) {
    std::vector<Rational> coeffs(p.coefficients().size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        coeffs[i] = scalar * p.coefficients()[i];
    }
    return Polynomial(std::move(coeffs));
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result = result * base;
    }
    return result;
}

Polynomial binomial_polynomial(long long offset, unsigned m) {
    Polynomial result = Polynomial::constant(1);
    for (unsigned i = 0; i < m; ++i) {
        result = result * Polynomial({Rational(offset - static_cast<long long>(i)), Rational(1)});
    }
    return Rational(1, factorial(m)) * result;
}

BivariatePolynomial BivariatePolynomial::constant(const Rational& value) {
    return monomial(0, 0, value);
}

BivariatePolynomial BivariatePolynomial::monomial(unsigned degree_y, unsigned degree_t,
                                                  const Rational& coefficient) {
    BivariatePolynomial p;
    p.add_term(degree_y, degree_t, coefficient);
    return p;
}

Rational BivariatePolynomial::coeff(unsigned degree_y, unsigned degree_t) const {
    auto it = terms_.find({degree_y, degree_t});
    return it != terms_.end() ? it->second : Rational(0);
}

Polynomial BivariatePolynomial::substitute_t(const Rational& t) const {
    std::vector<Rational> coeffs;
    for (const auto& [key, value] : terms_) {
        const auto [degree_y, degree_t] = key;
        if (coeffs.size() <= degree_y) {
            coeffs.resize(degree_y + 1, Rational(0));
        }
        Rational power = 1;
        for (unsigned i = 0; i < degree_t; ++i) {
            power *= t;
        }
        coeffs[degree_y] += value * power;
    }
    return Polynomial(std::move(coeffs));
}

void BivariatePolynomial::add_term(unsigned degree_y, unsigned degree_t,
                                   const Rational& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace({degree_y, degree_t}, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [key, value] : other.terms_) {
        add_term(key.first, key.second, value);
    }
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
    for (const auto& [key, value] : other.terms_) {
        add_term(key.first, key.second, -value);
    }
    return *this;
}

BivariatePolynomial operator+(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
    lhs += rhs;
    return lhs;
}

BivariatePolynomial operator-(BivariatePolynomial lhs, const BivariatePolynomial& rhs) {
    lhs -= rhs;
    return lhs;
}

BivariatePolynomial operator*(const BivariatePolynomial& lhs, const BivariatePolynomial& rhs) {
    BivariatePolynomial result;
    for (const auto& [lkey, lvalue] : lhs.terms()) {
        for (const auto& [rkey, rvalue] : rhs.terms()) {
            result.add_term(lkey.first + rkey.first, lkey.second + rkey.second,
                            lvalue * rvalue);
        }
    }
    return result;
}

BivariatePolynomial operator*(const Rational& scalar, const BivariatePolynomial& p) {
    BivariatePolynomial result;
    for (const auto& [key, value] : p.terms()) {
        result.add_term(key.first, key.second, scalar * value);
    }
    return result;
}

BivariatePolynomial truncate_t(const BivariatePolynomial& p, unsigned max_t_degree) {
    BivariatePolynomial result;
    for (const auto& [key, value] : p.terms()) {
        if (key.second <= max_t_degree) {
            result.add_term(key.first, key.second, value);
        }
    }
    return result;
}

}  // namespace outstanding
