#include "outstanding/geom_form.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace outstanding {

namespace {

const Polynomial& x_monomial() {
    static const Polynomial x = Polynomial::monomial(1);
    return x;
}

const Polynomial& one_minus_x() {
    static const Polynomial p({Rational(1), Rational(-1)});
    return p;
}

// Exact quotient P / (1-x); requires P(1) == 0. If P = (1-x) Q then the
// coefficients of Q are the prefix sums of those of P.
Polynomial divide_by_one_minus_x(const Polynomial& p) {
    if (p.is_zero()) {
        return {};
    }
    std::vector<Rational> quotient(p.coefficients().size() - 1);
    Rational run = 0;
    for (std::size_t i = 0; i + 1 < p.coefficients().size(); ++i) {
        run += p.coefficients()[i];
        quotient[i] = run;
    }
    return Polynomial(std::move(quotient));
}

}  // namespace

GeomForm::GeomForm(Polynomial numerator, unsigned pole_order)
    : numerator_(std::move(numerator)), pole_order_(pole_order) {
    canonicalize();
}

void GeomForm::canonicalize() {
    if (numerator_.is_zero()) {
        pole_order_ = 0;
        return;
    }
    while (pole_order_ > 0 && numerator_.eval(1) == 0) {
        numerator_ = divide_by_one_minus_x(numerator_);
        --pole_order_;
    }
}

GeomForm GeomForm::geometric() {
    return GeomForm(Polynomial::constant(1), 1);
}

GeomForm GeomForm::constant(const Rational& value) {
    return GeomForm(Polynomial::constant(value), 0);
}

Rational GeomForm::coeff(long long k) const {
    if (k < 0) {
        return 0;
    }
    if (pole_order_ == 0) {
        return numerator_.coeff(static_cast<std::size_t>(k));
    }
    Rational sum = 0;
    const long long top = std::min<long long>(k, numerator_.degree());
    for (long long j = 0; j <= top; ++j) {
        sum += numerator_.coeff(static_cast<std::size_t>(j)) *
               Rational(binomial(pole_order_ + k - j - 1, pole_order_ - 1));
    }
    return sum;
}

GeomForm& GeomForm::operator+=(const GeomForm& other) {
    const unsigned common = std::max(pole_order_, other.pole_order_);
    Polynomial lhs = numerator_ * pow(one_minus_x(), common - pole_order_);
    Polynomial rhs = other.numerator_ * pow(one_minus_x(), common - other.pole_order_);
    numerator_ = lhs + rhs;
    pole_order_ = common;
    canonicalize();
    return *this;
}

GeomForm& GeomForm::operator-=(const GeomForm& other) {
    return *this += Rational(-1) * other;
}

GeomForm operator+(GeomForm lhs, const GeomForm& rhs) {
    lhs += rhs;
    return lhs;
}

GeomForm operator-(GeomForm lhs, const GeomForm& rhs) {
    lhs -= rhs;
    return lhs;
}

GeomForm operator*(const Rational& scalar, const GeomForm& f) {
    return GeomForm(scalar * f.numerator(), f.pole_order());
}

GeomForm omega_S(const GeomForm& f) {
    return GeomForm(x_monomial() * f.numerator(), f.pole_order() + 1);
}

GeomForm omega_W(const GeomForm& f) {
    return GeomForm(f.numerator(), f.pole_order() + 1);
}

// x d/dx [P/(1-x)^r] = (x P'(x)(1-x) + r x P(x)) / (1-x)^{r+1}
GeomForm omega_star(const GeomForm& f) {
    Polynomial numerator = x_monomial() * f.numerator().derivative() * one_minus_x() +
                           Rational(f.pole_order()) * (x_monomial() * f.numerator());
    return GeomForm(std::move(numerator), f.pole_order() + 1);
}

GeomForm omega_Sbar(const GeomForm& f) {
    Polynomial numerator = x_monomial() * f.numerator().derivative() * one_minus_x() +
                           Rational(f.pole_order()) * (x_monomial() * f.numerator()) -
                           x_monomial() * f.numerator();
    return GeomForm(std::move(numerator), f.pole_order() + 1);
}

GeomForm omega_Obar(const GeomForm& f) {
    Polynomial numerator = x_monomial() * f.numerator().derivative() * one_minus_x() +
                           Rational(f.pole_order()) * (x_monomial() * f.numerator()) -
                           f.numerator();
    return GeomForm(std::move(numerator), f.pole_order() + 1);
}

}  // namespace outstanding
