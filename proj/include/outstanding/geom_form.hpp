#pragma once

#include "outstanding/exact.hpp"
#include "outstanding/poly.hpp"

namespace outstanding {

// Generating function of the shape P(x) / (1-x)^r. This class of functions
// is closed under the five one-letter template extension operators below.
//
// Canonical form: every (1-x) factor the pole order can absorb is divided
// out of the numerator, and the zero function is 0 / (1-x)^0. Equality is
// therefore structural.
class GeomForm {
public:
    GeomForm() = default;  // the zero function
    GeomForm(Polynomial numerator, unsigned pole_order);

    // 1/(1-x): every coefficient is 1. This is the series of the empty
    // template (one empty word per alphabet), the seed every template fold
    // starts from.
    static GeomForm geometric();

    static GeomForm constant(const Rational& value);

    const Polynomial& numerator() const { return numerator_; }
    unsigned pole_order() const { return pole_order_; }
    bool is_zero() const { return numerator_.is_zero(); }

    // Coefficient of x^k:  [x^k] P(x)/(1-x)^r = sum_j p_j C(r+k-j-1, r-1).
    Rational coeff(long long k) const;

    GeomForm& operator+=(const GeomForm& other);
    GeomForm& operator-=(const GeomForm& other);

    bool operator==(const GeomForm&) const = default;

private:
    void canonicalize();

    Polynomial numerator_;
    unsigned pole_order_ = 0;
};

GeomForm operator+(GeomForm lhs, const GeomForm& rhs);
GeomForm operator-(GeomForm lhs, const GeomForm& rhs);
GeomForm operator*(const Rational& scalar, const GeomForm& f);

// The one-letter template extensions: adjoin a strict record, a weak record,
// an unconstrained letter, a non-record (not strict), or a dominated letter.
GeomForm omega_S(const GeomForm& f);     // x f / (1-x)
GeomForm omega_W(const GeomForm& f);     // f / (1-x)
GeomForm omega_star(const GeomForm& f);  // x df/dx
GeomForm omega_Sbar(const GeomForm& f);  // x df/dx - x f / (1-x)
GeomForm omega_Obar(const GeomForm& f);  // x df/dx - f / (1-x)

}  // namespace outstanding
