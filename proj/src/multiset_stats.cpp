#include "outstanding/multiset_stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace outstanding {

MultisetSpec::MultisetSpec(std::vector<long long> multiplicities)
    : multiplicities_(std::move(multiplicities)) {
    if (multiplicities_.empty()) {
        throw std::invalid_argument("MultisetSpec: at least one letter is required");
    }
    for (long long a : multiplicities_) {
        if (a < 1) {
            throw std::invalid_argument("MultisetSpec: multiplicities must be positive");
        }
        total_ += a;
    }
}

Integer MultisetSpec::permutation_count() const {
    Integer count = factorial(static_cast<unsigned>(total_));
    for (long long a : multiplicities_) {
        count /= factorial(static_cast<unsigned>(a));
    }
    return count;
}

Polynomial strong_gf(const MultisetSpec& m) {
    // Placing the copies of each letter in turn, smallest first, contributes
    // the factor C(rem-1, a_i) + C(rem-1, a_i - 1) x, where rem counts the
    // slots still open. The x records whether a copy landed in the leftmost
    // open slot and became a strict record.
    Polynomial result = Polynomial::constant(1);
    long long remaining = m.total();
    for (long long a : m.multiplicities()) {
        result = result * Polynomial({Rational(binomial(remaining - 1, a)),
                                      Rational(binomial(remaining - 1, a - 1))});
        remaining -= a;
    }
    return result;
}

Polynomial strong_prob_gf(const MultisetSpec& m) {
    return Rational(1, m.permutation_count()) * strong_gf(m);
}

Rational strong_mean(const MultisetSpec& m) {
    Rational mean = 0;
    long long suffix = m.total();
    for (long long a : m.multiplicities()) {
        mean += Rational(a, suffix);
        suffix -= a;
    }
    return mean;
}

Polynomial phi(long long total, long long multiplicity) {
    if (multiplicity < 0 || multiplicity > total) {
        throw std::invalid_argument("phi: multiplicity must lie in [0, total]");
    }
    std::vector<Rational> coeffs(multiplicity + 1);
    for (long long m = 0; m <= multiplicity; ++m) {
        // m = multiplicity = total leaves nothing to place: one empty choice.
        coeffs[m] = (total - m - 1 >= 0) ? Rational(binomial(total - m - 1, multiplicity - m))
                                         : Rational(1);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial weak_gf(const MultisetSpec& m) {
    Polynomial result = Polynomial::constant(1);
    long long remaining = m.total();
    const auto& mult = m.multiplicities();
    for (std::size_t i = 0; i + 1 < mult.size(); ++i) {
        result = result * phi(remaining, mult[i]);
        remaining -= mult[i];
    }
    // Every copy of the largest letter is a weak record.
    return result * Polynomial::monomial(static_cast<unsigned>(mult.back()));
}

Rational weak_mean(const MultisetSpec& m) {
    Rational mean = 0;
    long long suffix = m.total();
    for (long long a : m.multiplicities()) {
        suffix -= a;
        mean += Rational(a, suffix + 1);
    }
    return mean;
}

GapBound mean_gap_and_bound(const MultisetSpec& m) {
    Rational gap = 0;
    long long suffix = m.total();
    long long largest = 0;
    for (long long a : m.multiplicities()) {
        gap += Rational(a * (a - 1), (suffix - a + 1) * suffix);
        suffix -= a;
        largest = std::max(largest, a);
    }
    Rational bound = 0;
    for (std::size_t j = 1; j <= m.letter_count(); ++j) {
        bound += Rational(1, static_cast<long long>(j) * static_cast<long long>(j));
    }
    bound *= Rational(largest * (largest - 1));
    return {gap, bound};
}

DarrochCheck darroch_check(const MultisetSpec& m) {
    const Polynomial gf = strong_gf(m);
    long long mode = 0;
    Rational best = 0;
    for (std::size_t r = 0; r < gf.coefficients().size(); ++r) {
        if (gf.coefficients()[r] > best) {
            best = gf.coefficients()[r];
            mode = static_cast<long long>(r);
        }
    }
    const Rational mean = strong_mean(m);
    const Rational distance = abs(Rational(mode) - mean);
    return {mode, mean, distance <= 1};
}

}  // namespace outstanding
