#include "outstanding/word_stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace outstanding {

namespace {

void validate(const WordParams& p) {
    if (p.length < 1 || p.alphabet_size < 1) {
        throw std::invalid_argument("WordParams: length and alphabet size must be positive");
    }
}

Integer integer_pow(long long base, long long exponent) {
    Integer result = 1;
    for (long long i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace

Integer strong_count(const WordParams& p, long long records) {
    validate(p);
    if (records < 0) {
        return 0;
    }
    Integer count = 0;
    const long long top = std::min(p.length, p.alphabet_size);
    for (long long m = std::max<long long>(records, 1); m <= top; ++m) {
        count += binomial(p.alphabet_size, m) *
                 stirling_first_unsigned(static_cast<unsigned>(m), static_cast<unsigned>(records)) *
                 stirling_second(static_cast<unsigned>(p.length), static_cast<unsigned>(m));
    }
    return count;
}

Polynomial strong_gf_words(const WordParams& p) {
    validate(p);
    const long long top = std::min(p.length, p.alphabet_size);
    std::vector<Rational> coeffs(top + 1, Rational(0));
    for (long long r = 1; r <= top; ++r) {
        coeffs[r] = Rational(strong_count(p, r));
    }
    return Polynomial(std::move(coeffs));
}

Rational strong_mean_words(const WordParams& p) {
    validate(p);
    Integer weighted = 0;
    for (long long r = 1; r <= std::min(p.length, p.alphabet_size); ++r) {
        weighted += r * strong_count(p, r);
    }
    return Rational(weighted, integer_pow(p.alphabet_size, p.length));
}

Polynomial weak_gf_words(const WordParams& p) {
    validate(p);
    const unsigned k = static_cast<unsigned>(p.alphabet_size);
    const Polynomial base = Polynomial::monomial(static_cast<unsigned>(p.length)) *
                            binomial_polynomial(-1, k - 1);
    return base.forward_difference(k - 1);
}

Polynomial weak_gf_words_alternating(const WordParams& p) {
    validate(p);
    const long long k = p.alphabet_size;
    Polynomial result;
    for (long long t = 0; t <= k - 1; ++t) {
        const Rational sign = ((k - 1 - t) % 2 == 0) ? 1 : -1;
        const Polynomial term = pow(Polynomial({Rational(t), Rational(1)}),
                                    static_cast<unsigned>(p.length)) *
                                binomial_polynomial(t - 1, static_cast<unsigned>(k - 1));
        result += (sign * Rational(binomial(k - 1, t))) * term;
    }
    return result;
}

Polynomial weak_gf_words_recurrence(const WordParams& p) {
    validate(p);
    // table[kk][nn] for alphabets 0..k and lengths 1..n; an empty alphabet
    // admits no words at all.
    std::vector<std::vector<Polynomial>> table(p.alphabet_size + 1,
                                               std::vector<Polynomial>(p.length + 1));
    for (long long kk = 1; kk <= p.alphabet_size; ++kk) {
        for (long long nn = 1; nn <= p.length; ++nn) {
            Polynomial sum;
            for (long long m = 0; m <= nn - 1; ++m) {
                // l is the length of the leading block of smallest letters;
                // it is bounded by their multiplicity m, not by the alphabet.
                for (long long l = 0; l <= m; ++l) {
                    const Integer weight = binomial(nn - l - 1, m - l);
                    if (weight == 0) {
                        continue;
                    }
                    sum += Rational(weight) *
                           (Polynomial::monomial(static_cast<unsigned>(l)) * table[kk - 1][nn - m]);
                }
            }
            // The all-smallest-letter word contributes x^nn.
            sum += Polynomial::monomial(static_cast<unsigned>(nn));
            table[kk][nn] = std::move(sum);
        }
    }
    return table[p.alphabet_size][p.length];
}

Rational weak_mean_words(const WordParams& p) {
    validate(p);
    const Polynomial gf = weak_gf_words(p);
    return gf.derivative().eval(1) / Rational(integer_pow(p.alphabet_size, p.length));
}

bool gauss_identity_check(long long alphabet_size) {
    if (alphabet_size < 1) {
        throw std::invalid_argument("gauss_identity_check: alphabet size must be positive");
    }
    const long long k = alphabet_size;
    const auto y = BivariatePolynomial::monomial(1, 0);
    const auto t = BivariatePolynomial::monomial(0, 1);
    const auto one = BivariatePolynomial::constant(1);

    // Both sides are multiplied through by prod_{j=1}^{k} (1 - j t).
    BivariatePolynomial lhs;
    for (long long l = 0; l <= k; ++l) {
        BivariatePolynomial term = Rational(binomial(k, l)) * one;
        for (long long j = 1; j <= l; ++j) {
            term = term * (y + Rational(j - 1) * t);
        }
        for (long long j = l + 1; j <= k; ++j) {
            term = term * (one - Rational(j) * t);
        }
        lhs += term;
    }

    BivariatePolynomial rhs = one;
    for (long long j = 1; j <= k; ++j) {
        rhs = rhs * (one + y - Rational(j) * t);
    }

    return lhs == rhs;
}

bool bivariate_strong_gf_check(long long alphabet_size, long long order) {
    if (alphabet_size < 1 || order < 1) {
        throw std::invalid_argument("bivariate_strong_gf_check: arguments must be positive");
    }
    const unsigned max_t = static_cast<unsigned>(order);

    // prod_j (1 + y / (1 - j t)), with 1/(1 - j t) expanded as a geometric
    // series truncated at t^order.
    BivariatePolynomial product = BivariatePolynomial::constant(1);
    for (long long j = 1; j <= alphabet_size; ++j) {
        BivariatePolynomial factor = BivariatePolynomial::constant(1);
        Rational power = 1;
        for (unsigned i = 0; i <= max_t; ++i) {
            factor.add_term(1, i, power);
            power *= j;
        }
        product = truncate_t(product * factor, max_t);
    }

    if (product.coeff(0, 0) != 1) {
        return false;
    }
    for (long long n = 1; n <= order; ++n) {
        for (long long r = 0; r <= n; ++r) {
            const Rational expected(strong_count({n, alphabet_size}, r));
            if (product.coeff(static_cast<unsigned>(r), static_cast<unsigned>(n - r)) !=
                expected) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace outstanding
