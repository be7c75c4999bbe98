#pragma once

#include "outstanding/exact.hpp"
#include "outstanding/poly.hpp"

namespace outstanding {

// Words of a fixed length over the alphabet {1, ..., alphabet_size}.
struct WordParams {
    long long length;         // n >= 1
    long long alphabet_size;  // k >= 1
};

// Number of words with exactly `records` strict records:
//   sum_m C(k, m) [m, records] {n, m}
// summing over the number m of distinct letters actually used.
Integer strong_count(const WordParams& p, long long records);

// Generating polynomial of strong_count over the record count; evaluates to
// k^n at 1.
Polynomial strong_gf_words(const WordParams& p);

// Expected number of strict records, exactly. Approaches H_k as the length
// grows.
Rational strong_mean_words(const WordParams& p);

// Generating polynomial of the number of weak records, computed as the
// (k-1)-st forward difference of x^n C(x-1, k-1).
Polynomial weak_gf_words(const WordParams& p);

// The same polynomial via the expanded alternating sum
//   sum_{t=0}^{k-1} (-1)^{k-1-t} (x+t)^n C(k-1, t) C(x+t-1, k-1),
// kept as an independent route.
Polynomial weak_gf_words_alternating(const WordParams& p);

// The same polynomial once more, via the two-index recurrence that deletes
// the smallest letter; base case is the zero polynomial for an empty
// alphabet.
Polynomial weak_gf_words_recurrence(const WordParams& p);

// Expected number of weak records, exactly. Approaches n/k + H_{k-1}.
Rational weak_mean_words(const WordParams& p);

// Verifies, as a structural bivariate-polynomial equality after clearing the
// product of (1 - j t) factors, the identity
//   sum_l C(k, l) prod_{j=1}^{l} (y + (j-1) t)/(1 - j t)
//     = prod_{j=1}^{k} (1 + y / (1 - j t)).
bool gauss_identity_check(long long alphabet_size);

// Expands prod_{j=1}^{k} (1 + y / (1 - j t)) as a t-truncated series and
// matches the coefficient of y^r t^{n-r} against strong_count for every
// n <= order.
bool bivariate_strong_gf_check(long long alphabet_size, long long order);

}  // namespace outstanding
