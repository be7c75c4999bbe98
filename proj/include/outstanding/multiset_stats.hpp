#pragma once

#include <cstddef>
#include <vector>

#include "outstanding/exact.hpp"
#include "outstanding/poly.hpp"

namespace outstanding {

// The multiset {1^{a_1}, ..., k^{a_k}}, described by its multiplicity vector.
// Every multiplicity is strictly positive; absent letters are simply omitted
// from the vector.
class MultisetSpec {
public:
    explicit MultisetSpec(std::vector<long long> multiplicities);

    const std::vector<long long>& multiplicities() const { return multiplicities_; }
    std::size_t letter_count() const { return multiplicities_.size(); }
    long long total() const { return total_; }

    // N! / (a_1! ... a_k!), the number of distinct permutations.
    Integer permutation_count() const;

private:
    std::vector<long long> multiplicities_;
    long long total_ = 0;
};

// Generating polynomial of the number of strict records over all
// permutations of the multiset: the x^r coefficient counts permutations with
// exactly r of them. Computed as a product of linear factors with integer
// binomial coefficients, one factor per letter.
Polynomial strong_gf(const MultisetSpec& m);

// strong_gf scaled to total probability 1.
Polynomial strong_prob_gf(const MultisetSpec& m);

// Expected number of strict records: sum_i a_i / (a_i + a_{i+1} + ... + a_k).
Rational strong_mean(const MultisetSpec& m);

// phi(N, a) = sum_{m=0}^{a} C(N-m-1, a-m) x^m: the factor a letter of
// multiplicity a contributes to the weak-record polynomial when N slots
// remain. phi(N, a) evaluated at 1 is C(N, a).
Polynomial phi(long long total, long long multiplicity);

// Generating polynomial of the number of weak records over all permutations
// of the multiset.
Polynomial weak_gf(const MultisetSpec& m);

// Expected number of weak records: sum_i a_i / (a_{i+1} + ... + a_k + 1).
Rational weak_mean(const MultisetSpec& m);

struct GapBound {
    Rational gap;    // weak mean minus strong mean; always >= 0
    Rational bound;  // A(A-1) * sum_{j=1}^{k} 1/j^2 with A the largest multiplicity
};

// The exact gap between the two means together with its closed-form bound.
GapBound mean_gap_and_bound(const MultisetSpec& m);

struct DarrochCheck {
    long long mode;  // smallest r maximizing the strict-record count
    Rational mean;
    bool within_one;  // |mode - mean| <= 1
};

// Mode-versus-mean check for the strict-record distribution. Because the
// generating polynomial has only real zeros, the mode can differ from the
// mean by at most 1.
DarrochCheck darroch_check(const MultisetSpec& m);

}  // namespace outstanding
