#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "outstanding/exact.hpp"
#include "outstanding/multiset_stats.hpp"
#include "outstanding/poly.hpp"
#include "outstanding/templates.hpp"

// Exhaustive-enumeration ground truth. Everything here counts by scanning
// actual sequences; none of it goes through the closed forms it is used to
// check.
namespace outstanding::oracle {

using Sequence = std::vector<int>;

// Enumeration guards: at most this many elements in a multiset, at most this
// many words in a sweep. Overridable per call.
inline constexpr long long kDefaultMultisetCap = 10;
inline constexpr long long kDefaultWordCap = 10'000'000;

// 1-based positions j with w_i < w_j for every i < j; position 1 always
// qualifies.
std::vector<int> strong_positions(std::span<const int> w);

// Same with <=; always a superset of strong_positions.
std::vector<int> weak_positions(std::span<const int> w);

enum class Statistic { strong, weak };

struct Distribution {
    std::map<long long, Integer> counts;
    Integer total;

    bool operator==(const Distribution&) const = default;
};

// The distribution as a generating polynomial: counts[r] becomes the x^r
// coefficient.
Polynomial to_polynomial(const Distribution& d);

// Visits every distinct permutation of the multiset exactly once, in
// lexicographic order. Throws when the multiset has more than cap elements.
void for_each_multiset_permutation(const MultisetSpec& m,
                                   const std::function<void(const Sequence&)>& visit,
                                   long long cap = kDefaultMultisetCap);

// Visits all words of the given length over {1..alphabet_size} in
// lexicographic order. Throws when there are more than cap of them.
void for_each_word(long long length, long long alphabet_size,
                   const std::function<void(const Sequence&)>& visit,
                   long long cap = kDefaultWordCap);

Distribution multiset_distribution(const MultisetSpec& m, Statistic stat,
                                   long long cap = kDefaultMultisetCap);

Distribution word_distribution(long long length, long long alphabet_size, Statistic stat,
                               long long cap = kDefaultWordCap);

// Exhaustive template-match counts: permutations of [n] whose prefix fits
// tau, and words over {1..alphabet_size} of exactly tau's length.
Integer count_perm_template_matches(const PermTemplate& tau, long long n,
                                    long long cap = kDefaultMultisetCap);

Integer count_word_template_matches(const WordTemplate& tau, long long alphabet_size,
                                    long long cap = kDefaultWordCap);

}  // namespace outstanding::oracle
