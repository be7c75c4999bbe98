#include "outstanding/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace outstanding::oracle {

std::vector<int> strong_positions(std::span<const int> w) {
    std::vector<int> positions;
    int best = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > best) {
            positions.push_back(static_cast<int>(i) + 1);
        }
        best = std::max(best, w[i]);
    }
    return positions;
}

std::vector<int> weak_positions(std::span<const int> w) {
    std::vector<int> positions;
    int best = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] >= best) {
            positions.push_back(static_cast<int>(i) + 1);
        }
        best = std::max(best, w[i]);
    }
    return positions;
}

Polynomial to_polynomial(const Distribution& d) {
    std::vector<Rational> coeffs;
    for (const auto& [value, count] : d.counts) {
        if (coeffs.size() <= static_cast<std::size_t>(value)) {
            coeffs.resize(value + 1, Rational(0));
        }
        coeffs[value] = Rational(count);
    }
    return Polynomial(std::move(coeffs));
}

void for_each_multiset_permutation(const MultisetSpec& m,
                                   const std::function<void(const Sequence&)>& visit,
                                   long long cap) {
    if (m.total() > cap) {
        throw std::invalid_argument("for_each_multiset_permutation: multiset larger than cap");
    }
    Sequence current;
    current.reserve(m.total());
    for (std::size_t letter = 0; letter < m.letter_count(); ++letter) {
        current.insert(current.end(), m.multiplicities()[letter], static_cast<int>(letter) + 1);
    }
    do {
        visit(current);
    } while (std::next_permutation(current.begin(), current.end()));
}

void for_each_word(long long length, long long alphabet_size,
                   const std::function<void(const Sequence&)>& visit, long long cap) {
    if (length < 1 || alphabet_size < 1) {
        throw std::invalid_argument("for_each_word: length and alphabet size must be positive");
    }
    long long count = 1;
    for (long long i = 0; i < length; ++i) {
        if (count > cap / alphabet_size) {
            throw std::invalid_argument("for_each_word: word count exceeds cap");
        }
        count *= alphabet_size;
    }
    Sequence current(length, 1);
    while (true) {
        visit(current);
        // Odometer increment, least significant letter last.
        long long i = length - 1;
        while (i >= 0 && current[i] == alphabet_size) {
            current[i] = 1;
            --i;
        }
        if (i < 0) {
            return;
        }
        ++current[i];
    }
}

namespace {

Distribution tally(const std::function<void(const std::function<void(const Sequence&)>&)>& stream,
                   Statistic stat) {
    Distribution d;
    d.total = 0;
    stream([&](const Sequence& w) {
        const auto positions = (stat == Statistic::strong) ? strong_positions(w) : weak_positions(w);
        d.counts[static_cast<long long>(positions.size())] += 1;
        d.total += 1;
    });
    return d;
}

}  // namespace

Distribution multiset_distribution(const MultisetSpec& m, Statistic stat, long long cap) {
    return tally([&](const auto& visit) { for_each_multiset_permutation(m, visit, cap); }, stat);
}

Distribution word_distribution(long long length, long long alphabet_size, Statistic stat,
                               long long cap) {
    return tally([&](const auto& visit) { for_each_word(length, alphabet_size, visit, cap); },
                 stat);
}

Integer count_perm_template_matches(const PermTemplate& tau, long long n, long long cap) {
    if (n < static_cast<long long>(tau.length())) {
        throw std::invalid_argument("count_perm_template_matches: permutation shorter than template");
    }
    std::vector<long long> ones(n, 1);
    Integer matches = 0;
    for_each_multiset_permutation(MultisetSpec(ones),
                                  [&](const Sequence& w) {
                                      if (matches_perm(w, tau)) {
                                          matches += 1;
                                      }
                                  },
                                  cap);
    return matches;
}

Integer count_word_template_matches(const WordTemplate& tau, long long alphabet_size,
                                    long long cap) {
    Integer matches = 0;
    for_each_word(static_cast<long long>(tau.length()), alphabet_size,
                  [&](const Sequence& w) {
                      if (matches_word(w, tau)) {
                          matches += 1;
                      }
                  },
                  cap);
    return matches;
}

}  // namespace outstanding::oracle
