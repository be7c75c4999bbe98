#pragma once

#include <functional>
#include <random>
#include <vector>

#include "outstanding/exact.hpp"
#include "outstanding/poly.hpp"

namespace outstanding::test {

// All multiplicity vectors with 1..max_parts positive entries summing to at
// most max_total.
inline std::vector<std::vector<long long>> compositions(long long max_total,
                                                        long long max_parts) {
    std::vector<std::vector<long long>> all;
    std::vector<long long> current;
    std::function<void(long long)> extend = [&](long long remaining) {
        if (!current.empty()) {
            all.push_back(current);
        }
        if (static_cast<long long>(current.size()) == max_parts) {
            return;
        }
        for (long long next = 1; next <= remaining; ++next) {
            current.push_back(next);
            extend(remaining - next);
            current.pop_back();
        }
    };
    extend(max_total);
    return all;
}

inline Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int degree = deg(rng);
    std::vector<Rational> coeffs(degree + 1);
    for (auto& c : coeffs) {
        c = random_rational(rng);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace outstanding::test
