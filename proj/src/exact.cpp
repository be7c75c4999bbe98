#include "outstanding/exact.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace outstanding {

Integer binomial(long long n, long long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: upper index must be nonnegative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: i consecutive integers contain a multiple of i
    }
    return result;
}

Integer factorial(unsigned n) {
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

namespace {

// Shared triangle of values grown row by row from its two-term recurrence.
class StirlingTriangle {
public:
    enum class Kind { first_unsigned, second };

    explicit StirlingTriangle(Kind kind) : kind_(kind) { rows_.push_back({Integer(1)}); }

    Integer at(unsigned n, unsigned r) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (rows_.size() <= n) {
            const auto& prev = rows_.back();
            const unsigned row_index = static_cast<unsigned>(rows_.size());
            std::vector<Integer> row(row_index + 1);
            for (unsigned j = 0; j <= row_index; ++j) {
                const Integer lower = (j > 0) ? prev[j - 1] : Integer(0);
                const Integer same = (j < row_index) ? prev[j] : Integer(0);
                row[j] = (kind_ == Kind::first_unsigned) ? lower + (row_index - 1) * same
                                                         : lower + j * same;
            }
            rows_.push_back(std::move(row));
        }
        return (r < rows_[n].size()) ? rows_[n][r] : Integer(0);
    }

private:
    Kind kind_;
    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
};

}  // namespace

Integer stirling_first_unsigned(unsigned n, unsigned r) {
    static StirlingTriangle triangle(StirlingTriangle::Kind::first_unsigned);
    return triangle.at(n, r);
}

Integer stirling_second(unsigned n, unsigned m) {
    static StirlingTriangle triangle(StirlingTriangle::Kind::second);
    return triangle.at(n, m);
}

Rational harmonic(unsigned n) {
    Rational sum = 0;
    for (unsigned i = 1; i <= n; ++i) {
        sum += Rational(1, i);
    }
    return sum;
}

bool is_integral(const Rational& value) {
    return denominator(value) == 1;
}

Integer to_integer(const Rational& value) {
    if (!is_integral(value)) {
        throw std::invalid_argument("to_integer: value has a nontrivial denominator");
    }
    return numerator(value);
}

}  // namespace outstanding
