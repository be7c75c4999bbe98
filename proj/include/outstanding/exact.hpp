#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace outstanding {

// Exact arbitrary-precision scalars used everywhere in the library.
// Rational values are kept in lowest terms with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k). Returns 0 when k is outside [0, n]; n itself must be nonnegative.
Integer binomial(long long n, long long k);

Integer factorial(unsigned n);

// Unsigned Stirling number of the first kind: the number of permutations of
// [n] with exactly r cycles, equivalently the coefficient of x^r in
// x(x+1)...(x+n-1).
Integer stirling_first_unsigned(unsigned n, unsigned r);

// Stirling number of the second kind: partitions of [n] into m nonempty
// blocks.
Integer stirling_second(unsigned n, unsigned m);

// H_n = 1 + 1/2 + ... + 1/n, exactly. harmonic(0) is 0.
Rational harmonic(unsigned n);

bool is_integral(const Rational& value);

// Extracts an integral rational; throws std::invalid_argument otherwise.
Integer to_integer(const Rational& value);

}  // namespace outstanding
