/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic for the whole kernel.
 *
 * Every coefficient in the library is a Rational: arbitrary precision,
 * always stored reduced with a positive denominator.  There is no floating
 * point anywhere -- the symmetrization map divides by k!, so we need
 * characteristic 0 and exact division.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <string>

namespace lierine {

using Integer = boost::multiprecision::cpp_int;

// cpp_rational keeps the invariants we need: gcd(|num|, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

// Exact factorial, used by the symmetrization map and the Moyal star product.
inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Canonical print: "3", "-1/2".
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

} // namespace lierine
