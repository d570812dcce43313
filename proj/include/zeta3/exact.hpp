// Exact integer / rational arithmetic primitives shared by every module:
// arbitrary-precision integers and rationals, binomial coefficients,
// generalized harmonic numbers, and lcm(1..n).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace zeta3 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// numerator() / denominator() from boost already return canonical values
// (gcd 1, positive denominator); re-export under short names.
inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denom(r) == 1; }

// C(n, k).  Out-of-range k (k < 0 or k > n) yields 0 so sums over a fixed
// window can be written without edge-case branches.
BigInt binom(long n, long k);

// Generalized harmonic number H_k^(r) = sum_{m=1..k} 1/m^r, with H_0 = 0.
Rational harmonic(long k, int r);

// lcm(1, 2, ..., n); lcm_upto(0) = 1.
BigInt lcm_upto(long n);

// base^e for e >= 0.
BigInt int_pow(const BigInt& base, unsigned long e);

// r^e with integer e of either sign (throws std::domain_error on 0^negative).
Rational rat_pow(const Rational& r, long e);

// |r|.
inline Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Render as "num/den" ("num" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

}  // namespace zeta3
