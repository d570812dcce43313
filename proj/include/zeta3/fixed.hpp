// Certified fixed-precision values: a decimal midpoint plus an integer error
// bound in the same units, so every value is the interval
//     [ (mantissa - error_bound) * 10^scale, (mantissa + error_bound) * 10^scale ].
// All operations round outward; anything this module returns is a rigorous
// enclosure of the exact result.  Elementary constants and functions (pi, e,
// sqrt, n-th roots, ln) carry explicit tail bounds.
#pragma once

#include "zeta3/exact.hpp"

#include <string>

namespace zeta3 {

class FixedPrecisionValue {
 public:
  FixedPrecisionValue() = default;  // exact zero
  FixedPrecisionValue(BigInt mantissa, long scale, BigInt error_bound);

  // Round r to `digits` decimal places (scale = -digits); the error bound is
  // 0 when the representation is exact and 1 ulp otherwise.
  static FixedPrecisionValue from_rational(const Rational& r, long digits);
  // Tightest representation of [lo, hi] at the given number of places.
  static FixedPrecisionValue from_interval(const Rational& lo, const Rational& hi, long digits);

  const BigInt& mantissa() const { return mantissa_; }
  long scale() const { return scale_; }
  const BigInt& error_bound() const { return error_bound_; }

  Rational midpoint() const;
  Rational radius() const;
  Rational lower() const;
  Rational upper() const;

  bool is_exact() const { return error_bound_ == 0; }
  bool contains(const Rational& x) const;
  bool contains_zero() const;
  bool is_positive() const;  // entire interval > 0
  bool is_negative() const;

  FixedPrecisionValue operator-() const;
  FixedPrecisionValue abs() const;

  // Coarsen to `digits` decimal places (no-op when already coarser).
  FixedPrecisionValue round_to(long digits) const;

  // Number of leading significant digits of the midpoint that are pinned
  // down by the error bound (a conservative count).
  long certified_sig_digits() const;

  // "2.795e-153" style with `sig` significant digits; throws
  // std::runtime_error when the enclosure cannot certify that many digits.
  std::string to_sci_string(int sig) const;
  // Positional where reasonable ("0.0144346"), scientific otherwise.
  std::string to_sig_string(int sig) const;

  double to_double() const;

 private:
  BigInt mantissa_ = 0;
  long scale_ = 0;
  BigInt error_bound_ = 0;
};

// Exact operations (no rounding; scales align to the finer operand).
FixedPrecisionValue fp_add(const FixedPrecisionValue& a, const FixedPrecisionValue& b);
FixedPrecisionValue fp_sub(const FixedPrecisionValue& a, const FixedPrecisionValue& b);
FixedPrecisionValue fp_mul(const FixedPrecisionValue& a, const FixedPrecisionValue& b);
FixedPrecisionValue fp_mul_rational(const FixedPrecisionValue& a, const Rational& r);

// Rounded operations; `digits` fixes the result scale.
FixedPrecisionValue fp_div(const FixedPrecisionValue& a, const FixedPrecisionValue& b, long digits);
FixedPrecisionValue fp_sqrt(const FixedPrecisionValue& a, long digits);
FixedPrecisionValue fp_nth_root(const FixedPrecisionValue& a, unsigned long k, long digits);
FixedPrecisionValue fp_ln(const FixedPrecisionValue& a, long digits);

// Constants.
FixedPrecisionValue fp_pi(long digits);
FixedPrecisionValue fp_e(long digits);

// True when the intervals are disjoint with a strictly below b.
bool fp_definitely_less(const FixedPrecisionValue& a, const FixedPrecisionValue& b);

// floor(x^(1/k)) for x >= 0.
BigInt integer_root(const BigInt& x, unsigned long k);

BigInt pow10(long k);  // k >= 0

}  // namespace zeta3
