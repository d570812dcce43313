#include "zeta3/fixed.hpp"

#include <sstream>

namespace zeta3 {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Nearest integer to num/den (den > 0), ties away from zero.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  const BigInt rem = num - q * den;
  if (2 * abs_big(rem) >= den) q += (num < 0 ? -1 : 1);
  return q;
}

BigInt ceil_div_nonneg(const BigInt& num, const BigInt& den) {
  return (num + den - 1) / den;
}

BigInt floor_big(const Rational& r) {
  BigInt q = numer(r) / denom(r);
  if (r < 0 && q * denom(r) != numer(r)) --q;
  return q;
}

BigInt ceil_big(const Rational& r) {
  BigInt q = numer(r) / denom(r);
  if (r > 0 && q * denom(r) != numer(r)) ++q;
  return q;
}

long digit_count(const BigInt& x) {
  if (x == 0) return 1;
  return static_cast<long>(abs_big(x).str().size());
}

// Round the magnitude string of m to `sig` digits; returns the digit string
// and whether the leading power of ten grew by one (e.g. 999 -> "10").
std::pair<std::string, bool> rounded_digits(const BigInt& m, int sig) {
  const BigInt mag = abs_big(m);
  const long total = digit_count(mag);
  BigInt r = mag;
  bool carry_digit = false;
  if (total > sig) {
    r = round_div(mag, pow10(total - sig));
    if (digit_count(r) > sig) {  // 9.99 -> 10.0
      r /= 10;
      carry_digit = true;
    }
  }
  std::string digits = r.str();
  while (static_cast<int>(digits.size()) < sig) digits.push_back('0');
  return {digits, carry_digit};
}

}  // namespace

BigInt pow10(long k) {
  if (k < 0) throw std::domain_error("pow10: negative exponent");
  return int_pow(BigInt(10), static_cast<unsigned long>(k));
}

FixedPrecisionValue::FixedPrecisionValue(BigInt mantissa, long scale, BigInt error_bound)
    : mantissa_(std::move(mantissa)), scale_(scale), error_bound_(std::move(error_bound)) {
  if (error_bound_ < 0) throw std::invalid_argument("FixedPrecisionValue: negative error bound");
}

FixedPrecisionValue FixedPrecisionValue::from_rational(const Rational& r, long digits) {
  const BigInt scaled_num = numer(r) * pow10(digits);
  const BigInt q = round_div(scaled_num, denom(r));
  const bool exact = (q * denom(r) == scaled_num);
  return FixedPrecisionValue(q, -digits, exact ? 0 : 1);
}

FixedPrecisionValue FixedPrecisionValue::from_interval(const Rational& lo, const Rational& hi,
                                                       long digits) {
  if (lo > hi) throw std::invalid_argument("from_interval: lo > hi");
  const BigInt p = pow10(digits);
  const BigInt lo_i = floor_big(lo * p);
  const BigInt hi_i = ceil_big(hi * p);
  const BigInt mid = (lo_i + hi_i) / 2;  // truncation keeps mid within [lo_i, hi_i]
  const BigInt err = (hi_i - mid) > (mid - lo_i) ? BigInt(hi_i - mid) : BigInt(mid - lo_i);
  return FixedPrecisionValue(mid, -digits, err);
}

Rational FixedPrecisionValue::midpoint() const {
  if (scale_ >= 0) return Rational(mantissa_ * pow10(scale_));
  return Rational(mantissa_, pow10(-scale_));
}

Rational FixedPrecisionValue::radius() const {
  if (scale_ >= 0) return Rational(error_bound_ * pow10(scale_));
  return Rational(error_bound_, pow10(-scale_));
}

Rational FixedPrecisionValue::lower() const { return midpoint() - radius(); }
Rational FixedPrecisionValue::upper() const { return midpoint() + radius(); }

bool FixedPrecisionValue::contains(const Rational& x) const {
  return lower() <= x && x <= upper();
}

bool FixedPrecisionValue::contains_zero() const {
  return abs_big(mantissa_) <= error_bound_;
}

bool FixedPrecisionValue::is_positive() const { return mantissa_ > error_bound_; }

bool FixedPrecisionValue::is_negative() const { return mantissa_ < -error_bound_; }

FixedPrecisionValue FixedPrecisionValue::operator-() const {
  return FixedPrecisionValue(-mantissa_, scale_, error_bound_);
}

FixedPrecisionValue FixedPrecisionValue::abs() const {
  // | |x| - |m| | <= |x - m| for every x, so the same radius encloses.
  return FixedPrecisionValue(abs_big(mantissa_), scale_, error_bound_);
}

FixedPrecisionValue FixedPrecisionValue::round_to(long digits) const {
  const long target_scale = -digits;
  if (target_scale <= scale_) return *this;
  const BigInt p = pow10(target_scale - scale_);
  const BigInt m = round_div(mantissa_, p);
  BigInt e = ceil_div_nonneg(error_bound_, p);
  if (m * p != mantissa_) e += 1;  // midpoint rounding is at most one new ulp
  return FixedPrecisionValue(m, target_scale, e);
}

long FixedPrecisionValue::certified_sig_digits() const {
  if (error_bound_ == 0) return mantissa_ == 0 ? 0 : 1000000L;  // exact
  if (contains_zero()) return 0;
  return digit_count(mantissa_) - digit_count(error_bound_) - 1;
}

std::string FixedPrecisionValue::to_sci_string(int sig) const {
  if (sig < 1) throw std::invalid_argument("to_sci_string: sig must be >= 1");
  if (certified_sig_digits() < sig) {
    throw std::runtime_error("to_sci_string: enclosure too wide for " + std::to_string(sig) +
                             " significant digits");
  }
  const auto [digits, carry] = rounded_digits(mantissa_, sig);
  const long exp10 = digit_count(mantissa_) - 1 + scale_ + (carry ? 1 : 0);
  std::ostringstream os;
  if (mantissa_ < 0) os << '-';
  os << digits[0];
  if (sig > 1) os << '.' << digits.substr(1);
  os << 'e' << exp10;
  return os.str();
}

std::string FixedPrecisionValue::to_sig_string(int sig) const {
  if (sig < 1) throw std::invalid_argument("to_sig_string: sig must be >= 1");
  if (certified_sig_digits() < sig) {
    throw std::runtime_error("to_sig_string: enclosure too wide for " + std::to_string(sig) +
                             " significant digits");
  }
  const auto [digits, carry] = rounded_digits(mantissa_, sig);
  const long exp10 = digit_count(mantissa_) - 1 + scale_ + (carry ? 1 : 0);
  if (exp10 < -4 || exp10 >= sig + 3) return to_sci_string(sig);
  std::ostringstream os;
  if (mantissa_ < 0) os << '-';
  if (exp10 < 0) {
    os << "0.";
    for (long i = 1; i < -exp10; ++i) os << '0';
    os << digits;
  } else if (exp10 + 1 >= sig) {
    os << digits;
    for (long i = sig; i <= exp10; ++i) os << '0';
  } else {
    os << digits.substr(0, static_cast<std::size_t>(exp10 + 1)) << '.'
       << digits.substr(static_cast<std::size_t>(exp10 + 1));
  }
  return os.str();
}

double FixedPrecisionValue::to_double() const {
  return midpoint().convert_to<double>();
}

namespace {

std::pair<FixedPrecisionValue, FixedPrecisionValue> aligned(const FixedPrecisionValue& a,
                                                            const FixedPrecisionValue& b) {
  const long s = std::min(a.scale(), b.scale());
  auto stretch = [s](const FixedPrecisionValue& v) {
    const BigInt p = pow10(v.scale() - s);
    return FixedPrecisionValue(v.mantissa() * p, s, v.error_bound() * p);
  };
  return {stretch(a), stretch(b)};
}

}  // namespace

FixedPrecisionValue fp_add(const FixedPrecisionValue& a, const FixedPrecisionValue& b) {
  const auto [x, y] = aligned(a, b);
  return FixedPrecisionValue(x.mantissa() + y.mantissa(), x.scale(),
                             x.error_bound() + y.error_bound());
}

FixedPrecisionValue fp_sub(const FixedPrecisionValue& a, const FixedPrecisionValue& b) {
  return fp_add(a, -b);
}

FixedPrecisionValue fp_mul(const FixedPrecisionValue& a, const FixedPrecisionValue& b) {
  const BigInt m = a.mantissa() * b.mantissa();
  const BigInt e = abs_big(a.mantissa()) * b.error_bound() +
                   abs_big(b.mantissa()) * a.error_bound() +
                   a.error_bound() * b.error_bound();
  return FixedPrecisionValue(m, a.scale() + b.scale(), e);
}

FixedPrecisionValue fp_mul_rational(const FixedPrecisionValue& a, const Rational& r) {
  const BigInt m = a.mantissa() * numer(r);
  const BigInt e = a.error_bound() * abs_big(numer(r));
  if (denom(r) == 1) return FixedPrecisionValue(m, a.scale(), e);
  const BigInt q = round_div(m, denom(r));
  BigInt eq = ceil_div_nonneg(e, denom(r));
  if (q * denom(r) != m) eq += 1;
  return FixedPrecisionValue(q, a.scale(), eq);
}

FixedPrecisionValue fp_div(const FixedPrecisionValue& a, const FixedPrecisionValue& b,
                           long digits) {
  if (b.contains_zero()) {
    throw std::runtime_error("fp_div: divisor interval contains zero (escalate precision)");
  }
  // Endpoint quotients bound the result because b has a fixed sign.
  const Rational candidates[4] = {a.lower() / b.lower(), a.lower() / b.upper(),
                                  a.upper() / b.lower(), a.upper() / b.upper()};
  Rational lo = candidates[0], hi = candidates[0];
  for (const auto& c : candidates) {
    if (c < lo) lo = c;
    if (c > hi) hi = c;
  }
  return FixedPrecisionValue::from_interval(lo, hi, digits);
}

BigInt integer_root(const BigInt& x, unsigned long k) {
  if (x < 0) throw std::domain_error("integer_root: negative radicand");
  if (k == 0) throw std::domain_error("integer_root: zeroth root");
  if (x == 0 || x == 1 || k == 1) return x;
  if (k == 2) return boost::multiprecision::sqrt(x);
  // Newton iteration from an upper-bound seed.
  const unsigned long bits = boost::multiprecision::msb(x) + 1;
  BigInt r = BigInt(1) << static_cast<unsigned long>((bits + k - 1) / k + 1);
  while (true) {
    const BigInt next = ((k - 1) * r + x / int_pow(r, k - 1)) / static_cast<long>(k);
    if (next >= r) break;
    r = next;
  }
  while (int_pow(r, k) > x) --r;
  while (int_pow(r + 1, k) <= x) ++r;
  return r;
}

namespace {

// floor(root_k(r * 10^(k*digits))) and the matching ceiling bound: the k-th
// root of an exact rational enclosed at 1 ulp.
BigInt root_floor(const Rational& r, unsigned long k, long digits) {
  const Rational scaled = r * Rational(pow10(k * static_cast<long>(digits)));
  return integer_root(floor_big(scaled), k);
}

BigInt root_ceil(const Rational& r, unsigned long k, long digits) {
  const Rational scaled = r * Rational(pow10(k * static_cast<long>(digits)));
  const BigInt c = ceil_big(scaled);
  BigInt root = integer_root(c, k);
  if (int_pow(root, k) != c) ++root;
  return root;
}

}  // namespace

FixedPrecisionValue fp_sqrt(const FixedPrecisionValue& a, long digits) {
  return fp_nth_root(a, 2, digits);
}

FixedPrecisionValue fp_nth_root(const FixedPrecisionValue& a, unsigned long k, long digits) {
  const Rational lo = a.lower();
  if (lo < 0) {
    throw std::runtime_error("fp_nth_root: interval extends below zero (escalate precision)");
  }
  const BigInt root_lo = root_floor(lo, k, digits);
  const BigInt root_hi = root_ceil(a.upper(), k, digits);
  const Rational p(pow10(digits));
  return FixedPrecisionValue::from_interval(Rational(root_lo) / p, Rational(root_hi) / p, digits);
}

namespace {

// 2 * atanh(u) * 10^D for an exact rational |u| < 0.82, with the error in
// ulps: the alternating-free series sum u + u^3/3 + u^5/5 + ...
// Returns (scaled sum, ulp error bound).
std::pair<BigInt, BigInt> atanh_scaled(const Rational& u, long d) {
  if (u <= -1 || u >= 1 || rat_abs(u) > Rational(82, 100)) {
    throw std::domain_error("atanh_scaled: |u| must stay below 0.82");
  }
  const BigInt p = pow10(d);
  const BigInt u_scaled = round_div(numer(u) * p, denom(u));  // |error| <= 1 ulp
  BigInt term = u_scaled;  // ~ u^(2k+1) * 10^d
  BigInt term_err = 1;     // ulp bound on term
  BigInt sum = 0;
  BigInt sum_err = 0;
  long k = 0;
  while (term != 0) {
    sum += term / (2 * k + 1);
    sum_err += term_err / (2 * k + 1) + 1;
    // Next odd power.  Truncating division keeps |term| strictly shrinking
    // (round-to-nearest would hold small magnitudes at 1 forever since
    // |u| can exceed 1/2); two truncations plus the u_scaled quantization
    // are absorbed by a generous +5.
    term = (term * u_scaled) / p;
    term = (term * u_scaled) / p;
    term_err += 5;
    ++k;
    if (k > 40 * d + 100) throw std::logic_error("atanh_scaled: series failed to terminate");
  }
  // Once the computed term hits zero the true tail is below
  // term_err * (1 + u^2 + u^4 + ...) <= term_err / (1 - 0.82^2) < 4*term_err.
  sum_err += 4 * term_err;
  return {2 * sum, 2 * sum_err};
}

// ln(10) * 10^D with ulp error: 2 * atanh(9/11).
std::pair<BigInt, BigInt> ln10_scaled(long d) { return atanh_scaled(Rational(9, 11), d); }

}  // namespace

FixedPrecisionValue fp_ln(const FixedPrecisionValue& a, long digits) {
  if (!a.is_positive()) {
    throw std::runtime_error("fp_ln: interval not strictly positive (escalate precision)");
  }
  const long d = digits + 15;
  // Normalize the midpoint m*10^s = v * 10^E with v in [0.1, 3).
  long exp10 = digit_count(a.mantissa()) - 1 + a.scale();
  Rational v = a.midpoint();
  if (exp10 > 0) {
    v /= Rational(pow10(exp10));
  } else if (exp10 < 0) {
    v *= Rational(pow10(-exp10));
  }
  if (v >= 3) {
    v /= 10;
    exp10 += 1;
  }
  const Rational u = (v - 1) / (v + 1);
  auto [series, series_err] = atanh_scaled(u, d);
  if (exp10 != 0) {
    auto [l10, l10_err] = ln10_scaled(d);
    series += exp10 * l10;
    series_err += abs_big(BigInt(exp10)) * l10_err;
  }
  FixedPrecisionValue mid_ln(series, -d, series_err);
  // Mean value theorem: |ln x - ln m| <= radius / min(x) over the interval.
  const Rational mvt = a.radius() / a.lower();
  const BigInt mvt_ulps = ceil_big(mvt * Rational(pow10(d))) + 1;
  return FixedPrecisionValue(mid_ln.mantissa(), -d, mid_ln.error_bound() + mvt_ulps)
      .round_to(digits);
}

namespace {

// arctan(1/m) * 10^D with the ulp error bound, by the alternating series.
std::pair<BigInt, BigInt> arctan_inv_scaled(long m, long d) {
  const BigInt m2 = BigInt(m) * m;
  BigInt power = pow10(d) / m;  // ~ 10^D / m^(2k+1), floor error <= 1
  BigInt power_err = 1;
  BigInt sum = 0;
  BigInt sum_err = 0;
  long k = 0;
  while (power != 0) {
    const BigInt term = power / (2 * k + 1);
    sum += (k % 2 == 0) ? term : BigInt(-term);
    sum_err += power_err / (2 * k + 1) + 1;
    power /= m2;
    power_err += 1;
    ++k;
  }
  sum_err += power_err + 1;  // alternating tail: at most the first omitted term
  return {sum, sum_err};
}

}  // namespace

FixedPrecisionValue fp_pi(long digits) {
  const long d = digits + 10;
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
  auto [a5, e5] = arctan_inv_scaled(5, d);
  auto [a239, e239] = arctan_inv_scaled(239, d);
  return FixedPrecisionValue(16 * a5 - 4 * a239, -d, 16 * e5 + 4 * e239 + 1).round_to(digits);
}

FixedPrecisionValue fp_e(long digits) {
  const long d = digits + 5;
  Rational sum = 1;
  Rational term = 1;
  long k = 1;
  const Rational cutoff(1, pow10(d));
  while (term >= cutoff) {
    term /= k;
    sum += term;
    ++k;
  }
  FixedPrecisionValue v = FixedPrecisionValue::from_rational(sum, d);
  // Remaining tail < 2 * (last term) < 2 ulps at scale -d.
  return FixedPrecisionValue(v.mantissa(), -d, v.error_bound() + 2).round_to(digits);
}

bool fp_definitely_less(const FixedPrecisionValue& a, const FixedPrecisionValue& b) {
  return a.upper() < b.lower();
}

}  // namespace zeta3
