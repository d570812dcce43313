#include "zeta3/exact.hpp"

#include <sstream>

namespace zeta3 {

BigInt binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Multiply/divide incrementally; each intermediate quotient is exact.
  for (long m = 1; m <= k; ++m) {
    result *= (n - k + m);
    result /= m;
  }
  return result;
}

Rational harmonic(long k, int r) {
  if (k < 0) throw std::domain_error("harmonic: negative index");
  if (r < 1) throw std::domain_error("harmonic: order must be >= 1");
  Rational sum = 0;
  for (long m = 1; m <= k; ++m) {
    sum += Rational(1, int_pow(BigInt(m), static_cast<unsigned long>(r)));
  }
  return sum;
}

BigInt lcm_upto(long n) {
  BigInt result = 1;
  for (long m = 2; m <= n; ++m) {
    result = boost::multiprecision::lcm(result, BigInt(m));
  }
  return result;
}

BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt result = 1;
  BigInt b = base;
  unsigned long k = e;
  while (k > 0) {
    if (k & 1UL) result *= b;
    b *= b;
    k >>= 1UL;
  }
  return result;
}

Rational rat_pow(const Rational& r, long e) {
  if (e == 0) return 1;
  if (r == 0 && e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  const BigInt pn = int_pow(numer(r), mag);
  const BigInt pd = int_pow(denom(r), mag);
  // Divide rather than construct from (num, den): the installed boost
  // rejects negative denominators in the two-component constructor.
  return e > 0 ? Rational(pn) / Rational(pd) : Rational(pd) / Rational(pn);
}

std::string to_fraction_string(const Rational& r) {
  std::ostringstream os;
  os << numer(r);
  if (denom(r) != 1) os << '/' << denom(r);
  return os.str();
}

}  // namespace zeta3
