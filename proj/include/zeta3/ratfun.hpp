// Rational functions in one variable with exact rational coefficients,
// a factored product form for cheap symbolic differentiation, and
// partial-fraction extraction over a declared pole list.
#pragma once

#include "zeta3/poly.hpp"

#include <vector>

namespace zeta3 {

class RatFun {
 public:
  // Throws std::domain_error when den is the zero polynomial.
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  // Remove the polynomial gcd of numerator and denominator and scale so the
  // denominator is monic.  The result is a canonical representative.
  void canonicalize();
  RatFun canonical() const;

  // Value at t.  Throws std::domain_error when the denominator vanishes at t:
  // with a nonzero numerator this is a genuine pole; with a zero numerator the
  // point is indeterminate for this representative and the caller should
  // canonicalize() first.
  Rational eval(const Rational& t) const;

  // Quotient-rule derivative (num' den - num den') / den^2, not canonicalized.
  RatFun derivative() const;

  RatFun operator+(const RatFun& rhs) const;
  RatFun operator-(const RatFun& rhs) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& rhs) const;
  RatFun operator*(const Rational& s) const;

  // Equality as functions (cross multiplication), independent of the chosen
  // representative.
  bool identical_to(const RatFun& rhs) const;

 private:
  Poly num_, den_;
};

// f' / f, canonicalized.  Throws on f == 0.
RatFun log_derivative(const RatFun& f);

// ---------------------------------------------------------------------------
// Factored product form  scale * prod_i base_i^{exp_i}  (integer exponents of
// either sign).  All construction paths in this project know their linear /
// quadratic factors explicitly, so cancellation is exact bookkeeping on
// exponents and never requires polynomial factorization.
// ---------------------------------------------------------------------------
class FactoredRatFun {
 public:
  FactoredRatFun() = default;
  explicit FactoredRatFun(const Rational& scale) : scale_(scale) {}

  // Multiply by base^exponent; identical bases are merged and exponents that
  // reach zero drop out.  The base must be non-constant.
  void push(const Poly& base, long exponent);
  void mul_scale(const Rational& s) { scale_ *= s; }

  const Rational& scale() const { return scale_; }
  const std::vector<std::pair<Poly, long>>& factors() const { return factors_; }

  // Expand into numerator (positive exponents) over denominator (negated
  // negative exponents).
  RatFun expand() const;

  // Product-rule derivative:
  //   d/dt [ s * prod f_i^{e_i} ]
  //     = s * (prod f_i^{e_i - 1}) * sum_i e_i f_i' prod_{j != i} f_j,
  // which stays in factored form with one extra (possibly reducible) factor.
  FactoredRatFun derivative() const;

  // Product of factor values; 0 when a positive-exponent base vanishes,
  // std::domain_error when a negative-exponent base vanishes.
  Rational eval(const Rational& t) const;

 private:
  Rational scale_ = 1;
  std::vector<std::pair<Poly, long>> factors_;
};

// ---------------------------------------------------------------------------
// Partial fractions over declared poles.
// ---------------------------------------------------------------------------

struct PoleSpec {
  Rational location;
  int order;  // 1 or 2
};

// One extracted term  a/(t - location) - b/(t - location)^2.
// b is 0 for simple poles.
struct ResidueTerm {
  Rational location;
  int order;
  Rational a;
  Rational b;
};

// Decompose a proper rational function whose denominator splits exactly into
// the declared poles (up to a constant).  Throws std::invalid_argument when
// f is improper, a declared factor does not divide the denominator, the
// denominator keeps an undeclared factor, or a pole order exceeds 2.
std::vector<ResidueTerm> partial_fraction(const RatFun& f, const std::vector<PoleSpec>& poles);

// Same terms read off the factored form without expanding: at each declared
// pole exactly one linear factor may vanish, and its exponent plus the pole
// order must be zero, so g = f (t - x)^order is the product of the remaining
// factors.  Then b = -g(x) and a = g'(x) = g(x) sum_i e_i B_i'(x)/B_i(x),
// which costs one small-number pass over the factor list per pole instead of
// polynomial division at full degree.
std::vector<ResidueTerm> partial_fraction(const FactoredRatFun& f,
                                          const std::vector<PoleSpec>& poles);

// Reassemble sum_k [ a_k/(t - x_k) - b_k/(t - x_k)^2 ] for round-trip checks.
RatFun from_partial_fractions(const std::vector<ResidueTerm>& terms);

}  // namespace zeta3
