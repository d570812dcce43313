// Dense univariate polynomials over the rationals.  Coefficients are stored
// lowest power first and trailing zeros are always trimmed, so the zero
// polynomial has an empty coefficient vector and degree() == -1.
#pragma once

#include "zeta3/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace zeta3 {

class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(std::vector<Rational> coeffs);  // lowest power first

  // coef * t^power.
  static Poly monomial(const Rational& coef, std::size_t power);
  // a*t + b.
  static Poly linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  // Coefficient of t^i (0 beyond the degree).
  const Rational& operator[](std::size_t i) const;
  // Leading coefficient; throws on the zero polynomial.
  const Rational& leading() const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly operator*(const Rational& s) const;
  bool operator==(const Poly& rhs) const { return c_ == rhs.c_; }
  bool operator!=(const Poly& rhs) const { return c_ != rhs.c_; }

  Rational eval(const Rational& t) const;  // Horner
  Poly derivative() const;
  Poly pow(unsigned long e) const;

  // The integer-coefficient polynomial proportional to *this whose
  // coefficients have gcd 1 and whose leading coefficient is positive.
  Poly primitive_part() const;

  // Human-readable form such as "3*n^2 - n + 5/2".
  std::string to_string(const std::string& var = "t") const;

  const std::vector<Rational>& coeffs() const { return c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exact euclidean division: a = q*b + r with deg r < deg b.  Throws on b == 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// gcd via the euclidean algorithm, normalized to a primitive polynomial with
// positive leading coefficient (returns 1 for coprime inputs; gcd(0,0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);

// Rising factorial (t + shift)(t + shift + 1) ... (t + shift + n - 1) as a
// polynomial in t; n = 0 gives the constant 1.
Poly pochhammer_poly(const Rational& shift, unsigned long n);

// Rising factorial of the negated variable, (-t)(-t + 1)...(-t + n - 1);
// e.g. n = 2 gives t^2 - t.
Poly pochhammer_neg_poly(unsigned long n);

}  // namespace zeta3
