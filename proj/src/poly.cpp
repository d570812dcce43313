#include "zeta3/poly.hpp"

#include <sstream>

namespace zeta3 {

namespace {
const Rational kZero = 0;
}  // namespace

Poly::Poly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& coef, std::size_t power) {
  if (coef == 0) return Poly{};
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = coef;
  return Poly(std::move(c));
}

Poly Poly::linear(const Rational& a, const Rational& b) {
  return Poly(std::vector<Rational>{b, a});
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::operator[](std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly Poly::operator+(const Poly& rhs) const {
  std::vector<Rational> c(std::max(c_.size(), rhs.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] + rhs[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& rhs) const {
  std::vector<Rational> c(std::max(c_.size(), rhs.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (*this)[i] - rhs[i];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return Poly{};
  std::vector<Rational> c(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      c[i + j] += c_[i] * rhs.c_[j];
    }
  }
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return Poly{};
  Poly out = *this;
  for (auto& x : out.c_) x *= s;
  return out;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(i);
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned long e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1UL;
  }
  return result;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly{};
  BigInt den_lcm = 1;
  for (const auto& x : c_) den_lcm = boost::multiprecision::lcm(den_lcm, denom(x));
  BigInt num_gcd = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, BigInt(numer(x) * (den_lcm / denom(x))));
  }
  Rational scale(den_lcm, num_gcd);
  if (leading() < 0) scale = -scale;
  return (*this) * scale;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& coef = (*this)[static_cast<std::size_t>(i)];
    if (coef == 0) continue;
    const Rational mag = rat_abs(coef);
    if (first) {
      if (coef < 0) os << '-';
      first = false;
    } else {
      os << (coef < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (i == 0) {
      os << to_fraction_string(mag);
    } else {
      if (!unit) os << to_fraction_string(mag) << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const std::size_t top = static_cast<std::size_t>(k + b.degree());
    Rational q = rem[top] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int i = 0; i <= b.degree(); ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * b[static_cast<std::size_t>(i)];
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  // Primitive euclidean remainder sequence: re-normalizing every remainder
  // keeps the coefficient growth polynomial instead of exponential.
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? Poly{} : r.primitive_part();
  }
  return x;
}

Poly pochhammer_poly(const Rational& shift, unsigned long n) {
  Poly result(Rational(1));
  for (unsigned long k = 0; k < n; ++k) {
    result = result * Poly::linear(1, shift + Rational(k));
  }
  return result;
}

Poly pochhammer_neg_poly(unsigned long n) {
  Poly result(Rational(1));
  for (unsigned long k = 0; k < n; ++k) {
    result = result * Poly::linear(-1, Rational(k));
  }
  return result;
}

}  // namespace zeta3
