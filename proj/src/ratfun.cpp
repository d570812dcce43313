#include "zeta3/ratfun.hpp"

#include <sstream>

namespace zeta3 {

namespace {

// Synthetic division by (t - x): returns the quotient and the remainder f(x).
std::pair<Poly, Rational> divide_linear(const Poly& f, const Rational& x) {
  if (f.is_zero()) return {Poly{}, Rational(0)};
  const int d = f.degree();
  if (d == 0) return {Poly{}, f[0]};
  std::vector<Rational> q(static_cast<std::size_t>(d), Rational(0));
  Rational carry = f[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = carry;
    carry = f[static_cast<std::size_t>(i)] + carry * x;
  }
  return {Poly(std::move(q)), carry};
}

}  // namespace

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = poly_divmod(num_, g).first;
    den_ = poly_divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RatFun RatFun::canonical() const {
  RatFun out = *this;
  out.canonicalize();
  return out;
}

Rational RatFun::eval(const Rational& t) const {
  const Rational dv = den_.eval(t);
  if (dv == 0) {
    std::ostringstream os;
    if (num_.eval(t) == 0) {
      os << "RatFun::eval: indeterminate 0/0 at t = " << t << " (canonicalize() first)";
    } else {
      os << "RatFun::eval: pole at t = " << t;
    }
    throw std::domain_error(os.str());
  }
  return num_.eval(t) / dv;
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::operator+(const RatFun& rhs) const {
  return RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun RatFun::operator-(const RatFun& rhs) const {
  return RatFun(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_); }

RatFun RatFun::operator*(const RatFun& rhs) const {
  return RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun RatFun::operator*(const Rational& s) const { return RatFun(num_ * s, den_); }

bool RatFun::identical_to(const RatFun& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

RatFun log_derivative(const RatFun& f) {
  if (f.is_zero()) throw std::domain_error("log_derivative: zero function");
  RatFun out(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
             f.num() * f.den());
  out.canonicalize();
  return out;
}

void FactoredRatFun::push(const Poly& base, long exponent) {
  if (base.degree() < 1) throw std::invalid_argument("FactoredRatFun::push: constant base");
  if (exponent == 0) return;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].first == base) {
      factors_[i].second += exponent;
      if (factors_[i].second == 0) factors_.erase(factors_.begin() + static_cast<long>(i));
      return;
    }
  }
  factors_.emplace_back(base, exponent);
}

RatFun FactoredRatFun::expand() const {
  Poly num(scale_);
  Poly den{Rational(1)};
  for (const auto& [base, e] : factors_) {
    if (e > 0) {
      num = num * base.pow(static_cast<unsigned long>(e));
    } else {
      den = den * base.pow(static_cast<unsigned long>(-e));
    }
  }
  return RatFun(std::move(num), std::move(den));
}

FactoredRatFun FactoredRatFun::derivative() const {
  FactoredRatFun out(scale_);
  for (const auto& [base, e] : factors_) out.push(base, e - 1);
  Poly cross;  // sum_i e_i f_i' prod_{j != i} f_j
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Poly term = factors_[i].first.derivative() * Rational(factors_[i].second);
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (j != i) term = term * factors_[j].first;
    }
    cross = cross + term;
  }
  if (cross.is_zero()) return FactoredRatFun{Rational(0)};
  if (cross.degree() >= 1) {
    out.push(cross, 1);
  } else {
    out.mul_scale(cross[0]);
  }
  return out;
}

Rational FactoredRatFun::eval(const Rational& t) const {
  // Detect poles before declaring the value zero.
  for (const auto& [base, e] : factors_) {
    if (e < 0 && base.eval(t) == 0) {
      throw std::domain_error("FactoredRatFun::eval: pole");
    }
  }
  Rational value = scale_;
  for (const auto& [base, e] : factors_) {
    const Rational bv = base.eval(t);
    if (bv == 0) return Rational(0);
    value *= rat_pow(bv, e);
  }
  return value;
}

std::vector<ResidueTerm> partial_fraction(const RatFun& f, const std::vector<PoleSpec>& poles) {
  const Poly& num = f.num();
  const Poly& den = f.den();
  if (num.degree() >= den.degree()) {
    throw std::invalid_argument("partial_fraction: not a proper rational function");
  }

  // Peel every declared factor off the denominator; anything left of positive
  // degree is an undeclared factor.
  Poly rest = den;
  for (const auto& pole : poles) {
    if (pole.order < 1 || pole.order > 2) {
      throw std::invalid_argument("partial_fraction: pole order must be 1 or 2");
    }
    for (int s = 0; s < pole.order; ++s) {
      auto [quot, rem] = divide_linear(rest, pole.location);
      if (rem != 0) {
        std::ostringstream os;
        os << "partial_fraction: declared pole t = " << pole.location
           << " of order " << pole.order << " does not divide the denominator";
        throw std::invalid_argument(os.str());
      }
      rest = std::move(quot);
    }
  }
  if (rest.degree() > 0) {
    throw std::invalid_argument("partial_fraction: denominator has undeclared factors");
  }

  std::vector<ResidueTerm> terms;
  terms.reserve(poles.size());
  for (const auto& pole : poles) {
    // d = den / (t - x)^order, g = num / d near the pole.
    Poly d = den;
    for (int s = 0; s < pole.order; ++s) d = divide_linear(d, pole.location).first;
    const Rational dv = d.eval(pole.location);
    const Rational nv = num.eval(pole.location);
    ResidueTerm term{pole.location, pole.order, Rational(0), Rational(0)};
    if (pole.order == 1) {
      term.a = nv / dv;
    } else {
      // f ~ a/(t-x) - b/(t-x)^2 with b = -g(x) and a = g'(x).
      term.b = -nv / dv;
      const Rational npv = num.derivative().eval(pole.location);
      const Rational dpv = d.derivative().eval(pole.location);
      term.a = (npv * dv - nv * dpv) / (dv * dv);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

std::vector<ResidueTerm> partial_fraction(const FactoredRatFun& f,
                                          const std::vector<PoleSpec>& poles) {
  std::vector<ResidueTerm> terms;
  terms.reserve(poles.size());
  for (const auto& pole : poles) {
    if (pole.order < 1 || pole.order > 2) {
      throw std::invalid_argument("partial_fraction: pole order must be 1 or 2");
    }
    const Rational& x = pole.location;
    // One pass: the value of g = f (t - x)^order from the non-vanishing
    // factors and the logarithmic derivative g'/g at x.  The product is
    // accumulated as a raw numerator/denominator pair and reduced once at the
    // end; normalizing after every factor dominates the runtime otherwise.
    BigInt vnum = numer(f.scale());
    BigInt vden = denom(f.scale());
    BigInt lnum = 0;
    BigInt lden = 1;
    bool seen_pole_factor = false;
    for (const auto& [base, e] : f.factors()) {
      const Rational bv = base.eval(x);
      if (bv != 0) {
        const BigInt bp = int_pow(numer(bv), static_cast<unsigned long>(e < 0 ? -e : e));
        const BigInt bq = int_pow(denom(bv), static_cast<unsigned long>(e < 0 ? -e : e));
        vnum *= (e < 0) ? bq : bp;
        vden *= (e < 0) ? bp : bq;
        // logd += e B'(x)/B(x), kept as an unreduced fraction as well.
        const Rational bd = base.degree() == 1 ? base.leading() : base.derivative().eval(x);
        const BigInt tnum = BigInt(e) * numer(bd) * denom(bv);
        const BigInt tden = denom(bd) * numer(bv);
        lnum = lnum * tden + tnum * lden;
        lden *= tden;
        continue;
      }
      if (seen_pole_factor) {
        throw std::invalid_argument("partial_fraction: two factors vanish at a declared pole");
      }
      seen_pole_factor = true;
      if (base.degree() != 1 || e + pole.order != 0) {
        std::ostringstream os;
        os << "partial_fraction: declared pole t = " << x << " of order " << pole.order
           << " does not match the factored form";
        throw std::invalid_argument(os.str());
      }
      // base = c (t - x) contributes c^e to g; (t - x)^(e + order) drops out.
      const BigInt cp = int_pow(numer(base.leading()), static_cast<unsigned long>(pole.order));
      const BigInt cq = int_pow(denom(base.leading()), static_cast<unsigned long>(pole.order));
      vnum *= cq;
      vden *= cp;
    }
    if (!seen_pole_factor) {
      std::ostringstream os;
      os << "partial_fraction: no factor vanishes at declared pole t = " << x;
      throw std::invalid_argument(os.str());
    }
    const Rational value = Rational(vnum) / Rational(vden);
    ResidueTerm term{x, pole.order, Rational(0), Rational(0)};
    if (pole.order == 1) {
      term.a = value;
    } else {
      term.b = -value;
      term.a = value * Rational(lnum) / Rational(lden);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

RatFun from_partial_fractions(const std::vector<ResidueTerm>& terms) {
  RatFun sum(Poly{}, Poly(Rational(1)));
  for (const auto& term : terms) {
    const Poly lin = Poly::linear(1, -term.location);
    // a/(t-x) - b/(t-x)^2 == (a*(t-x) - b) / (t-x)^2.
    Poly num = lin * term.a - Poly(term.b);
    sum = sum + RatFun(std::move(num), lin * lin);
  }
  return sum;
}

}  // namespace zeta3
