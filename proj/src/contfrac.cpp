#include "zeta3/contfrac.hpp"

#include <sstream>

namespace zeta3 {

IrregularCF from_convergents(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("from_convergents: p and q lengths differ");
  }
  if (p.empty()) throw std::invalid_argument("from_convergents: need at least one convergent");
  if (q[0] != 1) {
    throw std::invalid_argument("from_convergents: q[0] must be 1 so that a0 = p[0]");
  }
  IrregularCF cf;
  cf.a0 = p[0];
  if (p.size() == 1) return cf;

  // k = 1 comes from the seed convergents 1/0.
  cf.a.push_back(q[1]);
  cf.b.push_back(p[1] - q[1] * p[0]);
  for (std::size_t k = 2; k < p.size(); ++k) {
    const Rational det = p[k - 1] * q[k - 2] - p[k - 2] * q[k - 1];
    if (det == 0) {
      throw std::invalid_argument("from_convergents: zero cross determinant at index " +
                                  std::to_string(k));
    }
    cf.a.push_back((p[k] * q[k - 2] - p[k - 2] * q[k]) / det);
    cf.b.push_back((p[k - 1] * q[k] - p[k] * q[k - 1]) / det);
  }
  return cf;
}

IrregularCF equivalence_transform(const IrregularCF& cf, const std::vector<Rational>& c) {
  if (c.size() != cf.terms() + 1) {
    throw std::invalid_argument("equivalence_transform: need one multiplier per index 0..K");
  }
  if (c[0] != 1) throw std::invalid_argument("equivalence_transform: c[0] must be 1");
  for (const auto& ck : c) {
    if (ck == 0) throw std::invalid_argument("equivalence_transform: zero multiplier");
  }
  IrregularCF out;
  out.a0 = cf.a0;
  for (std::size_t k = 1; k <= cf.terms(); ++k) {
    out.a.push_back(c[k] * cf.a[k - 1]);
    out.b.push_back(c[k] * c[k - 1] * cf.b[k - 1]);
  }
  return out;
}

std::pair<Rational, Rational> convergent(const IrregularCF& cf, std::size_t k) {
  if (k > cf.terms()) throw std::out_of_range("convergent: not enough terms");
  Rational p_prev = 1, q_prev = 0;  // index -1
  Rational p_cur = cf.a0, q_cur = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    const Rational p_next = cf.a[m - 1] * p_cur + cf.b[m - 1] * p_prev;
    const Rational q_next = cf.a[m - 1] * q_cur + cf.b[m - 1] * q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return {p_cur, q_cur};
}

IrregularCF classical_fraction(std::size_t terms) {
  IrregularCF cf;
  cf.a0 = 0;
  for (std::size_t k = 1; k <= terms; ++k) {
    if (k == 1) {
      cf.b.push_back(6);
      cf.a.push_back(5);
      continue;
    }
    const long m = static_cast<long>(k) - 1;
    const BigInt m3 = int_pow(BigInt(m), 3);
    cf.b.push_back(Rational(-int_pow(BigInt(m), 6)));
    cf.a.push_back(Rational(34 * m3 + BigInt(51 * m * m + 27 * m + 5)));
  }
  return cf;
}

BigInt accelerated_Q(long n) {
  if (n < 3) throw std::domain_error("accelerated_Q: n must be >= 3");
  const Poly q_poly(std::vector<Rational>{264, -1926, 5715, -8715, 7077, -2907, 476});
  return 6 * numer(q_poly.eval(Rational(n)));
}

std::pair<BigInt, BigInt> accelerated_terms(long n) {
  if (n < 4) throw std::domain_error("accelerated_terms: n must be >= 4");
  const Poly f1(std::vector<Rational>{-464, 543, -213, 28});
  const Poly f2(std::vector<Rational>{-6, 27, -45, 28});
  const BigInt cube1 = int_pow(BigInt(n - 2), 3);
  const BigInt cube2 = int_pow(BigInt(n - 1), 3);
  const BigInt p = -9 * cube1 * cube2 * numer(f1.eval(Rational(n))) * numer(f2.eval(Rational(n)));
  return {p, accelerated_Q(n)};
}

IrregularCF accelerated_fraction(std::size_t terms) {
  IrregularCF cf;
  cf.a0 = 0;
  for (std::size_t k = 1; k <= terms; ++k) {
    switch (k) {
      case 1:
        cf.b.push_back(9);
        cf.a.push_back(8);
        break;
      case 2:
        cf.b.push_back(-184);
        cf.a.push_back(359);
        break;
      case 3:
        cf.b.push_back(-30672);
        cf.a.push_back(Rational(accelerated_Q(3)));
        break;
      default: {
        const auto [pn, qn] = accelerated_terms(static_cast<long>(k));
        cf.b.push_back(Rational(pn));
        cf.a.push_back(Rational(qn));
        break;
      }
    }
  }
  return cf;
}

std::string to_bar_notation(const IrregularCF& cf, std::size_t max_terms) {
  std::ostringstream os;
  const std::size_t count = std::min(max_terms, cf.terms());
  bool have_head = false;
  if (cf.a0 != 0) {
    os << to_fraction_string(cf.a0);
    have_head = true;
  }
  for (std::size_t k = 1; k <= count; ++k) {
    const Rational& bk = cf.b[k - 1];
    if (have_head) {
      os << (bk < 0 ? " - " : " + ");
    } else if (bk < 0) {
      os << '-';
    }
    os << to_fraction_string(rat_abs(bk)) << "|/|" << to_fraction_string(cf.a[k - 1]);
    have_head = true;
  }
  if (count < cf.terms()) os << " ...";
  return os.str();
}

}  // namespace zeta3
