#include "zeta3/families.hpp"

#include <sstream>

namespace zeta3 {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_n(long n) { require(n >= 1, "family index n must be >= 1"); }

// Generalized harmonic numbers H_0..H_k as one batch.
std::vector<Rational> harmonic_table(long k, int r) {
  std::vector<Rational> h(static_cast<std::size_t>(k) + 1);
  h[0] = 0;
  for (long m = 1; m <= k; ++m) {
    h[static_cast<std::size_t>(m)] =
        h[static_cast<std::size_t>(m - 1)] + Rational(1, int_pow(BigInt(m), static_cast<unsigned long>(r)));
  }
  return h;
}

// sum_{l=lo}^{hi} 1/(t + l) as one rational function.
RatFun reciprocal_sum(long lo, long hi) {
  RatFun sum(Poly{}, Poly(Rational(1)));
  for (long l = lo; l <= hi; ++l) {
    sum = sum + RatFun(Poly(Rational(1)), Poly::linear(1, Rational(l)));
  }
  return sum;
}

}  // namespace

FamilyParams FamilyParams::with_rho(int i, long rho) {
  FamilyParams fp;
  fp.i = i;
  fp.j = 1;
  fp.rho = rho;
  fp.validate();
  return fp;
}

FamilyParams FamilyParams::with_theta(int i, long theta) {
  FamilyParams fp;
  fp.i = i;
  fp.j = 2;
  fp.theta = theta;
  fp.validate();
  return fp;
}

FamilyParams FamilyParams::with_linear(int i, long ups, long chi, long psi) {
  FamilyParams fp;
  fp.i = i;
  fp.j = 3;
  fp.ups = ups;
  fp.chi = chi;
  fp.psi = psi;
  fp.validate();
  return fp;
}

void FamilyParams::validate() const {
  require(i >= 1 && i <= 4, "family index i must be in 1..4");
  require(j >= 1 && j <= 3, "family index j must be in 1..3");
  switch (j) {
    case 1:
      require(rho >= 2, "rho must be an integer >= 2");
      require(theta == 0 && ups == 0 && chi == 0 && psi == 0,
              "only rho applies when j == 1");
      break;
    case 2:
      require(theta <= -2 || theta >= 2, "theta must be an integer with |theta| >= 2");
      require(rho == 0 && ups == 0 && chi == 0 && psi == 0,
              "only theta applies when j == 2");
      break;
    default:
      require(ups >= 1, "ups must be an integer >= 1");
      require(chi >= ups, "chi must be an integer >= ups");
      require(psi >= 0, "psi must be an integer >= 0");
      require(rho == 0 && theta == 0, "only ups/chi/psi apply when j == 3");
      break;
  }
}

std::string FamilyParams::label() const {
  std::ostringstream os;
  os << '(' << i << ',' << j << ')';
  switch (j) {
    case 1: os << " rho=" << rho; break;
    case 2: os << " theta=" << theta; break;
    default: os << " ups=" << ups << " chi=" << chi << " psi=" << psi; break;
  }
  return os.str();
}

int omega_exponent(int i, int j) {
  require(i >= 1 && i <= 4 && j >= 1 && j <= 3, "omega_exponent: indices out of range");
  static constexpr int kOmega[4][3] = {{1, 0, 1}, {2, 0, 2}, {1, 0, 1}, {2, 1, 2}};
  return kOmega[i - 1][j - 1];
}

int eta_sign(const FamilyParams& fp) {
  fp.validate();
  const int sign_theta = (fp.j == 2 && fp.theta < 0) ? -1 : 1;
  static constexpr int kEta[4][3] = {{-1, -1, 1}, {1, 1, 1}, {1, 1, -1}, {1, 1, -1}};
  int value = kEta[fp.i - 1][fp.j - 1];
  if (fp.j == 2 && fp.i != 4) value *= sign_theta;
  return value;
}

Rational asymptotic_power(const FamilyParams& fp) {
  fp.validate();
  return Rational(3, 2) + Rational(kron(fp.i, 4));
}

Poly theta_linear(const FamilyParams& fp, long n) {
  fp.validate();
  require_n(n);
  switch (fp.j) {
    case 1: return Poly::linear(1, Rational(n + fp.rho));
    case 2: return Poly::linear(1, Rational(fp.theta * n + 1));
    default: return Poly::linear(Rational(fp.ups), Rational(-(fp.chi * n + fp.psi)));
  }
}

FactoredRatFun theta_factored(const FamilyParams& fp, long n) {
  FactoredRatFun f;
  f.push(theta_linear(fp, n), 1 + kron(fp.i, 2));
  if (fp.i == 3) f.push(Poly::linear(1, Rational(n + 1)), 1);
  f.push(Poly::linear(1, Rational(-(n - 1))), -(2 - kron(fp.i, 1)));
  return f;
}

RatFun theta_fun(const FamilyParams& fp, long n) { return theta_factored(fp, n).expand(); }

FactoredRatFun r1_factored(const FamilyParams& fp, long n) {
  fp.validate();
  require_n(n);
  FactoredRatFun f;
  for (long l = 0; l < n; ++l) f.push(Poly::linear(1, Rational(-l)), 2);
  f.push(theta_linear(fp, n), 1 + kron(fp.i, 2));
  if (fp.i == 3) f.push(Poly::linear(1, Rational(n + 1)), 1);
  f.push(Poly::linear(1, Rational(-(n - 1))), -(2 - kron(fp.i, 1)));
  for (long l = 1; l <= n + 1; ++l) f.push(Poly::linear(1, Rational(l)), -2);
  return f;
}

RatFun r1(const FamilyParams& fp, long n) { return r1_factored(fp, n).expand(); }

RatFun r2(const FamilyParams& fp, long n) { return r1_factored(fp, n).derivative().expand(); }

Rational log_derivative_eval(const FactoredRatFun& f, const Rational& x) {
  Rational sum = 0;
  for (const auto& [base, e] : f.factors()) {
    const Rational bv = base.eval(x);
    if (bv == 0) throw std::domain_error("log_derivative_eval: zero factor at evaluation point");
    sum += Rational(e) * base.derivative().eval(x) / bv;
  }
  return sum;
}

RatFun r2_sum_form(const FamilyParams& fp, long n) {
  const RatFun base = r1(fp, n);
  const RatFun phi = log_derivative(theta_fun(fp, n));
  // sum_{l=0}^{n-1} 1/(t-l) has the shifts negated.
  RatFun zeros_part(Poly{}, Poly(Rational(1)));
  for (long l = 0; l < n; ++l) {
    zeros_part = zeros_part + RatFun(Poly(Rational(1)), Poly::linear(1, Rational(-l)));
  }
  const RatFun poles_part = reciprocal_sum(1, n + 1);
  const RatFun bracket = zeros_part - poles_part + phi * Rational(1, 2);
  return (base * bracket) * Rational(2);
}

PartialFraction coefficients(const FamilyParams& fp, long n) {
  fp.validate();
  require_n(n);
  const int di3 = kron(fp.i, 3);
  const FactoredRatFun f = r1_factored(fp, n);

  std::vector<PoleSpec> poles;
  poles.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    poles.push_back({Rational(-(k + 1)), (k == n && di3 == 1) ? 1 : 2});
  }
  const auto terms = partial_fraction(f, poles);

  PartialFraction pf;
  pf.n = n;
  for (long k = 0; k <= n; ++k) {
    const auto& term = terms[static_cast<std::size_t>(k)];
    pf.a.push_back(term.a);
    if (term.order == 2) pf.b.push_back(term.b);
  }

  // The double-pole coefficients have an exact closed form; treat any
  // disagreement as an internal error.
  for (long k = 0; k <= n - di3; ++k) {
    if (pf.b[static_cast<std::size_t>(k)] != closed_form_b(fp, n, k)) {
      throw std::logic_error("coefficients: residue/closed-form mismatch for b at " + fp.label());
    }
  }
  if (di3 == 1 && pf.a[static_cast<std::size_t>(n)] != closed_form_a_top(fp, n)) {
    throw std::logic_error("coefficients: residue/closed-form mismatch for a_n at " + fp.label());
  }
  return pf;
}

Rational closed_form_b(const FamilyParams& fp, long n, long k) {
  fp.validate();
  require_n(n);
  require(k >= 0 && k <= n - kron(fp.i, 3), "closed_form_b: k out of range");
  const BigInt c = binom(n + k, k) * binom(n, k);
  return -Rational(c * c) * theta_factored(fp, n).eval(Rational(-(k + 1)));
}

Rational closed_form_a(const FamilyParams& fp, long n, long k) {
  const Rational b = closed_form_b(fp, n, k);
  const Rational phi = log_derivative_eval(theta_factored(fp, n), Rational(-(k + 1)));
  const Rational bracket =
      harmonic(n + k, 1) - 2 * harmonic(k, 1) + harmonic(n - k, 1) - phi / 2;
  return 2 * b * bracket;
}

Rational closed_form_a_top(const FamilyParams& fp, long n) {
  fp.validate();
  require_n(n);
  require(fp.i == 3, "closed_form_a_top: only the i == 3 families have a simple top pole");
  const BigInt c = binom(2 * n - 1, n - 1);
  Rational sigma;
  switch (fp.j) {
    case 1: sigma = Rational(fp.rho - 1); break;
    case 2: sigma = Rational(fp.theta - 1); break;
    default: sigma = Rational(fp.ups * (n + 1) + fp.chi * n + fp.psi); break;
  }
  const Rational sign = (fp.j == 3) ? Rational(-1) : Rational(1);
  const long power = 2 - kron(fp.j, 2);
  return sign * Rational(c * c) * sigma / rat_pow(Rational(n), power);
}

Rational first_kind_moment(const PartialFraction& pf, long k) {
  Rational sum = 0;
  for (std::size_t idx = 0; idx < pf.a.size(); ++idx) {
    sum += pf.a[idx] / Rational(k + static_cast<long>(idx) + 1);
  }
  for (std::size_t idx = 0; idx < pf.b.size(); ++idx) {
    sum -= pf.b[idx] / rat_pow(Rational(k + static_cast<long>(idx) + 1), 2);
  }
  return sum;
}

Rational second_kind_moment(const PartialFraction& pf, long k) {
  Rational sum = 0;
  for (std::size_t idx = 0; idx < pf.a.size(); ++idx) {
    sum -= pf.a[idx] / rat_pow(Rational(k + static_cast<long>(idx) + 1), 2);
  }
  for (std::size_t idx = 0; idx < pf.b.size(); ++idx) {
    sum += 2 * pf.b[idx] / rat_pow(Rational(k + static_cast<long>(idx) + 1), 3);
  }
  return sum;
}

namespace {

// Shared tail: p from the decomposition lists and the harmonic tables.
Approximant assemble_pq(long n, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const long top = static_cast<long>(a.size()) - 1;
  const auto h2 = harmonic_table(top, 2);
  const auto h3 = harmonic_table(top, 3);
  Rational q = 0;
  for (const auto& bk : b) q += bk;
  q *= 2;
  Rational p = 0;
  for (std::size_t k = 1; k < b.size(); ++k) p += 2 * b[k] * h3[k];
  for (std::size_t k = 1; k < a.size(); ++k) p -= a[k] * h2[k];
  return Approximant{n, p, q};
}

}  // namespace

Approximant sequence(const FamilyParams& fp, long n) {
  const PartialFraction pf = coefficients(fp, n);
  return assemble_pq(n, pf.a, pf.b);
}

Approximant apery_sequence(long n) {
  require(n >= 0, "apery_sequence: n must be >= 0");
  const auto h1 = harmonic_table(2 * n, 1);
  const auto h2 = harmonic_table(n, 2);
  const auto h3 = harmonic_table(n, 3);
  Rational q = 0, p = 0;
  for (long k = 0; k <= n; ++k) {
    const BigInt c = binom(n, k) * binom(n + k, k);
    const Rational b(c * c);
    const Rational a = b * (h1[static_cast<std::size_t>(n + k)] - 2 * h1[static_cast<std::size_t>(k)] +
                            h1[static_cast<std::size_t>(n - k)]);
    q += b;
    if (k >= 1) p += b * h3[static_cast<std::size_t>(k)] - a * h2[static_cast<std::size_t>(k)];
  }
  return Approximant{n, p, q};
}

const Rational& Sequence::at(long n) const {
  const long idx = n - first_n;
  if (idx < 0 || idx >= static_cast<long>(values.size())) {
    throw std::out_of_range("Sequence::at: index " + std::to_string(n) + " outside stored range");
  }
  return values[static_cast<std::size_t>(idx)];
}

SequencePair family_sequences(const FamilyParams& fp, long n_max) {
  SequencePair out;
  out.p.first_n = out.q.first_n = 1;
  for (long n = 1; n <= n_max; ++n) {
    const Approximant appr = sequence(fp, n);
    out.p.values.push_back(appr.p);
    out.q.values.push_back(appr.q);
  }
  return out;
}

SequencePair apery_sequences(long n_max) {
  SequencePair out;
  out.p.first_n = out.q.first_n = 0;
  for (long n = 0; n <= n_max; ++n) {
    const Approximant appr = apery_sequence(n);
    out.p.values.push_back(appr.p);
    out.q.values.push_back(appr.q);
  }
  return out;
}

namespace {

FactoredRatFun counterexample_factored(int variant, long n) {
  require(variant == 1 || variant == 2, "counterexample variant must be 1 or 2");
  require_n(n);
  FactoredRatFun f;
  for (long l = 0; l < n; ++l) f.push(Poly::linear(1, Rational(-l)), 2);
  if (variant == 1) {
    for (long l = 1; l <= n; ++l) f.push(Poly::linear(1, Rational(l)), -2);
    f.push(Poly::linear(1, Rational(n + 1)), -1);
    f.push(Poly::linear(1, Rational(n + 2)), -1);
  } else {
    // u_n t^2 + v_n with u_n = 4n(2H_n - H_{2n-1}) - 1, v_n = (n+1)u_n - 2n.
    const auto h1 = harmonic_table(2 * n, 1);
    const Rational u = 4 * Rational(n) * (2 * h1[static_cast<std::size_t>(n)] -
                                          h1[static_cast<std::size_t>(2 * n - 1)]) - 1;
    const Rational v = Rational(n + 1) * u - 2 * Rational(n);
    f.push(Poly(std::vector<Rational>{v, Rational(0), u}), 1);
    f.push(Poly::linear(1, Rational(-(n - 1))), -1);
    for (long l = 1; l <= n + 1; ++l) f.push(Poly::linear(1, Rational(l)), -2);
  }
  return f;
}

}  // namespace

CounterexampleApproximant counterexample_sequence(int variant, long n) {
  const FactoredRatFun f = counterexample_factored(variant, n);
  const long top = (variant == 1) ? n + 1 : n;
  const long simple_from = (variant == 1) ? n : n + 1;  // poles past this index are simple
  std::vector<PoleSpec> poles;
  for (long k = 0; k <= top; ++k) {
    poles.push_back({Rational(-(k + 1)), k >= simple_from ? 1 : 2});
  }
  const auto terms = partial_fraction(f, poles);
  std::vector<Rational> a, b;
  Rational residue_sum = 0;
  for (const auto& term : terms) {
    a.push_back(term.a);
    residue_sum += term.a;
    if (term.order == 2) b.push_back(term.b);
  }
  if (variant == 1 && residue_sum != 0) {
    throw std::logic_error("counterexample_sequence: variant 1 residues must sum to zero");
  }
  CounterexampleApproximant out;
  out.approximant = assemble_pq(n, a, b);
  out.zeta2_coefficient = residue_sum;
  return out;
}

CounterexampleSequences counterexample_sequences(int variant, long n_max) {
  CounterexampleSequences out;
  out.pq.p.first_n = out.pq.q.first_n = 1;
  for (long n = 1; n <= n_max; ++n) {
    const CounterexampleApproximant ce = counterexample_sequence(variant, n);
    out.pq.p.values.push_back(ce.approximant.p);
    out.pq.q.values.push_back(ce.approximant.q);
    out.zeta2_coefficient.push_back(ce.zeta2_coefficient);
  }
  return out;
}

std::pair<Poly, Poly> polynomials_AB(const FamilyParams& fp, long n) {
  const PartialFraction pf = coefficients(fp, n);
  return {Poly(pf.a), Poly(pf.b)};
}

OrthogonalityReport orthogonality_check(const FamilyParams& fp, long n) {
  const PartialFraction pf = coefficients(fp, n);
  OrthogonalityReport report;
  report.n = n;
  report.required_first = n - 1 + kron(fp.i, 1);   // k = 0 .. n-2+[i==1]
  report.required_second = n - 1;                  // k = 0 .. n-2
  report.pass = true;
  for (long k = 0; k <= n - 1; ++k) {
    const bool v1 = first_kind_moment(pf, k) == 0;
    const bool v2 = second_kind_moment(pf, k) == 0;
    report.first_kind.emplace_back(k, v1);
    report.second_kind.emplace_back(k, v2);
    if (k < report.required_first && !v1) report.pass = false;
    if (k < report.required_second && !v2) report.pass = false;
  }
  return report;
}

IntegralityReport integrality_check(const FamilyParams& fp, long n) {
  const PartialFraction pf = coefficients(fp, n);
  const Approximant appr = assemble_pq(n, pf.a, pf.b);
  const Rational nw = rat_pow(Rational(n), omega_exponent(fp.i, fp.j));
  const Rational l(lcm_upto(n));
  IntegralityReport report;
  report.q_ok = is_integer(nw * appr.q);
  report.p_ok = is_integer(nw * l * l * l * appr.p);
  report.a_ok = true;
  for (const auto& ak : pf.a) {
    if (!is_integer(nw * l * ak)) report.a_ok = false;
  }
  report.b_ok = true;
  for (const auto& bk : pf.b) {
    if (!is_integer(nw * bk)) report.b_ok = false;
  }
  return report;
}

std::string FamilyId::label() const {
  switch (kind) {
    case Kind::kApery: return "apery";
    case Kind::kParametric: return params.label();
    default: return "counterexample" + std::to_string(variant);
  }
}

std::vector<FamilyParams> smoke_grid() {
  std::vector<FamilyParams> grid;
  for (int i = 1; i <= 4; ++i) {
    for (long rho : {2L, 4L, 23L, 913L}) grid.push_back(FamilyParams::with_rho(i, rho));
  }
  for (int i = 1; i <= 4; ++i) {
    for (long theta : {2L, 57L, 93L, 784L}) grid.push_back(FamilyParams::with_theta(i, theta));
  }
  const long triples[4][3] = {{1, 1, 1}, {49, 891, 97}, {413, 732, 231}, {713, 3427, 231}};
  for (int i = 1; i <= 4; ++i) {
    for (const auto& t : triples) grid.push_back(FamilyParams::with_linear(i, t[0], t[1], t[2]));
  }
  return grid;
}

std::vector<FamilyId> figure1_families() {
  std::vector<FamilyId> out;
  out.push_back(FamilyId{FamilyId::Kind::kApery, {}, 0});
  const auto parametric = [](FamilyParams fp) {
    return FamilyId{FamilyId::Kind::kParametric, fp, 0};
  };
  out.push_back(parametric(FamilyParams::with_rho(1, 2)));
  out.push_back(parametric(FamilyParams::with_rho(2, 4)));
  out.push_back(parametric(FamilyParams::with_rho(3, 913)));
  out.push_back(parametric(FamilyParams::with_rho(4, 23)));
  out.push_back(parametric(FamilyParams::with_theta(1, 2)));
  out.push_back(parametric(FamilyParams::with_theta(2, 784)));
  out.push_back(parametric(FamilyParams::with_theta(3, 93)));
  out.push_back(parametric(FamilyParams::with_theta(4, 57)));
  out.push_back(parametric(FamilyParams::with_linear(1, 1, 1, 1)));
  out.push_back(parametric(FamilyParams::with_linear(2, 49, 891, 97)));
  out.push_back(parametric(FamilyParams::with_linear(3, 413, 732, 231)));
  out.push_back(parametric(FamilyParams::with_linear(4, 713, 3427, 231)));
  return out;
}

std::vector<FamilyId> figure2_families() {
  std::vector<FamilyId> out;
  out.push_back(FamilyId{FamilyId::Kind::kApery, {}, 0});
  out.push_back(FamilyId{FamilyId::Kind::kCounterexample, {}, 1});
  out.push_back(FamilyId{FamilyId::Kind::kCounterexample, {}, 2});
  return out;
}

}  // namespace zeta3
