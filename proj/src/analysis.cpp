#include "zeta3/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace zeta3 {

namespace {

// Linear-form samples r_n = q_n zeta(3) - p_n (- A_n zeta(2) for the
// counterexamples) over a contiguous run of n, sharing one reference value.
struct FormSamples {
  long first_n = 1;
  std::vector<FixedPrecisionValue> r;

  const FixedPrecisionValue& at(long n) const {
    return r.at(static_cast<std::size_t>(n - first_n));
  }
};

FormSamples form_samples(const FamilyId& id, long n_max, long digits) {
  FormSamples out;
  const FixedPrecisionValue z3 = zeta3_reference(digits);
  switch (id.kind) {
    case FamilyId::Kind::kApery: {
      const SequencePair s = apery_sequences(n_max);
      out.first_n = 0;
      for (long n = 0; n <= n_max; ++n) {
        out.r.push_back(fp_sub(fp_mul_rational(z3, s.q.at(n)),
                               FixedPrecisionValue::from_rational(s.p.at(n), digits)));
      }
      break;
    }
    case FamilyId::Kind::kParametric: {
      const SequencePair s = family_sequences(id.params, n_max);
      out.first_n = 1;
      for (long n = 1; n <= n_max; ++n) {
        out.r.push_back(fp_sub(fp_mul_rational(z3, s.q.at(n)),
                               FixedPrecisionValue::from_rational(s.p.at(n), digits)));
      }
      break;
    }
    case FamilyId::Kind::kCounterexample: {
      const CounterexampleSequences s = counterexample_sequences(id.variant, n_max);
      const FixedPrecisionValue z2 = zeta2_reference(digits);
      out.first_n = 1;
      for (long n = 1; n <= n_max; ++n) {
        FixedPrecisionValue r = fp_sub(fp_mul_rational(z3, s.pq.q.at(n)),
                                       FixedPrecisionValue::from_rational(s.pq.p.at(n), digits));
        const Rational& a = s.zeta2_coefficient.at(static_cast<std::size_t>(n - 1));
        if (a != 0) r = fp_sub(r, fp_mul_rational(z2, a));
        out.r.push_back(std::move(r));
      }
      break;
    }
  }
  return out;
}

// Reference precision comfortably beyond the lambda^n decay of the forms.
long sample_digits(long n_max) { return 3 * n_max + 80; }

FixedPrecisionValue error_ball(const Approximant& appr, long digits) {
  const FixedPrecisionValue r = linear_form(appr, digits);
  return fp_mul_rational(r.abs(), Rational(1) / rat_abs(appr.q));
}

// base^(k/2) for a positive rational base and half-integer exponent.
FixedPrecisionValue rational_half_power(const Rational& base, const Rational& expo, long digits) {
  const Rational doubled = expo * 2;
  if (!is_integer(doubled)) {
    throw std::invalid_argument("rational_half_power: exponent must be a half-integer");
  }
  const long k = numer(doubled).convert_to<long>();
  return fp_sqrt(FixedPrecisionValue::from_rational(rat_pow(base, k), digits + 5), digits);
}

// rho_n = |r_{n+1} / r_n| * ((n+1)/n)^s; with s = 0 the raw ratio.
FixedPrecisionValue ratio_sample(const FormSamples& s, long n, const Rational& power, long digits) {
  FixedPrecisionValue rho = fp_div(s.at(n + 1).abs(), s.at(n).abs(), digits);
  if (power != 0) {
    rho = fp_mul(rho, rational_half_power(Rational(n + 1, n), power, digits));
  }
  return rho;
}

// Richardson step E_n = n x_n - (n-1) x_{n-1}, cancelling a 1/n correction.
FixedPrecisionValue richardson(const FixedPrecisionValue& x_prev, const FixedPrecisionValue& x,
                               long n) {
  return fp_sub(fp_mul_rational(x, Rational(n)), fp_mul_rational(x_prev, Rational(n - 1)));
}

// Certified upper bound for |x/y - 1| as a plain double (rounded up).
double relative_deviation(const FixedPrecisionValue& x, const FixedPrecisionValue& y,
                          long digits) {
  const FixedPrecisionValue d = fp_div(fp_sub(x, y), y, digits).abs();
  return d.upper().convert_to<double>();
}

// Least squares for y ~ c0 + c1 ln n + c2 / n over the given samples.
std::array<double, 3> fit_log_model(const std::vector<long>& ns, const std::vector<double>& ys) {
  double m[3][4] = {};
  for (std::size_t t = 0; t < ns.size(); ++t) {
    const double x[3] = {1.0, std::log(static_cast<double>(ns[t])),
                         1.0 / static_cast<double>(ns[t])};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) m[a][b] += x[a] * x[b];
      m[a][3] += x[a] * ys[t];
    }
  }
  // Gaussian elimination with partial pivoting on the 3x4 tableau.
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::fabs(m[row][col]) > std::fabs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0) throw std::runtime_error("fit_log_model: singular normal equations");
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = m[row][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

}  // namespace

long max_precision_digits() {
  if (const char* env = std::getenv("ZETA3_MAX_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2000;
}

FixedPrecisionValue zeta3_reference(long digits) {
  if (digits < 1) throw std::invalid_argument("zeta3_reference: digits must be positive");
  const Rational cutoff(1, pow10(digits + 3));
  Rational sum = 0;
  Rational prev_mag;
  BigInt central = 2;  // C(2k, k) at k = 1
  int sign = 1;
  for (long k = 1;; ++k) {
    const Rational mag(1, BigInt(k) * k * k * central);
    if (k > 1 && mag >= prev_mag) {
      throw std::logic_error("zeta3_reference: series terms must decrease");
    }
    if (mag < cutoff) {
      // Alternating series with decreasing terms: the sum lies within the
      // first omitted term of the partial sum.
      return FixedPrecisionValue::from_interval(Rational(5, 2) * (sum - mag),
                                                Rational(5, 2) * (sum + mag), digits);
    }
    sum += sign > 0 ? mag : -mag;
    prev_mag = mag;
    sign = -sign;
    central = central * (2 * (2 * k + 1)) / (k + 1);
  }
}

FixedPrecisionValue zeta2_reference(long digits) {
  const FixedPrecisionValue pi = fp_pi(digits + 5);
  return fp_mul_rational(fp_mul(pi, pi), Rational(1, 6)).round_to(digits);
}

FixedPrecisionValue lambda_value(long digits) {
  const FixedPrecisionValue s2 = fp_sqrt(FixedPrecisionValue::from_rational(2, digits + 10),
                                         digits + 10);
  return fp_add(FixedPrecisionValue::from_rational(17, digits + 10),
                fp_mul_rational(s2, Rational(-12)))
      .round_to(digits);
}

FixedPrecisionValue mu_value(long digits) {
  const FixedPrecisionValue s2 = fp_sqrt(FixedPrecisionValue::from_rational(2, digits + 10),
                                         digits + 10);
  return fp_add(FixedPrecisionValue::from_rational(17, digits + 10),
                fp_mul_rational(s2, Rational(12)))
      .round_to(digits);
}

FixedPrecisionValue decay_target(long digits) {
  const FixedPrecisionValue e = fp_e(digits + 10);
  const FixedPrecisionValue e3 = fp_mul(fp_mul(e, e), e);
  return fp_mul(e3, lambda_value(digits + 10)).round_to(digits);
}

FixedPrecisionValue mu_constant(long digits) {
  const FixedPrecisionValue log_mu = fp_ln(mu_value(digits + 15), digits + 15);
  const FixedPrecisionValue three = FixedPrecisionValue::from_rational(3, digits + 15);
  const FixedPrecisionValue ratio = fp_div(fp_add(log_mu, three), fp_sub(log_mu, three),
                                           digits + 5);
  return fp_add(FixedPrecisionValue::from_rational(1, digits + 5), ratio).round_to(digits);
}

std::pair<BigInt, BigInt> quadratic_power(long n, bool growth) {
  if (n < 0) throw std::invalid_argument("quadratic_power: exponent must be nonnegative");
  const BigInt c = growth ? 12 : -12;
  BigInt x = 1, y = 0;
  for (long step = 0; step < n; ++step) {
    const BigInt nx = 17 * x + 2 * c * y;
    const BigInt ny = c * x + 17 * y;
    x = nx;
    y = ny;
  }
  return {x, y};
}

FixedPrecisionValue linear_form(const Approximant& appr, long digits) {
  const FixedPrecisionValue z3 = zeta3_reference(digits);
  return fp_sub(fp_mul_rational(z3, appr.q),
                FixedPrecisionValue::from_rational(appr.p, digits));
}

FixedPrecisionValue linear_form_with_zeta2(const Approximant& appr, const Rational& zeta2_coeff,
                                           long digits) {
  FixedPrecisionValue r = linear_form(appr, digits);
  if (zeta2_coeff != 0) {
    r = fp_sub(r, fp_mul_rational(zeta2_reference(digits), zeta2_coeff));
  }
  return r;
}

FixedPrecisionValue approximation_error(const Approximant& appr, int sig) {
  if (appr.q == 0) throw std::invalid_argument("approximation_error: q must be nonzero");
  const long cap = max_precision_digits();
  long digits = std::max<long>(96, 3 * appr.n + sig + 24);
  for (;;) {
    digits = std::min(digits, cap);
    const FixedPrecisionValue err = error_ball(appr, digits);
    if (!err.contains_zero() && err.certified_sig_digits() >= sig) return err;
    if (digits == cap) {
      throw std::runtime_error(
          "approximation_error: precision cap reached (raise ZETA3_MAX_DIGITS)");
    }
    digits *= 2;
  }
}

FixedPrecisionValue figure_metric(const Approximant& appr) {
  const long cap = max_precision_digits();
  long digits = std::max<long>(96, 3 * appr.n + 40);
  for (;;) {
    digits = std::min(digits, cap);
    const FixedPrecisionValue err = error_ball(appr, digits);
    if (!err.contains_zero() && err.is_positive()) {
      const FixedPrecisionValue log_err = fp_ln(err, 40);
      if (!log_err.contains_zero()) {
        const FixedPrecisionValue f =
            fp_div(FixedPrecisionValue::from_rational(1, 40), log_err, 40).abs();
        if (f.certified_sig_digits() >= 7) return f;
      }
    }
    if (digits == cap) {
      throw std::runtime_error("figure_metric: precision cap reached (raise ZETA3_MAX_DIGITS)");
    }
    digits *= 2;
  }
}

Certificate certificate(const FamilyId& id, long n_max) {
  if (n_max < 1) throw std::invalid_argument("certificate: n_max must be positive");
  int omega = 0;
  SequencePair seq;
  switch (id.kind) {
    case FamilyId::Kind::kApery:
      seq = apery_sequences(n_max);
      break;
    case FamilyId::Kind::kParametric:
      omega = omega_exponent(id.params.i, id.params.j);
      seq = family_sequences(id.params, n_max);
      break;
    case FamilyId::Kind::kCounterexample:
      throw std::invalid_argument(
          "certificate: counterexample variants have no integral scaling; "
          "use counterexample_scaling_scan");
  }

  const long digits = sample_digits(n_max);
  const FixedPrecisionValue z3 = zeta3_reference(digits);
  const FixedPrecisionValue one = FixedPrecisionValue::from_rational(1, 25);

  Certificate cert;
  cert.omega = omega;
  BigInt l = 1;  // lcm(1..n), maintained incrementally
  for (long n = 1; n <= n_max; ++n) {
    l = boost::multiprecision::lcm(l, BigInt(n));
    const BigInt scale = int_pow(BigInt(n), static_cast<unsigned long>(omega)) * l * l * l;
    const Rational a = Rational(scale) * seq.q.at(n);
    const Rational b = Rational(scale) * seq.p.at(n);

    CertificateRow row;
    row.n = n;
    row.q_integral = is_integer(a);
    row.p_integral = is_integer(b);
    row.value = fp_sub(fp_mul_rational(z3, a), FixedPrecisionValue::from_rational(b, digits)).abs();
    if (row.value.contains_zero()) {
      throw std::runtime_error("certificate: linear form not resolved at reference precision");
    }
    row.nth_root = fp_nth_root(row.value, static_cast<unsigned long>(n), 25);
    cert.rows.push_back(std::move(row));
  }

  cert.integral = true;
  for (const CertificateRow& row : cert.rows) {
    cert.integral = cert.integral && row.q_integral && row.p_integral;
  }
  cert.decays = fp_definitely_less(cert.rows.back().nth_root, one);
  long crossover = -1;
  for (long idx = static_cast<long>(cert.rows.size()) - 1; idx >= 0; --idx) {
    if (!fp_definitely_less(cert.rows[static_cast<std::size_t>(idx)].nth_root, one)) break;
    crossover = cert.rows[static_cast<std::size_t>(idx)].n;
  }
  cert.crossover_n = crossover;
  return cert;
}

std::vector<ScalingScan> counterexample_scaling_scan(int variant, long n_max) {
  const CounterexampleSequences seq = counterexample_sequences(variant, n_max);
  std::vector<ScalingScan> scans;
  for (int omega = 0; omega <= 2; ++omega) {
    ScalingScan scan;
    scan.omega = omega;
    BigInt l = 1;
    for (long n = 1; n <= n_max; ++n) {
      l = boost::multiprecision::lcm(l, BigInt(n));
      const BigInt npow = int_pow(BigInt(n), static_cast<unsigned long>(omega));
      if (scan.first_q_failure < 0 && !is_integer(Rational(npow) * seq.pq.q.at(n))) {
        scan.first_q_failure = n;
      }
      if (scan.first_p_failure < 0 && !is_integer(Rational(npow * l * l * l) * seq.pq.p.at(n))) {
        scan.first_p_failure = n;
      }
    }
    scans.push_back(scan);
  }
  return scans;
}

AsymptoticReport asymptotic_check(const FamilyParams& fp, long n_lo, long n_hi) {
  if (n_lo < 2 || n_hi < n_lo + 4) {
    throw std::invalid_argument("asymptotic_check: need n_lo >= 2 and a window of >= 5 points");
  }
  fp.validate();

  AsymptoticReport report;
  report.params = fp;

  FamilyId id;
  id.kind = FamilyId::Kind::kParametric;
  id.params = fp;
  const FormSamples samples = form_samples(id, n_hi, sample_digits(n_hi));

  const Rational power = asymptotic_power(fp);
  const long d = 40;
  const FixedPrecisionValue lambda = lambda_value(d + 10);

  // Ratio test with one Richardson step across the last two windows.
  const FixedPrecisionValue rho_prev = ratio_sample(samples, n_hi - 2, power, d);
  const FixedPrecisionValue rho_last = ratio_sample(samples, n_hi - 1, power, d);
  const FixedPrecisionValue extrapolated = richardson(rho_prev, rho_last, n_hi - 1);
  report.ratio_estimate = extrapolated.to_double();
  report.ratio_deviation = relative_deviation(extrapolated, lambda, d);
  report.ratio_ok = report.ratio_deviation < 0.01;

  // Sign pattern of the linear form.
  const int expected = -eta_sign(fp);
  report.signs_ok = true;
  for (long n = n_lo; n <= n_hi; ++n) {
    const FixedPrecisionValue& r = samples.at(n);
    const bool ok = expected > 0 ? r.is_positive() : r.is_negative();
    report.signs_ok = report.signs_ok && ok;
  }

  // Slope of ln|r_n| - n ln lambda against ln n.
  const double log_lambda = fp_ln(lambda, d).to_double();
  std::vector<long> ns;
  std::vector<double> xs;
  for (long n = n_lo; n <= n_hi; ++n) {
    ns.push_back(n);
    xs.push_back(fp_ln(samples.at(n).abs(), d).to_double() -
                 static_cast<double>(n) * log_lambda);
  }
  const std::array<double, 3> coeffs = fit_log_model(ns, xs);
  const double target = -power.convert_to<double>();
  report.slope = coeffs[1];
  report.slope_deviation = std::fabs(coeffs[1] / target - 1.0);
  report.slope_applies = fp.j != 1 || fp.rho <= 10;
  report.slope_ok = report.slope_deviation < 0.10;

  // Reported normalized magnitude |r_n| n^s lambda^{-n} 2^(1/4) pi^(-3/2).
  const double log_r = fp_ln(samples.at(n_hi).abs(), d).to_double();
  const double log_c = log_r + power.convert_to<double>() * std::log(static_cast<double>(n_hi)) -
                       static_cast<double>(n_hi) * log_lambda + 0.25 * std::log(2.0) -
                       1.5 * std::log(std::acos(-1.0));
  report.drift_constant = std::exp(log_c);
  return report;
}

RemainderRatioReport remainder_ratio_check(const FamilyId& id, long n_lo, long n_hi) {
  if (n_lo < 2 || n_hi <= n_lo) {
    throw std::invalid_argument("remainder_ratio_check: need 2 <= n_lo < n_hi");
  }
  const FormSamples samples = form_samples(id, n_hi + 1, sample_digits(n_hi + 1));
  const long d = 40;
  const FixedPrecisionValue lambda = lambda_value(d + 10);

  RemainderRatioReport report;
  report.ok = true;
  FixedPrecisionValue rho_prev = ratio_sample(samples, n_lo - 1, Rational(0), d);
  for (long n = n_lo; n <= n_hi; ++n) {
    const FixedPrecisionValue rho = ratio_sample(samples, n, Rational(0), d);
    const FixedPrecisionValue extrapolated = richardson(rho_prev, rho, n);
    const double dev = relative_deviation(extrapolated, lambda, d);
    report.n.push_back(n);
    report.deviation.push_back(dev);
    report.worst = std::max(report.worst, dev);
    report.ok = report.ok && dev < 0.05;
    rho_prev = rho;
  }
  return report;
}

PairFitResult mode_separated_pair_fit(const FamilyId& id, long n_fit) {
  if (n_fit < 3) throw std::invalid_argument("mode_separated_pair_fit: n_fit too small");
  const long n_top = n_fit + 2;
  const FormSamples samples = form_samples(id, n_top, sample_digits(n_top));

  Sequence q;
  switch (id.kind) {
    case FamilyId::Kind::kApery:
      q = apery_sequences(n_top).q;
      break;
    case FamilyId::Kind::kParametric:
      q = family_sequences(id.params, n_top).q;
      break;
    case FamilyId::Kind::kCounterexample:
      q = counterexample_sequences(id.variant, n_top).pq.q;
      break;
  }

  const long d = 40;
  // One 2x2 Cramer solve per window: q and r follow the same two-term model
  //   y_{m+2} = c1 y_{m+1} + c0 y_m
  // with opposite dominant modes, so the pair pins both coefficients.
  const auto window = [&](long m) {
    const FixedPrecisionValue det =
        fp_sub(fp_mul_rational(samples.at(m), q.at(m + 1)),
               fp_mul_rational(samples.at(m + 1), q.at(m)));
    const FixedPrecisionValue c1_num =
        fp_sub(fp_mul_rational(samples.at(m), q.at(m + 2)),
               fp_mul_rational(samples.at(m + 2), q.at(m)));
    const FixedPrecisionValue c0_num =
        fp_sub(fp_mul_rational(samples.at(m + 2), q.at(m + 1)),
               fp_mul_rational(samples.at(m + 1), q.at(m + 2)));
    return std::make_pair(fp_div(c1_num, det, d), fp_div(c0_num, det, d));
  };

  const auto [c1_prev, c0_prev] = window(n_fit - 1);
  const auto [c1_last, c0_last] = window(n_fit);

  PairFitResult result;
  result.c1 = richardson(c1_prev, c1_last, n_fit);
  result.c0 = richardson(c0_prev, c0_last, n_fit);
  result.c1_rounded = std::llround(result.c1.to_double());
  result.c0_rounded = std::llround(result.c0.to_double());
  const Rational m1 = (fp_sub(result.c1, FixedPrecisionValue::from_rational(result.c1_rounded, d))
                           .abs())
                          .upper();
  const Rational m0 = (fp_sub(result.c0, FixedPrecisionValue::from_rational(result.c0_rounded, d))
                           .abs())
                          .upper();
  result.c1_margin = m1.convert_to<double>();
  result.c0_margin = m0.convert_to<double>();
  result.integral = m1 < Rational(1, 2) && m0 < Rational(1, 2);
  return result;
}

}  // namespace zeta3
