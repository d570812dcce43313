// Certified numerical analysis of the approximant sequences: the zeta(3)
// and zeta(2) reference values, approximation errors, the decay/growth
// certificates with their n-th roots, asymptotic ratio and slope checks, the
// figure metric f(n) = |1/ln|zeta(3) - p_n/q_n||, and the constant-coefficient
// limit fit that separates the two modes of a second-order recurrence.
#pragma once

#include "zeta3/families.hpp"
#include "zeta3/fixed.hpp"

#include <functional>
#include <vector>

namespace zeta3 {

// Precision ceiling for automatic escalation (decimal digits).  Defaults to
// 2000; the environment variable ZETA3_MAX_DIGITS overrides it.
long max_precision_digits();

// zeta(3) = (5/2) sum_{k>=1} (-1)^(k-1) / (k^3 C(2k,k)); the partial sum is
// exact and the alternating tail is bounded by the first omitted term.
FixedPrecisionValue zeta3_reference(long digits);

// zeta(2) = pi^2 / 6.
FixedPrecisionValue zeta2_reference(long digits);

// lambda = (sqrt(2)-1)^4 = 17 - 12 sqrt(2), the error decay rate.
FixedPrecisionValue lambda_value(long digits);
// mu = (sqrt(2)+1)^4 = 17 + 12 sqrt(2), the coefficient growth rate.
FixedPrecisionValue mu_value(long digits);
// e^3 (sqrt(2)-1)^4 < 1, the target of the certificate root sequence.
FixedPrecisionValue decay_target(long digits);
// Irrationality measure bound 1 + (3 + ln mu)/(ln mu - 3).
FixedPrecisionValue mu_constant(long digits);

// Exact integers (x, y) with (17 +- 12 sqrt2)^n = x + y sqrt2.
std::pair<BigInt, BigInt> quadratic_power(long n, bool growth);

// r_n = q zeta(3) - p (optionally with a zeta(2) column folded in).
FixedPrecisionValue linear_form(const Approximant& appr, long digits);
FixedPrecisionValue linear_form_with_zeta2(const Approximant& appr, const Rational& zeta2_coeff,
                                           long digits);

// |zeta(3) - p/q| with at least `sig` certified significant digits; precision
// escalates by doubling until the cap.
FixedPrecisionValue approximation_error(const Approximant& appr, int sig = 4);

// f = |1 / ln|zeta(3) - p/q||, certified to >= 7 significant digits.
FixedPrecisionValue figure_metric(const Approximant& appr);

// ---------------------------------------------------------------------------
// Decay certificate: value_n = n^w l_n^3 |r_n| and its n-th root, which must
// sink below 1 (the sequence tends to e^3 (sqrt2-1)^4).
// ---------------------------------------------------------------------------
struct CertificateRow {
  long n = 0;
  bool q_integral = false;  // n^w q_n integer
  bool p_integral = false;  // n^w l_n^3 p_n integer
  FixedPrecisionValue value;
  FixedPrecisionValue nth_root;
};

struct Certificate {
  int omega = 0;
  std::vector<CertificateRow> rows;
  long crossover_n = -1;  // first n from which every root is certified < 1
  bool decays = false;    // last root certified < 1
  bool integral = false;  // every row integral
};

Certificate certificate(const FamilyId& id, long n_max);

// Which scalings n^w (w = 0,1,2) fail to integerize a counterexample variant.
struct ScalingScan {
  int omega = 0;
  long first_q_failure = -1;  // smallest n with n^w q not an integer
  long first_p_failure = -1;  // likewise for n^w l_n^3 p
  bool integral() const { return first_q_failure < 0 && first_p_failure < 0; }
};

std::vector<ScalingScan> counterexample_scaling_scan(int variant, long n_max);

// ---------------------------------------------------------------------------
// Asymptotics of the linear form.
// ---------------------------------------------------------------------------
struct AsymptoticReport {
  FamilyParams params;
  // Ratio test: rho_n = |r_{n+1}/r_n| ((n+1)/n)^s at n = n_hi-2, n_hi-1 with
  // a Richardson step; the limit is lambda.
  double ratio_estimate = 0;
  double ratio_deviation = 0;  // certified upper bound on |E/lambda - 1|
  bool ratio_ok = false;       // deviation < 1%
  // Slope test: least squares of ln|r_n| - n ln lambda against [1, ln n, 1/n];
  // the ln n coefficient estimates -s.
  double slope = 0;
  double slope_deviation = 0;
  bool slope_applies = false;  // spectra with a far zero (j == 1, large rho) drift; report only
  bool slope_ok = false;
  // Sign pattern sign(r_n) = -eta and the normalized magnitude
  // |r_n| n^s lambda^{-n} 2^(1/4) / pi^(3/2) at the last sample (reported).
  bool signs_ok = false;
  double drift_constant = 0;
};

AsymptoticReport asymptotic_check(const FamilyParams& fp, long n_lo = 20, long n_hi = 41);

// ---------------------------------------------------------------------------
// Error-ratio check shared by the baseline and the counterexample variants:
// per-n Richardson extrapolation of |r_{n+1}/r_n| must approach lambda.
// ---------------------------------------------------------------------------
struct RemainderRatioReport {
  std::vector<long> n;
  std::vector<double> deviation;  // certified |E_n/lambda - 1| upper bounds
  double worst = 0;
  bool ok = false;  // all below 5%
};

RemainderRatioReport remainder_ratio_check(const FamilyId& id, long n_lo = 20, long n_hi = 40);

// ---------------------------------------------------------------------------
// Mode-separated constant fit: solve the 2x2 systems pairing the exact q_n
// with the certified r_n so both characteristic modes are pinned, then take
// one Richardson step.  For sequences obeying (or shadowing) a second-order
// recurrence with characteristic t^2 - 34t + 1 this lands on (34, -1).
// ---------------------------------------------------------------------------
struct PairFitResult {
  FixedPrecisionValue c1, c0;
  long c1_rounded = 0, c0_rounded = 0;
  double c1_margin = 0, c0_margin = 0;  // certified |c - rounded| bounds
  bool integral = false;                // both margins < 1/2
};

PairFitResult mode_separated_pair_fit(const FamilyId& id, long n_fit = 40);

}  // namespace zeta3
