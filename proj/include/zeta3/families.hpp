// Construction of the rational approximants to zeta(3).
//
// Every family starts from the base rational function
//     R(t) = [ (-t)_n ]^2 / [ (t+1)_{n+1} ]^2
// multiplied by a perturbation factor theta(t) that is a power of a linear
// form divided by powers of (t - n + 1) and (t + n + 1).  The coefficients of
// the partial-fraction decomposition of R(t)*theta(t) over the poles
// t = -1, ..., -(n+1) generate the numerator / denominator sequences (p_n,
// q_n) whose ratios approximate zeta(3).  The classical Apery sequence and
// two deliberately defective constructions (the "counterexample" variants,
// whose sequences lose integrality or pick up a zeta(2) term) are built with
// the same machinery.
#pragma once

#include "zeta3/ratfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zeta3 {

inline int kron(int a, int b) { return a == b ? 1 : 0; }

// ---------------------------------------------------------------------------
// Family parameters.  The outer index i in {1,2,3,4} selects the pole/zero
// pattern of the perturbation; the inner index j in {1,2,3} selects the shape
// of its linear form:
//   j = 1:  L(t) = t + n + rho          (integer rho >= 2)
//   j = 2:  L(t) = t + theta*n + 1      (integer |theta| >= 2)
//   j = 3:  L(t) = ups*t - chi*n - psi  (ups >= 1, chi >= ups, psi >= 0)
// ---------------------------------------------------------------------------
struct FamilyParams {
  int i = 1;
  int j = 1;
  long rho = 0;    // j == 1
  long theta = 0;  // j == 2
  long ups = 0;    // j == 3
  long chi = 0;    // j == 3
  long psi = 0;    // j == 3

  static FamilyParams with_rho(int i, long rho);
  static FamilyParams with_theta(int i, long theta);
  static FamilyParams with_linear(int i, long ups, long chi, long psi);

  void validate() const;  // throws std::invalid_argument
  std::string label() const;
};

// Exponent w(i,j) in the integrality scalings n^w q_n and n^w l_n^3 p_n
// (l_n = lcm(1..n)).
int omega_exponent(int i, int j);

// Sign of the constant governing the large-n asymptotics of the linear form
// r_n = q_n zeta(3) - p_n; empirically sign(r_n) = -eta_sign.
int eta_sign(const FamilyParams& fp);

// The linear form decays like lambda^n n^{-s} with s = 3/2 + [i == 4].
Rational asymptotic_power(const FamilyParams& fp);

// ---------------------------------------------------------------------------
// The perturbation factor and the perturbed rational function.
// ---------------------------------------------------------------------------
Poly theta_linear(const FamilyParams& fp, long n);
FactoredRatFun theta_factored(const FamilyParams& fp, long n);
RatFun theta_fun(const FamilyParams& fp, long n);

// R(t)*theta(t) in factored / expanded form.
FactoredRatFun r1_factored(const FamilyParams& fp, long n);
RatFun r1(const FamilyParams& fp, long n);

// d/dt [ R(t)*theta(t) ], computed by exact differentiation of the factored
// product.
RatFun r2(const FamilyParams& fp, long n);

// The same derivative assembled through the logarithmic-derivative identity
//   R2 = 2 R1 [ sum_{l=0}^{n-1} 1/(t-l) - sum_{l=1}^{n+1} 1/(t+l) + phi(t)/2 ],
// phi = theta'/theta.  Used as an independent cross-check of r2().
RatFun r2_sum_form(const FamilyParams& fp, long n);

// Sum of e_i * f_i'(x) / f_i(x) over the factored form: the logarithmic
// derivative evaluated without expanding.
Rational log_derivative_eval(const FactoredRatFun& f, const Rational& x);

// ---------------------------------------------------------------------------
// Partial-fraction coefficients over the poles t = -(k+1).
//   R(t)*theta(t) = sum_k [ a_k/(t+k+1) - b_k/(t+k+1)^2 ]
// a has entries k = 0..n; b has entries k = 0..n-[i==3] (for i == 3 the pole
// at t = -(n+1) is simple).
// ---------------------------------------------------------------------------
struct PartialFraction {
  long n = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;
};

// Authoritative extraction via residues.  The closed form for b (and, for
// i == 3, the top coefficient a_n) is exact and re-checked internally.
PartialFraction coefficients(const FamilyParams& fp, long n);

// Closed forms.  closed_form_b is an identity; closed_form_a is the repaired
// derivative-side formula
//   a_k = 2 b_k [ H_{n+k} - 2 H_k + H_{n-k} - phi(-k-1)/2 ]
// (valid at double poles), verified against the residues in the test suite.
Rational closed_form_b(const FamilyParams& fp, long n, long k);
Rational closed_form_a(const FamilyParams& fp, long n, long k);
Rational closed_form_a_top(const FamilyParams& fp, long n);  // i == 3, k == n

// Moments of the decomposition: the values of R*theta and its derivative at
// the nonnegative integer t = k.
Rational first_kind_moment(const PartialFraction& pf, long k);
Rational second_kind_moment(const PartialFraction& pf, long k);

// ---------------------------------------------------------------------------
// Sequences.
// ---------------------------------------------------------------------------
struct Approximant {
  long n = 0;
  Rational p;  // numerator sequence
  Rational q;  // denominator sequence; p_n/q_n -> zeta(3)
};

// q_n = 2 sum_k b_k,  p_n = 2 sum_{k>=1} b_k H_k^(3) - sum_{k>=1} a_k H_k^(2).
Approximant sequence(const FamilyParams& fp, long n);

// Classical baseline: b_k = C(n,k)^2 C(n+k,k)^2, q_n = sum b_k,
// a_k = b_k (H_{n+k} - 2H_k + H_{n-k}), p_n = sum_{k>=1} (b_k H_k^(3) - a_k H_k^(2)).
Approximant apery_sequence(long n);

// A contiguous run of exact values indexed by the sequence parameter n.
struct Sequence {
  long first_n = 0;
  std::vector<Rational> values;

  long last_n() const { return first_n + static_cast<long>(values.size()) - 1; }
  const Rational& at(long n) const;
};

struct SequencePair {
  Sequence p, q;
};

SequencePair family_sequences(const FamilyParams& fp, long n_max);  // n = 1..n_max
SequencePair apery_sequences(long n_max);                           // n = 0..n_max

// ---------------------------------------------------------------------------
// Counterexample variants: same machinery, deliberately broken tails.
//   variant 1:  [(-t)_n]^2 / [ ((t+1)_n)^2 (t+n+1)(t+n+2) ]
//   variant 2:  [(-t)_n]^2 (u_n t^2 + v_n) / [ ((t+1)_{n+1})^2 (t-n+1) ],
//               u_n = 4n(2H_n - H_{2n-1}) - 1,  v_n = (n+1)u_n - 2n.
// Variant 2 is O(1/t) at infinity, so its residues do not sum to zero: the
// leftover sum multiplies zeta(2) in the linear form and is reported instead
// of asserted away.
// ---------------------------------------------------------------------------
struct CounterexampleApproximant {
  Approximant approximant;
  Rational zeta2_coefficient;  // sum of the simple-pole coefficients
};

CounterexampleApproximant counterexample_sequence(int variant, long n);

struct CounterexampleSequences {
  SequencePair pq;                 // n = 1..n_max
  std::vector<Rational> zeta2_coefficient;
};

CounterexampleSequences counterexample_sequences(int variant, long n_max);

// ---------------------------------------------------------------------------
// Generating polynomials and structural checks.
// ---------------------------------------------------------------------------

// A(z) = sum a_k z^k (degree n), B(z) = sum b_k z^k (degree n - [i==3]);
// A(1) = 0 and 2 B(1) = q_n.
std::pair<Poly, Poly> polynomials_AB(const FamilyParams& fp, long n);

// Vanishing pattern of the moments: the first kind must vanish for
// k = 0..n-2+[i==1], the second kind for k = 0..n-2.
struct OrthogonalityReport {
  long n = 0;
  long required_first = 0;   // number of required vanishing first-kind moments
  long required_second = 0;  // likewise for the second kind
  std::vector<std::pair<long, bool>> first_kind;   // (k, vanishes), k = 0..n-1
  std::vector<std::pair<long, bool>> second_kind;  // (k, vanishes), k = 0..n-1
  bool pass = false;
};
OrthogonalityReport orthogonality_check(const FamilyParams& fp, long n);

// n^w q_n integer, n^w l_n^3 p_n integer, n^w b_k integer, n^w l_n a_k integer.
struct IntegralityReport {
  bool q_ok = false, p_ok = false, a_ok = false, b_ok = false;
  bool all() const { return q_ok && p_ok && a_ok && b_ok; }
};
IntegralityReport integrality_check(const FamilyParams& fp, long n);

// ---------------------------------------------------------------------------
// Named family selector shared by the CLI and the reproduction suites.
// ---------------------------------------------------------------------------
struct FamilyId {
  enum class Kind { kApery, kParametric, kCounterexample };
  Kind kind = Kind::kApery;
  FamilyParams params{};  // kind == kParametric
  int variant = 0;        // kind == kCounterexample
  std::string label() const;
};

// The 12 parametric instances exercised everywhere (each j-column of the
// figure parameter set crossed with i = 1..4), 48 in total.
std::vector<FamilyParams> smoke_grid();

// The 13 sequences of the main comparison figure (baseline + 12 parametric)
// and the 3 sequences of the counterexample figure.
std::vector<FamilyId> figure1_families();
std::vector<FamilyId> figure2_families();

}  // namespace zeta3
