// Second-order recurrences with polynomial coefficients:
//   alpha(n) y_{n+2} + beta(n) y_{n+1} + gamma(n) y_n = 0.
// Both p_n and q_n of every family satisfy such a relation; for the
// theta-perturbed family with a simple zero shift (the (1,2) case) the
// coefficients are known in closed form, for the others they are discovered
// from exact sequence data by a nullspace search and then re-verified on
// held-out terms.
#pragma once

#include "zeta3/families.hpp"

#include <optional>

namespace zeta3 {

struct Recurrence2 {
  Poly alpha, beta, gamma;  // polynomials in n
  long valid_from = 1;      // smallest n at which the relation holds
};

// Cross determinant q_n p_{n+1} - q_{n+1} p_n of consecutive approximants.
Rational wronskian(const Rational& q_n, const Rational& p_n,
                   const Rational& q_n1, const Rational& p_n1);

// For the (1,2) family: the wronskian equals 2 N(n) / (n^3 (n+1)^3) with
//   N(n) = (24n^3+30n^2+16n+3) theta^2 + (9n^2+5n+1) theta - (12n^3+21n^2+11n+2).
Poly wronskian_numerator_12(long theta);
Rational wronskian_closed_form_12(long theta, long n);

// Closed-form recurrence coefficients for the (1,2) family:
//   alpha(n) = (n+2)^3 N(n),  gamma(n) = n^3 N(n+1),
// and beta(n) the matching degree-6 polynomial.
Recurrence2 recurrence_closed_form_12(long theta);

// The classical baseline relation (valid from n = 0):
//   (n+2)^3 y_{n+2} - (2n+3)(17n^2+51n+39) y_{n+1} + (n+1)^3 y_n = 0.
Recurrence2 apery_recurrence();

// Monic characteristic coefficients (t^2 + c1 t + c0) from the leading
// coefficients of the relation.
std::pair<Rational, Rational> characteristic_coefficients(const Recurrence2& rec);

struct VerifyResult {
  bool ok = false;
  long first_failure = -1;  // smallest n with a nonzero residual, -1 if none
  long n_from = 0, n_to = 0;
};

// Check the relation at every n in [n_from, n_to] (requires data up to
// n_to + 2).
VerifyResult verify_recurrence(const Recurrence2& rec, const Sequence& y, long n_from, long n_to);

// Given alpha and gamma, interpolate the middle coefficient as a polynomial
// of the stated degree from the windows n = first_n .. first_n+degree, then
// confirm it on the two following held-out windows (throws std::runtime_error
// if they fail).  Returns beta, i.e. the negated interpolant of
//   [alpha(n) q_{n+2} + gamma(n) q_n] / q_{n+1}.
Poly fit_beta(const Sequence& q, const Poly& alpha, const Poly& gamma,
              int degree = 6, long first_n = 1);

// Search for an exact relation annihilating one or two sequences at once
// (windows of both are stacked into one nullspace problem).  Degrees are
// tried ascending from 1 unless a hint is given; every candidate must
// annihilate all available windows of both sequences, so a returned relation
// is exact on the supplied data.  Returns std::nullopt when no relation of
// degree <= max_degree exists on the data.
std::optional<Recurrence2> discover_recurrence(const Sequence& primary,
                                               const Sequence* secondary = nullptr,
                                               int max_degree = 14,
                                               std::optional<int> degree_hint = std::nullopt);

}  // namespace zeta3
