// Irregular continued fractions  a0 + b1/(a1 + b2/(a2 + ...))  recovered from
// convergent sequences, equivalence transformations between them, and the two
// canonical integer-term fractions for zeta(3): the classical one derived
// from the baseline recurrence and the one derived from the closed-form
// recurrence of the (1,2) family at theta = 2.
#pragma once

#include "zeta3/exact.hpp"
#include "zeta3/poly.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zeta3 {

struct IrregularCF {
  Rational a0;              // leading term, may be 0
  std::vector<Rational> a;  // a[k-1] holds a_k, k = 1..
  std::vector<Rational> b;  // b[k-1] holds b_k, k = 1..

  std::size_t terms() const { return a.size(); }
};

// Recover the fraction whose k-th convergent is exactly p[k]/q[k] (as given,
// not just as a ratio).  Conventions: q[0] must be 1 so a0 = p[0];
// the implicit seed convergents are p_{-1}/q_{-1} = 1/0.  Throws
// std::invalid_argument when a cross determinant p_{k-1} q_{k-2} -
// p_{k-2} q_{k-1} vanishes (the index is named in the message).
IrregularCF from_convergents(const std::vector<Rational>& p, const std::vector<Rational>& q);

// Equivalence transformation with multipliers c[0..K], c[0] == 1 required:
//   a'_k = c_k a_k,  b'_k = c_k c_{k-1} b_k.
// Convergents are preserved as exact values.
IrregularCF equivalence_transform(const IrregularCF& cf, const std::vector<Rational>& c);

// k-th convergent (numerator, denominator) by the three-term recurrence;
// k = 0 yields (a0, 1).
std::pair<Rational, Rational> convergent(const IrregularCF& cf, std::size_t k);

// ---------------------------------------------------------------------------
// The two canonical integer fractions.
// ---------------------------------------------------------------------------

// Classical fraction for zeta(3): no a0 term, heads 6|/|5, then
// b_k = -(k-1)^6 and a_k = 34(k-1)^3 + 51(k-1)^2 + 27(k-1) + 5 for k >= 2.
IrregularCF classical_fraction(std::size_t terms);

// Fraction with integer terms derived from the (1,2) theta=2 family:
// heads 9|/|8, -184|/|359, -30672|/|Q_3, then b_n = P_n, a_n = Q_n with
//   Q_n = 6 (476n^6 - 2907n^5 + 7077n^4 - 8715n^3 + 5715n^2 - 1926n + 264),
//   P_n = -9 (n-2)^3 (n-1)^3 (28n^3 - 213n^2 + 543n - 464)(28n^3 - 45n^2 + 27n - 6).
IrregularCF accelerated_fraction(std::size_t terms);

// The general terms above: Q_n needs n >= 3, the pair (P_n, Q_n) needs n >= 4.
BigInt accelerated_Q(long n);
std::pair<BigInt, BigInt> accelerated_terms(long n);

// Render as  a0 + b1|/|a1 + b2|/|a2 - ...  with signs folded into the
// separators.
std::string to_bar_notation(const IrregularCF& cf, std::size_t max_terms);

}  // namespace zeta3
