// Irregular continued fractions: recovery from convergents, equivalence
// transformations, and the two canonical integer-term fractions.
#include "zeta3/contfrac.hpp"

#include "zeta3/analysis.hpp"
#include "zeta3/families.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta3 {
namespace {

Rational frac(long num, long den) { return Rational(num) / Rational(den); }

// Reduced equality of an exact convergent pair against an approximant.
void check_convergent_matches(const IrregularCF& cf, std::size_t k, const Rational& p,
                              const Rational& q) {
  const auto [cp, cq] = convergent(cf, k);
  CHECK(cp / cq == p / q);
}

}  // namespace

TEST_SUITE("contfrac") {

TEST_CASE("recovery from a toy convergent sequence") {
  // p = (0, 1), q = (1, 2): a0 = 0, then b1/a1 = 1/2.
  const IrregularCF cf = from_convergents({Rational(0), Rational(1)}, {Rational(1), Rational(2)});
  CHECK(cf.a0 == 0);
  REQUIRE(cf.terms() == 1);
  CHECK(cf.b[0] == 1);
  CHECK(cf.a[0] == 2);
  SUBCASE("convergents reproduce the inputs exactly") {
    CHECK(convergent(cf, 0) == std::pair<Rational, Rational>{Rational(0), Rational(1)});
    CHECK(convergent(cf, 1) == std::pair<Rational, Rational>{Rational(1), Rational(2)});
  }
  SUBCASE("the leading denominator must be one") {
    CHECK_THROWS_AS(from_convergents({Rational(0), Rational(1)}, {Rational(2), Rational(2)}),
                    std::invalid_argument);
  }
  SUBCASE("vanishing cross determinants are rejected with the index named") {
    // p_1 q_0 - p_0 q_1 = 2 - 2 = 0 blocks the k = 2 term.
    try {
      from_convergents({Rational(1), Rational(2), Rational(3)},
                       {Rational(1), Rational(2), Rational(1)});
      FAIL("expected std::invalid_argument");
    } catch (const std::invalid_argument& error) {
      CHECK(std::string(error.what()).find("index 2") != std::string::npos);
    }
  }
}

TEST_CASE("raw fraction of the (1,2) theta=2 family") {
  // Heads from the Jones construction straight off the approximants:
  // a1 = 8, b1 = 9, a2 = 359/24, b2 = -23/3.
  const SequencePair s = family_sequences(FamilyParams::with_theta(1, 2), 12);
  std::vector<Rational> p{0}, q{1};
  for (long n = 1; n <= 12; ++n) {
    p.push_back(s.p.at(n));
    q.push_back(s.q.at(n));
  }
  const IrregularCF cf = from_convergents(p, q);
  CHECK(cf.a0 == 0);
  CHECK(cf.a[0] == 8);
  CHECK(cf.b[0] == 9);
  CHECK(cf.a[1] == frac(359, 24));
  CHECK(cf.b[1] == frac(-23, 3));
  SUBCASE("every convergent equals its generating approximant exactly") {
    for (std::size_t k = 0; k < p.size(); ++k) {
      CHECK(convergent(cf, k) == std::pair<Rational, Rational>{p[k], q[k]});
    }
  }
}

TEST_CASE("accelerated integer fraction") {
  const IrregularCF cf = accelerated_fraction(30);
  CHECK(cf.a0 == 0);
  CHECK(cf.b[0] == 9);
  CHECK(cf.a[0] == 8);
  CHECK(cf.b[1] == -184);
  CHECK(cf.a[1] == 359);
  CHECK(cf.b[2] == -30672);
  CHECK(cf.a[2] == 146736);
  SUBCASE("every term is an integer") {
    for (std::size_t k = 0; k < cf.terms(); ++k) {
      CHECK(is_integer(cf.a[k]));
      CHECK(is_integer(cf.b[k]));
    }
  }
  SUBCASE("general terms match the closed forms") {
    CHECK(accelerated_Q(3) == 146736);
    const auto [P4, Q4] = accelerated_terms(4);
    CHECK(P4 == -209967552);
    for (long n = 4; n <= 30; ++n) {
      const auto [P, Q] = accelerated_terms(n);
      CHECK(cf.a[static_cast<std::size_t>(n - 1)] == Q);
      CHECK(cf.b[static_cast<std::size_t>(n - 1)] == P);
    }
  }
  SUBCASE("convergents equal the reduced approximants") {
    const SequencePair s = family_sequences(FamilyParams::with_theta(1, 2), 30);
    for (long n = 1; n <= 30; ++n) {
      check_convergent_matches(cf, static_cast<std::size_t>(n), s.p.at(n), s.q.at(n));
    }
  }
  SUBCASE("bar notation folds the signs") {
    CHECK(to_bar_notation(cf, 4) ==
          "9|/|8 - 184|/|359 - 30672|/|146736 - 209967552|/|1865280 ...");
  }
}

TEST_CASE("classical fraction for the baseline") {
  const IrregularCF cf = classical_fraction(31);
  CHECK(cf.a0 == 0);
  CHECK(cf.b[0] == 6);
  CHECK(cf.a[0] == 5);
  SUBCASE("general terms") {
    for (long k = 2; k <= 31; ++k) {
      const Rational m(k - 1);
      CHECK(cf.b[static_cast<std::size_t>(k - 1)] == -rat_pow(m, 6));
      CHECK(cf.a[static_cast<std::size_t>(k - 1)] ==
            34 * rat_pow(m, 3) + 51 * rat_pow(m, 2) + 27 * m + 5);
    }
  }
  SUBCASE("convergents equal the reduced baseline approximants") {
    const SequencePair s = apery_sequences(31);
    for (long n = 1; n <= 31; ++n) {
      check_convergent_matches(cf, static_cast<std::size_t>(n), s.p.at(n), s.q.at(n));
    }
  }
}

TEST_CASE("equivalence transformations preserve convergents") {
  const IrregularCF cf = accelerated_fraction(20);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> num_dist(-9, 9);
  std::uniform_int_distribution<long> den_dist(1, 7);
  std::vector<Rational> c{Rational(1)};
  for (std::size_t k = 1; k <= cf.terms(); ++k) {
    Rational ck;
    do {
      ck = frac(num_dist(rng), den_dist(rng));
    } while (ck == 0);
    c.push_back(ck);
  }
  const IrregularCF scaled = equivalence_transform(cf, c);
  for (std::size_t k = 0; k <= cf.terms(); ++k) {
    const auto [p, q] = convergent(cf, k);
    const auto [sp, sq] = convergent(scaled, k);
    CHECK(sp / sq == p / q);
  }
  SUBCASE("the leading multiplier must be one") {
    std::vector<Rational> bad = c;
    bad[0] = 2;
    CHECK_THROWS_AS(equivalence_transform(cf, bad), std::invalid_argument);
  }
  SUBCASE("zero multipliers are rejected") {
    std::vector<Rational> bad = c;
    bad[3] = 0;
    CHECK_THROWS_AS(equivalence_transform(cf, bad), std::invalid_argument);
  }
}

TEST_CASE("the two canonical fractions converge to the same constant") {
  // |zeta(3) - p_k/q_k| shrinks monotonically along both fractions.
  const FixedPrecisionValue z3 = zeta3_reference(60);
  for (const IrregularCF& cf : {classical_fraction(12), accelerated_fraction(12)}) {
    FixedPrecisionValue previous;
    for (std::size_t k = 2; k <= 12; k += 2) {
      const auto [p, q] = convergent(cf, k);
      const FixedPrecisionValue gap =
          fp_sub(z3, FixedPrecisionValue::from_rational(p / q, 60)).abs();
      if (k > 2) CHECK(fp_definitely_less(gap, previous));
      previous = gap;
    }
  }
}

}  // TEST_SUITE

}  // namespace zeta3
