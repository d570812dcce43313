// Exact arithmetic foundations: big rationals, combinatorial helpers,
// polynomials, rational functions, and partial fractions.
#include "zeta3/exact.hpp"
#include "zeta3/poly.hpp"
#include "zeta3/ratfun.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

namespace zeta3 {
namespace {

Rational frac(long num, long den) { return Rational(num) / Rational(den); }

// t (t+3) / ((t+1)^2 (t+2)^2), the running worked example: a proper rational
// function with two double poles and known decomposition a = [5, -5],
// b = [2, 2].
RatFun worked_example() {
  const Poly t = Poly::linear(1, Rational(0));
  const Poly num = t * Poly::linear(1, Rational(3));
  const Poly den = Poly::linear(1, Rational(1)).pow(2) * Poly::linear(1, Rational(2)).pow(2);
  return RatFun(num, den);
}

FactoredRatFun worked_example_factored() {
  FactoredRatFun f;
  f.push(Poly::linear(1, Rational(0)), 1);
  f.push(Poly::linear(1, Rational(3)), 1);
  f.push(Poly::linear(1, Rational(1)), -2);
  f.push(Poly::linear(1, Rational(2)), -2);
  return f;
}

}  // namespace

TEST_SUITE("exact_core") {

TEST_CASE("binomial coefficients") {
  CHECK(binom(0, 0) == 1);
  CHECK(binom(4, 2) == 6);
  CHECK(binom(10, 5) == 252);
  CHECK(binom(84, 42) == BigInt("1678910486211891090247320"));
  SUBCASE("out-of-range arguments give zero, matching the sum conventions") {
    CHECK(binom(3, 5) == 0);
    CHECK(binom(3, -1) == 0);
    CHECK(binom(-1, 0) == 0);
  }
}

TEST_CASE("harmonic numbers of the first three orders") {
  CHECK(harmonic(0, 1) == 0);
  CHECK(harmonic(3, 1) == frac(11, 6));
  CHECK(harmonic(3, 2) == frac(49, 36));
  CHECK(harmonic(2, 3) == frac(9, 8));
  CHECK(harmonic(6, 1) == frac(49, 20));
}

TEST_CASE("lcm_upto") {
  CHECK(lcm_upto(1) == 1);
  CHECK(lcm_upto(2) == 2);
  CHECK(lcm_upto(10) == 2520);
  CHECK(lcm_upto(20) == 232792560);
}

TEST_CASE("integer and rational powers") {
  CHECK(int_pow(BigInt(3), 0) == 1);
  CHECK(int_pow(BigInt(-2), 5) == -32);
  CHECK(rat_pow(frac(2, 3), 3) == frac(8, 27));
  SUBCASE("negative exponents invert, including negative bases") {
    CHECK(rat_pow(frac(2, 3), -2) == frac(9, 4));
    CHECK(rat_pow(Rational(-2), -3) == frac(-1, 8));
    CHECK(rat_pow(frac(-3, 5), -1) == frac(-5, 3));
  }
  CHECK(rat_pow(Rational(7), 0) == 1);
  CHECK_THROWS_AS(rat_pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("rat_abs and fraction rendering") {
  CHECK(rat_abs(frac(-3, 4)) == frac(3, 4));
  CHECK(rat_abs(Rational(5)) == 5);
  CHECK(to_fraction_string(frac(351, 292)) == "351/292");
  CHECK(to_fraction_string(Rational(-22)) == "-22");
  CHECK(to_fraction_string(frac(-19, 16)) == "-19/16");
}

TEST_CASE("polynomial basics") {
  const Poly p(std::vector<Rational>{Rational(8), Rational(12), Rational(6), Rational(1)});
  CHECK(p.degree() == 3);
  CHECK(p.eval(Rational(-2)) == 0);
  CHECK(p.eval(Rational(1)) == 27);
  CHECK(p.to_string("n") == "n^3 + 6*n^2 + 12*n + 8");

  SUBCASE("trailing zero coefficients are trimmed") {
    const Poly q(std::vector<Rational>{Rational(1), Rational(0), Rational(0)});
    CHECK(q.degree() == 0);
    CHECK(Poly{}.degree() == -1);
    CHECK(Poly{}.is_zero());
  }
  SUBCASE("derivative") {
    const Poly d = p.derivative();
    CHECK(d.to_string("n") == "3*n^2 + 12*n + 12");
    CHECK(Poly(Rational(5)).derivative().is_zero());
  }
  SUBCASE("pow expands binomials") {
    CHECK(Poly::linear(1, Rational(2)).pow(3).to_string("t") == "t^3 + 6*t^2 + 12*t + 8");
    CHECK(Poly::linear(1, Rational(1)).pow(0).to_string("t") == "1");
  }
  SUBCASE("negative coefficients render with minus signs") {
    const Poly q(std::vector<Rational>{Rational(1), Rational(-34), Rational(1)});
    CHECK(q.to_string("t") == "t^2 - 34*t + 1");
  }
}

TEST_CASE("pochhammer polynomials") {
  // (t+1)_3 = (t+1)(t+2)(t+3).
  const Poly rising = pochhammer_poly(Rational(1), 3);
  CHECK(rising.degree() == 3);
  CHECK(rising.eval(Rational(0)) == 6);
  CHECK(rising.eval(Rational(-2)) == 0);
  // (-t)_2 = (-t)(-t+1) = t^2 - t, vanishing at t = 0, 1.
  const Poly falling = pochhammer_neg_poly(2);
  CHECK(falling.eval(Rational(0)) == 0);
  CHECK(falling.eval(Rational(1)) == 0);
  CHECK(falling.eval(Rational(2)) == 2);
  CHECK(pochhammer_poly(Rational(2), 0).to_string("t") == "1");
}

TEST_CASE("polynomial division and gcd") {
  const Poly a = Poly::linear(1, Rational(1)) * Poly::linear(1, Rational(2));
  SUBCASE("exact quotient") {
    const auto [quot, rem] = poly_divmod(a, Poly::linear(1, Rational(1)));
    CHECK(rem.is_zero());
    CHECK(quot.to_string("t") == "t + 2");
  }
  SUBCASE("remainder") {
    const auto [quot, rem] = poly_divmod(a, Poly::linear(1, Rational(0)));
    CHECK(quot.to_string("t") == "t + 3");
    CHECK(rem.eval(Rational(0)) == 2);
  }
  SUBCASE("division by zero polynomial throws") {
    CHECK_THROWS_AS(poly_divmod(a, Poly{}), std::domain_error);
  }
  SUBCASE("gcd of products with a shared factor") {
    const Poly b = Poly::linear(1, Rational(1)) * Poly::linear(1, Rational(3));
    CHECK(poly_gcd(a, b).to_string("t") == "t + 1");
    CHECK(poly_gcd(a, Poly::linear(1, Rational(5))).to_string("t") == "1");
  }
}

TEST_CASE("rational function construction and evaluation") {
  CHECK_THROWS_AS(RatFun(Poly(Rational(1)), Poly{}), std::domain_error);
  const RatFun f = worked_example();
  CHECK(f.eval(Rational(1)) == frac(4, 36));
  CHECK(f.eval(Rational(-3)) == 0);
  CHECK_THROWS_AS(f.eval(Rational(-1)), std::domain_error);

  SUBCASE("canonical form removes common factors and is representative-free") {
    const Poly shared = Poly::linear(1, Rational(7));
    const RatFun g(f.num() * shared, f.den() * shared);
    CHECK(g.canonical().identical_to(f));
    CHECK(g.identical_to(f));
  }
  SUBCASE("derivative satisfies the quotient rule on a sample point") {
    // f = t/(t+1): f' = 1/(t+1)^2.
    const RatFun g(Poly::linear(1, Rational(0)), Poly::linear(1, Rational(1)));
    CHECK(g.derivative().eval(Rational(1)) == frac(1, 4));
  }
  SUBCASE("arithmetic") {
    const RatFun one(Poly(Rational(1)), Poly(Rational(1)));
    const RatFun sum = f + one - f;
    CHECK(sum.identical_to(one));
    CHECK((f * Rational(2)).eval(Rational(1)) == frac(2, 9));
    CHECK((-f).eval(Rational(1)) == frac(-1, 9));
  }
}

TEST_CASE("logarithmic derivative") {
  // f = (t+1)^2 (t+2): f'/f = 2/(t+1) + 1/(t+2) = (3t+5)/((t+1)(t+2)).
  const Poly num = Poly::linear(1, Rational(1)).pow(2) * Poly::linear(1, Rational(2));
  const RatFun f(num, Poly(Rational(1)));
  const RatFun expect(Poly::linear(3, Rational(5)),
                      Poly::linear(1, Rational(1)) * Poly::linear(1, Rational(2)));
  CHECK(log_derivative(f).identical_to(expect));
  CHECK_THROWS_AS(log_derivative(RatFun(Poly{}, Poly(Rational(1)))), std::domain_error);
}

TEST_CASE("factored rational functions") {
  FactoredRatFun f = worked_example_factored();
  SUBCASE("expansion matches the hand-built representative") {
    CHECK(f.expand().identical_to(worked_example()));
  }
  SUBCASE("pushing merges identical bases and drops zero exponents") {
    f.push(Poly::linear(1, Rational(1)), 2);  // cancels the (t+1)^-2 factor
    CHECK(f.factors().size() == 3);
    const RatFun expect(Poly::linear(1, Rational(0)) * Poly::linear(1, Rational(3)),
                        Poly::linear(1, Rational(2)).pow(2));
    CHECK(f.expand().identical_to(expect));
  }
  SUBCASE("evaluation short-circuits zeros and rejects poles") {
    CHECK(f.eval(Rational(0)) == 0);
    CHECK(f.eval(Rational(1)) == frac(1, 9));
    CHECK_THROWS_AS(f.eval(Rational(-2)), std::domain_error);
  }
  SUBCASE("scale multiplies through") {
    f.mul_scale(frac(3, 2));
    CHECK(f.eval(Rational(1)) == frac(1, 6));
  }
  SUBCASE("derivative agrees with the expanded quotient rule") {
    CHECK(f.derivative().expand().identical_to(worked_example().derivative()));
  }
}

TEST_CASE("partial fractions of the worked example") {
  const std::vector<PoleSpec> poles{{Rational(-1), 2}, {Rational(-2), 2}};
  const auto terms = partial_fraction(worked_example(), poles);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].a == 5);
  CHECK(terms[0].b == 2);
  CHECK(terms[1].a == -5);
  CHECK(terms[1].b == 2);
  SUBCASE("round trip") {
    CHECK(from_partial_fractions(terms).identical_to(worked_example()));
  }
}

TEST_CASE("partial fractions with a simple pole") {
  // 1/((t+1)(t+2)) = 1/(t+1) - 1/(t+2).
  const RatFun f(Poly(Rational(1)),
                 Poly::linear(1, Rational(1)) * Poly::linear(1, Rational(2)));
  const std::vector<PoleSpec> poles{{Rational(-1), 1}, {Rational(-2), 1}};
  const auto terms = partial_fraction(f, poles);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].a == 1);
  CHECK(terms[0].b == 0);
  CHECK(terms[1].a == -1);
  CHECK(from_partial_fractions(terms).identical_to(f));
}

TEST_CASE("partial fraction error paths") {
  const std::vector<PoleSpec> poles{{Rational(-1), 2}, {Rational(-2), 2}};
  SUBCASE("improper functions are rejected") {
    const RatFun improper(Poly::linear(1, Rational(0)).pow(4),
                          Poly::linear(1, Rational(1)).pow(2) * Poly::linear(1, Rational(2)).pow(2));
    CHECK_THROWS_AS(partial_fraction(improper, poles), std::invalid_argument);
  }
  SUBCASE("a declared pole must divide the denominator") {
    const RatFun f(Poly(Rational(1)), Poly::linear(1, Rational(1)).pow(2));
    CHECK_THROWS_AS(partial_fraction(f, poles), std::invalid_argument);
  }
  SUBCASE("undeclared factors are detected") {
    const RatFun f(Poly(Rational(1)),
                   Poly::linear(1, Rational(1)).pow(2) * Poly::linear(1, Rational(2)).pow(2) *
                       Poly::linear(1, Rational(3)));
    CHECK_THROWS_AS(partial_fraction(f, poles), std::invalid_argument);
  }
  SUBCASE("orders above two are rejected") {
    const RatFun f(Poly(Rational(1)), Poly::linear(1, Rational(1)).pow(3));
    CHECK_THROWS_AS(partial_fraction(f, {{Rational(-1), 3}}), std::invalid_argument);
  }
}

TEST_CASE("factored partial fractions agree with the expanded path") {
  const std::vector<PoleSpec> poles{{Rational(-1), 2}, {Rational(-2), 2}};
  const auto expanded = partial_fraction(worked_example(), poles);
  const auto factored = partial_fraction(worked_example_factored(), poles);
  REQUIRE(expanded.size() == factored.size());
  for (std::size_t k = 0; k < expanded.size(); ++k) {
    CHECK(expanded[k].location == factored[k].location);
    CHECK(expanded[k].order == factored[k].order);
    CHECK(expanded[k].a == factored[k].a);
    CHECK(expanded[k].b == factored[k].b);
  }

  SUBCASE("mixed orders and non-monic factors") {
    // 1 / ((t+1)^2 (2t+6)): simple pole at -3 with leading coefficient 2.
    FactoredRatFun f;
    f.push(Poly::linear(1, Rational(1)), -2);
    f.push(Poly::linear(2, Rational(6)), -1);
    const std::vector<PoleSpec> mixed{{Rational(-1), 2}, {Rational(-3), 1}};
    const auto a = partial_fraction(f, mixed);
    const auto b = partial_fraction(f.expand(), mixed);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].a == b[k].a);
      CHECK(a[k].b == b[k].b);
    }
    CHECK(from_partial_fractions(a).identical_to(f.expand()));
  }
  SUBCASE("error paths") {
    FactoredRatFun f = worked_example_factored();
    // No factor vanishing at the declared location.
    CHECK_THROWS_AS(partial_fraction(f, {{Rational(-5), 2}}), std::invalid_argument);
    // Declared order disagrees with the factored exponent.
    CHECK_THROWS_AS(partial_fraction(f, {{Rational(-1), 1}}), std::invalid_argument);
  }
}

TEST_CASE("factored partial fractions on random pole configurations") {
  // Randomized cross-validation over pole sets with mixed orders; the two
  // implementations must agree term for term.
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> order_dist(1, 2);
  std::uniform_int_distribution<int> coeff_dist(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    FactoredRatFun f(Rational(coeff_dist(rng)));
    std::vector<PoleSpec> poles;
    long denominator_degree = 0;
    for (long location = 1; location <= 4; ++location) {
      const int order = order_dist(rng);
      f.push(Poly::linear(1, Rational(location)), -order);
      poles.push_back({Rational(-location), order});
      denominator_degree += order;
    }
    // A numerator of lower degree keeps the function proper.
    for (long zero = 0; zero < denominator_degree - 1; ++zero) {
      f.push(Poly::linear(1, Rational(-coeff_dist(rng))), 1);
    }
    const auto a = partial_fraction(f, poles);
    const auto b = partial_fraction(f.expand(), poles);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].a == b[k].a);
      CHECK(a[k].b == b[k].b);
    }
  }
}

}  // TEST_SUITE

}  // namespace zeta3
