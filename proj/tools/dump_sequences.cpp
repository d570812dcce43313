// Developer utility: print the exact internals of one family instance —
// perturbation factor, partial-fraction coefficients, generating polynomials,
// approximant sequences, and consecutive cross determinants.
#include "run_config.hpp"

#include "zeta3/recurrence.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>

int main(int argc, char** argv) {
  using namespace zeta3;
  using namespace zeta3::cli;

  CLI::App app{"Dump the exact internals of one approximant family instance"};
  std::string family;
  std::optional<long> rho, theta, ups, chi, psi;
  long n_max = 4;
  app.add_option("--family", family, "apery, counterexample1, counterexample2, or i,j")
      ->required();
  app.add_option("--rho", rho, "j=1 shift");
  app.add_option("--theta", theta, "j=2 slope");
  app.add_option("--ups", ups, "j=3 leading");
  app.add_option("--chi", chi, "j=3 slope");
  app.add_option("--psi", psi, "j=3 offset");
  app.add_option("--n", n_max, "Dump n = 1..N (default 4)");
  CLI11_PARSE(app, argc, argv);

  try {
    const FamilyId id = resolve_family(family, rho, theta, ups, chi, psi);
    std::cout << id.label() << "\n";

    Rational prev_p, prev_q;
    bool have_prev = false;
    for (long n = 1; n <= n_max; ++n) {
      std::cout << "\nn = " << n << "\n";
      Approximant appr;
      switch (id.kind) {
        case FamilyId::Kind::kApery:
          appr = apery_sequence(n);
          break;
        case FamilyId::Kind::kParametric: {
          appr = sequence(id.params, n);
          const RatFun tf = theta_fun(id.params, n).canonical();
          std::cout << "  theta(t) = [" << tf.num().to_string() << "] / ["
                    << tf.den().to_string() << "]\n";
          const PartialFraction pf = coefficients(id.params, n);
          std::cout << "  b =";
          for (const Rational& b : pf.b) std::cout << ' ' << to_fraction_string(b);
          std::cout << "\n  a =";
          for (const Rational& a : pf.a) std::cout << ' ' << to_fraction_string(a);
          const auto [A, B] = polynomials_AB(id.params, n);
          std::cout << "\n  A(z) = " << A.to_string("z") << "\n  B(z) = " << B.to_string("z")
                    << "\n";
          break;
        }
        case FamilyId::Kind::kCounterexample: {
          const CounterexampleApproximant ce = counterexample_sequence(id.variant, n);
          appr = ce.approximant;
          std::cout << "  zeta2 coefficient = " << to_fraction_string(ce.zeta2_coefficient)
                    << "\n";
          break;
        }
      }
      std::cout << "  q = " << to_fraction_string(appr.q) << "\n  p = "
                << to_fraction_string(appr.p) << "\n  p/q = "
                << to_fraction_string(appr.p / appr.q) << "\n";
      if (have_prev) {
        std::cout << "  wronskian(n-1,n) = "
                  << to_fraction_string(wronskian(prev_q, prev_p, appr.q, appr.p)) << "\n";
      }
      prev_p = appr.p;
      prev_q = appr.q;
      have_prev = true;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
