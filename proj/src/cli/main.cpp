// zeta3 — reproduction harness for the rational zeta(3) approximant families:
// exact tables, figure grids, continued fractions, recurrences, certificates.
#include "commands.hpp"
#include "run_config.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct RawOptions {
  std::string family;
  std::optional<long> rho, theta, ups, chi, psi;
  std::string n_spec;
  int digits = 0;
  std::string format = "text";
  std::string output;
  bool canonical = false;
  long terms = 10;
  std::string preset = "figure1";
};

void add_family_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--family", raw.family,
                  "Family selector: apery, counterexample1, counterexample2, or i,j")
      ->required();
  cmd->add_option("--rho", raw.rho, "Shift parameter for j=1 (integer >= 2)");
  cmd->add_option("--theta", raw.theta, "Slope parameter for j=2 (integer, |theta| >= 2)");
  cmd->add_option("--ups", raw.ups, "Leading parameter for j=3 (integer >= 1)");
  cmd->add_option("--chi", raw.chi, "Slope parameter for j=3 (integer >= ups)");
  cmd->add_option("--psi", raw.psi, "Offset parameter for j=3 (integer >= 0)");
}

void add_output_options(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--format", raw.format, "Output format: text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--output", raw.output, "Write to this file instead of standard output");
  cmd->add_option("--digits", raw.digits,
                  "Significant digits for certified values (default per command)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace zeta3::cli;

  CLI::App app{
      "Exact rational approximants to zeta(3): reproduce the comparison tables, the "
      "convergence-rate figure grids, the continued fraction expansions, the three-term "
      "recurrences, and the integrality/decay certificates."};
  app.require_subcommand(1);

  RawOptions raw;

  CLI::App* table = app.add_subcommand("table", "Exact fractions p/q and certified errors");
  add_family_options(table, raw);
  table->add_option("--n", raw.n_spec, "Rows, e.g. 2..4,50")->required();
  add_output_options(table, raw);

  CLI::App* figure = app.add_subcommand("figure", "Grids of f = |1/ln|zeta(3) - p/q||");
  figure->add_option("--preset", raw.preset, "figure1 (13 families) or figure2 (baseline vs counterexamples)");
  add_output_options(figure, raw);

  CLI::App* cf = app.add_subcommand("cf", "Continued fraction expansions");
  add_family_options(cf, raw);
  cf->add_option("--terms", raw.terms, "Number of partial quotients (default 10)");
  cf->add_flag("--canonical", raw.canonical, "Emit the integer-term accelerated fraction (family 1,2)");
  add_output_options(cf, raw);

  CLI::App* recurrence =
      app.add_subcommand("recurrence", "Three-term recurrence coefficients and verification");
  add_family_options(recurrence, raw);
  add_output_options(recurrence, raw);

  CLI::App* certify =
      app.add_subcommand("certify", "Integrality scalings and the decaying n-th root certificate");
  add_family_options(certify, raw);
  certify->add_option("--n", raw.n_spec, "Certificate depth, e.g. 50")->required();
  add_output_options(certify, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors are contractually exit code 2
  }

  try {
    RunConfig config;
    if (table->parsed()) config.command = Command::kTable;
    if (figure->parsed()) config.command = Command::kFigure;
    if (cf->parsed()) config.command = Command::kCf;
    if (recurrence->parsed()) config.command = Command::kRecurrence;
    if (certify->parsed()) config.command = Command::kCertify;

    if (!raw.family.empty()) {
      config.family = resolve_family(raw.family, raw.rho, raw.theta, raw.ups, raw.chi, raw.psi);
    }
    if (!raw.n_spec.empty()) config.n_values = parse_n_spec(raw.n_spec);
    config.digits = raw.digits;
    config.format = parse_format(raw.format);
    config.output_path = raw.output;
    config.canonical = raw.canonical;
    config.terms = raw.terms;
    config.preset = raw.preset;

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!config.output_path.empty()) {
      file.open(config.output_path);
      if (!file) throw UsageError("cannot open output file '" + config.output_path + "'");
      os = &file;
    }
    run_command(config, *os);
    os->flush();
    if (!*os) throw std::runtime_error("write failed");
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
