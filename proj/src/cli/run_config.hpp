// Parsed and validated invocation of the reproduction harness.
#pragma once

#include "zeta3/families.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta3::cli {

// Configuration problems surface as exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Command { kTable, kFigure, kCf, kRecurrence, kCertify };
enum class Format { kText, kCsv, kJson };

struct RunConfig {
  Command command = Command::kTable;
  std::optional<FamilyId> family;
  std::vector<long> n_values;      // table: the rows; certify: the maximum is used
  int digits = 0;                  // significant digits for certified values (0 = command default)
  Format format = Format::kText;
  std::string output_path;         // empty = standard output
  bool canonical = false;          // cf: emit the integer-term accelerated fraction
  long terms = 10;                 // cf: number of partial quotients
  std::string preset = "figure1";  // figure: which parameter list
};

const char* command_name(Command c);

Format parse_format(const std::string& text);

// "2..4,50" -> {2, 3, 4, 50}; values must stay within [1, 500].
std::vector<long> parse_n_spec(const std::string& text);

// Family selector: "apery", "counterexample1", "counterexample2", or "i,j"
// with exactly the parameter flags the j-column requires.
FamilyId resolve_family(const std::string& family, std::optional<long> rho,
                        std::optional<long> theta, std::optional<long> ups,
                        std::optional<long> chi, std::optional<long> psi);

}  // namespace zeta3::cli
