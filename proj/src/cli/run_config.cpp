#include "run_config.hpp"

#include <algorithm>
#include <charconv>

namespace zeta3::cli {

namespace {

long parse_long(const std::string& text) {
  long value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw UsageError("not an integer: '" + text + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kTable: return "table";
    case Command::kFigure: return "figure";
    case Command::kCf: return "cf";
    case Command::kRecurrence: return "recurrence";
    case Command::kCertify: return "certify";
  }
  return "?";
}

Format parse_format(const std::string& text) {
  if (text == "text") return Format::kText;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  throw UsageError("unknown format '" + text + "' (expected text, csv, or json)");
}

std::vector<long> parse_n_spec(const std::string& text) {
  if (text.empty()) throw UsageError("empty n specification");
  constexpr long kMaxN = 500;
  std::vector<long> values;
  for (const std::string& token : split(text, ',')) {
    if (token.empty()) throw UsageError("empty entry in n specification '" + text + "'");
    long lo = 0, hi = 0;
    if (const auto dots = token.find(".."); dots != std::string::npos) {
      lo = parse_long(token.substr(0, dots));
      hi = parse_long(token.substr(dots + 2));
    } else {
      lo = hi = parse_long(token);
    }
    if (lo < 1 || hi > kMaxN || lo > hi) {
      throw UsageError("n range '" + token + "' out of order or outside [1, 500]");
    }
    for (long n = lo; n <= hi; ++n) values.push_back(n);
  }
  return values;
}

FamilyId resolve_family(const std::string& family, std::optional<long> rho,
                        std::optional<long> theta, std::optional<long> ups,
                        std::optional<long> chi, std::optional<long> psi) {
  if (family.empty()) throw UsageError("--family is required");

  const auto reject_params = [&](const std::string& which) {
    if (rho || theta || ups || chi || psi) {
      throw UsageError("family '" + which + "' takes no shape parameters");
    }
  };

  FamilyId id;
  if (family == "apery") {
    reject_params(family);
    id.kind = FamilyId::Kind::kApery;
    return id;
  }
  if (family == "counterexample1" || family == "counterexample2") {
    reject_params(family);
    id.kind = FamilyId::Kind::kCounterexample;
    id.variant = family.back() - '0';
    return id;
  }

  const std::vector<std::string> parts = split(family, ',');
  if (parts.size() != 2) {
    throw UsageError("unknown family '" + family +
                     "' (expected apery, counterexample1, counterexample2, or i,j)");
  }
  const long i = parse_long(parts[0]);
  const long j = parse_long(parts[1]);

  try {
    FamilyParams params;
    switch (j) {
      case 1:
        if (!rho) throw UsageError("family i,1 requires --rho");
        if (theta || ups || chi || psi) throw UsageError("family i,1 takes only --rho");
        params = FamilyParams::with_rho(static_cast<int>(i), *rho);
        break;
      case 2:
        if (!theta) throw UsageError("family i,2 requires --theta");
        if (rho || ups || chi || psi) throw UsageError("family i,2 takes only --theta");
        params = FamilyParams::with_theta(static_cast<int>(i), *theta);
        break;
      case 3:
        if (!ups || !chi || !psi) throw UsageError("family i,3 requires --ups, --chi, and --psi");
        if (rho || theta) throw UsageError("family i,3 takes only --ups/--chi/--psi");
        params = FamilyParams::with_linear(static_cast<int>(i), *ups, *chi, *psi);
        break;
      default:
        throw UsageError("family inner index must be 1, 2, or 3");
    }
    params.validate();
    id.kind = FamilyId::Kind::kParametric;
    id.params = params;
    return id;
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    // Parameter range violations from FamilyParams::validate are user input
    // problems, not internal failures.
    throw UsageError(e.what());
  }
}

}  // namespace zeta3::cli
