#include "commands.hpp"

#include "zeta3/analysis.hpp"
#include "zeta3/contfrac.hpp"
#include "zeta3/recurrence.hpp"

#include "json.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace zeta3::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join_longs(const std::vector<long>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

Approximant approximant_for(const FamilyId& id, long n) {
  switch (id.kind) {
    case FamilyId::Kind::kApery:
      return apery_sequence(n);
    case FamilyId::Kind::kParametric:
      return sequence(id.params, n);
    case FamilyId::Kind::kCounterexample:
      return counterexample_sequence(id.variant, n).approximant;
  }
  throw std::logic_error("approximant_for: bad family kind");
}

const FamilyId& require_family(const RunConfig& config) {
  if (!config.family) throw UsageError("--family is required for this command");
  return *config.family;
}

int effective_digits(const RunConfig& config, int fallback) {
  if (config.digits == 0) return fallback;
  if (config.digits < 1 || config.digits > 50) {
    throw UsageError("--digits must be between 1 and 50");
  }
  return config.digits;
}

void echo_family(Report& report, const FamilyId& id) {
  report.config.emplace_back("family", id.label());
}

// ---------------------------------------------------------------------------
// table: per-n exact fraction and certified error.
// ---------------------------------------------------------------------------
Report cmd_table(const RunConfig& config) {
  const FamilyId& id = require_family(config);
  if (config.n_values.empty()) throw UsageError("table requires --n");
  const int digits = effective_digits(config, 4);

  Report report;
  report.command = "table";
  echo_family(report, id);
  report.config.emplace_back("n", join_longs(config.n_values));
  report.config.emplace_back("digits", std::to_string(digits));
  report.columns = {"n", "fraction", "error"};
  for (const long n : config.n_values) {
    const Approximant appr = approximant_for(id, n);
    if (appr.q == 0) throw std::runtime_error("table: zero denominator at n=" + std::to_string(n));
    const Rational value = appr.p / appr.q;
    const FixedPrecisionValue err = approximation_error(appr, digits);
    report.rows.push_back(
        {std::to_string(n), to_fraction_string(value), err.to_sci_string(digits)});
  }
  report.summary.emplace_back("rows", std::to_string(report.rows.size()));
  return report;
}

// ---------------------------------------------------------------------------
// figure: the f = |1/ln|zeta(3) - p/q|| grids behind the two figures.
// ---------------------------------------------------------------------------
Report cmd_figure(const RunConfig& config) {
  std::vector<FamilyId> families;
  if (config.preset == "figure1") {
    families = figure1_families();
  } else if (config.preset == "figure2") {
    families = figure2_families();
  } else {
    throw UsageError("unknown preset '" + config.preset + "' (expected figure1 or figure2)");
  }
  const int digits = effective_digits(config, 6);

  Report report;
  report.command = "figure";
  report.config.emplace_back("preset", config.preset);
  report.config.emplace_back("n", "2..10");
  report.config.emplace_back("digits", std::to_string(digits));
  report.columns = {"family", "n", "f"};

  bool have_extreme = false;
  FixedPrecisionValue min_f, max_f;
  std::string min_label, max_label;
  long min_n = 0, max_n = 0;
  for (const FamilyId& id : families) {
    for (long n = 2; n <= 10; ++n) {
      const Approximant appr = approximant_for(id, n);
      const FixedPrecisionValue f = figure_metric(appr);
      report.rows.push_back({id.label(), std::to_string(n), f.to_sig_string(digits)});
      if (!have_extreme || f.midpoint() < min_f.midpoint()) {
        min_f = f;
        min_label = id.label();
        min_n = n;
      }
      if (!have_extreme || f.midpoint() > max_f.midpoint()) {
        max_f = f;
        max_label = id.label();
        max_n = n;
      }
      have_extreme = true;
    }
  }
  report.summary.emplace_back("f_min", min_f.to_sig_string(digits));
  report.summary.emplace_back("f_min_family", min_label);
  report.summary.emplace_back("f_min_n", std::to_string(min_n));
  report.summary.emplace_back("f_max", max_f.to_sig_string(digits));
  report.summary.emplace_back("f_max_family", max_label);
  report.summary.emplace_back("f_max_n", std::to_string(max_n));
  return report;
}

// ---------------------------------------------------------------------------
// cf: continued fraction terms (generic Jones construction from the
// convergents; the classical fraction and the integer-term accelerated form
// where they exist).
// ---------------------------------------------------------------------------
IrregularCF fraction_for(const FamilyId& id, const RunConfig& config, std::string& method) {
  const std::size_t terms = static_cast<std::size_t>(config.terms);
  if (id.kind == FamilyId::Kind::kApery && !config.canonical) {
    method = "classical";
    return classical_fraction(terms);
  }
  if (config.canonical) {
    if (id.kind != FamilyId::Kind::kParametric || id.params.i != 1 || id.params.j != 2) {
      throw UsageError("--canonical requires --family 1,2 (the accelerated integer form)");
    }
    if (id.params.theta != 2) {
      throw UsageError("--canonical is tabulated for --theta 2 only");
    }
    method = "accelerated";
    return accelerated_fraction(terms);
  }

  // Jones construction from the exact convergents, seeded with p_0/q_0 = 0/1.
  method = "convergents";
  std::vector<Rational> p{0}, q{1};
  switch (id.kind) {
    case FamilyId::Kind::kParametric: {
      const SequencePair s = family_sequences(id.params, static_cast<long>(terms));
      for (long n = 1; n <= static_cast<long>(terms); ++n) {
        p.push_back(s.p.at(n));
        q.push_back(s.q.at(n));
      }
      break;
    }
    case FamilyId::Kind::kCounterexample: {
      const CounterexampleSequences s =
          counterexample_sequences(id.variant, static_cast<long>(terms));
      for (long n = 1; n <= static_cast<long>(terms); ++n) {
        p.push_back(s.pq.p.at(n));
        q.push_back(s.pq.q.at(n));
      }
      break;
    }
    case FamilyId::Kind::kApery:
      throw std::logic_error("fraction_for: classical case already handled");
  }
  return from_convergents(p, q);
}

Report cmd_cf(const RunConfig& config) {
  const FamilyId& id = require_family(config);
  if (config.terms < 1 || config.terms > 120) {
    throw UsageError("--terms must be between 1 and 120");
  }

  std::string method;
  const IrregularCF cf = fraction_for(id, config, method);

  Report report;
  report.command = "cf";
  echo_family(report, id);
  report.config.emplace_back("terms", std::to_string(config.terms));
  report.config.emplace_back("canonical", yn(config.canonical));
  report.columns = {"k", "b", "a"};
  for (std::size_t k = 1; k <= cf.a.size(); ++k) {
    report.rows.push_back({std::to_string(k), to_fraction_string(cf.b[k - 1]),
                           to_fraction_string(cf.a[k - 1])});
  }
  report.summary.emplace_back("method", method);
  report.summary.emplace_back("a0", to_fraction_string(cf.a0));
  report.summary.emplace_back("notation",
                              to_bar_notation(cf, std::min<std::size_t>(cf.a.size(), 4)));
  return report;
}

// ---------------------------------------------------------------------------
// recurrence: closed forms where known, a verified nullspace fit otherwise,
// and the characteristic polynomial t^2 - 34 t + 1 shared by all of them.
// ---------------------------------------------------------------------------
void append_recurrence_rows(Report& report, const Recurrence2& rec) {
  const auto row = [&](const char* name, const Poly& poly) {
    report.rows.push_back(
        {name, std::to_string(poly.degree()), poly.to_string("n")});
  };
  row("alpha", rec.alpha);
  row("beta", rec.beta);
  row("gamma", rec.gamma);
}

void append_characteristic(Report& report, const Recurrence2& rec) {
  const auto [c1, c0] = characteristic_coefficients(rec);
  const Poly characteristic(std::vector<Rational>{c0, c1, Rational(1)});
  report.summary.emplace_back("characteristic", characteristic.to_string("t"));
  report.summary.emplace_back("root_plus", mu_value(20).to_sig_string(10));
  report.summary.emplace_back("root_minus", lambda_value(20).to_sig_string(10));
}

Report cmd_recurrence(const RunConfig& config) {
  const FamilyId& id = require_family(config);

  Report report;
  report.command = "recurrence";
  echo_family(report, id);
  report.columns = {"coefficient", "degree", "polynomial"};

  const long kVerifyTo = 50;
  switch (id.kind) {
    case FamilyId::Kind::kApery: {
      const Recurrence2 rec = apery_recurrence();
      const SequencePair s = apery_sequences(kVerifyTo + 2);
      const VerifyResult vq = verify_recurrence(rec, s.q, rec.valid_from, kVerifyTo);
      const VerifyResult vp = verify_recurrence(rec, s.p, rec.valid_from, kVerifyTo);
      append_recurrence_rows(report, rec);
      report.summary.emplace_back("method", "closed-form");
      report.summary.emplace_back("valid_from", std::to_string(rec.valid_from));
      report.summary.emplace_back(
          "verified", "n=" + std::to_string(rec.valid_from) + ".." + std::to_string(kVerifyTo) +
                          " on p and q: " + yn(vq.ok && vp.ok));
      append_characteristic(report, rec);
      return report;
    }
    case FamilyId::Kind::kParametric: {
      if (id.params.i == 1 && id.params.j == 2) {
        const Recurrence2 rec = recurrence_closed_form_12(id.params.theta);
        const SequencePair s = family_sequences(id.params, kVerifyTo + 2);
        const VerifyResult vq = verify_recurrence(rec, s.q, rec.valid_from, kVerifyTo);
        const VerifyResult vp = verify_recurrence(rec, s.p, rec.valid_from, kVerifyTo);
        append_recurrence_rows(report, rec);
        report.summary.emplace_back("method", "closed-form");
        report.summary.emplace_back("valid_from", std::to_string(rec.valid_from));
        report.summary.emplace_back(
            "verified", "n=" + std::to_string(rec.valid_from) + ".." + std::to_string(kVerifyTo) +
                            " on p and q: " + yn(vq.ok && vp.ok));
        append_characteristic(report, rec);
        return report;
      }
      const SequencePair s = family_sequences(id.params, 60);
      const std::optional<Recurrence2> rec = discover_recurrence(s.q, &s.p);
      if (!rec) {
        report.summary.emplace_back("method", "fit");
        report.summary.emplace_back("fitted", "no");
        report.summary.emplace_back(
            "diagnostic", "no order-2 relation of coefficient degree <= 14 fits the data");
        return report;
      }
      append_recurrence_rows(report, *rec);
      report.summary.emplace_back("method", "fit");
      report.summary.emplace_back("fitted", "yes");
      report.summary.emplace_back("valid_from", std::to_string(rec->valid_from));
      report.summary.emplace_back(
          "verified", "all windows n=" + std::to_string(rec->valid_from) + ".." +
                          std::to_string(s.q.last_n() - 2) + " on p and q: yes");
      append_characteristic(report, *rec);
      return report;
    }
    case FamilyId::Kind::kCounterexample: {
      const CounterexampleSequences s = counterexample_sequences(id.variant, 60);
      const std::optional<Recurrence2> rec = discover_recurrence(s.pq.q, &s.pq.p);
      if (rec) {
        append_recurrence_rows(report, *rec);
        report.summary.emplace_back("method", "fit");
        report.summary.emplace_back("fitted", "yes");
        report.summary.emplace_back("valid_from", std::to_string(rec->valid_from));
        report.summary.emplace_back(
            "verified", "all windows n=" + std::to_string(rec->valid_from) + ".." +
                            std::to_string(s.pq.q.last_n() - 2) + " on p and q: yes");
        append_characteristic(report, *rec);
        return report;
      }
      // No exact relation: report the asymptotic characteristic pair from the
      // mode-separated constant fit instead.
      report.summary.emplace_back("method", "fit");
      report.summary.emplace_back("fitted", "no");
      report.summary.emplace_back(
          "diagnostic", "no order-2 relation of coefficient degree <= 14 fits the data");
      const PairFitResult fit = mode_separated_pair_fit(id, 40);
      report.summary.emplace_back("limit_c1", std::to_string(fit.c1_rounded));
      report.summary.emplace_back("limit_c0", std::to_string(fit.c0_rounded));
      report.summary.emplace_back("limit_integral", yn(fit.integral));
      const Poly characteristic(std::vector<Rational>{Rational(-fit.c0_rounded),
                                                      Rational(-fit.c1_rounded), Rational(1)});
      report.summary.emplace_back("characteristic", characteristic.to_string("t") + " (limit)");
      report.summary.emplace_back("root_plus", mu_value(20).to_sig_string(10));
      report.summary.emplace_back("root_minus", lambda_value(20).to_sig_string(10));
      return report;
    }
  }
  throw std::logic_error("cmd_recurrence: bad family kind");
}

// ---------------------------------------------------------------------------
// certify: integrality scalings plus the decaying n-th root certificate; the
// counterexample variants get the per-omega failure diagnostics instead.
// ---------------------------------------------------------------------------
Report cmd_certify(const RunConfig& config) {
  const FamilyId& id = require_family(config);
  if (config.n_values.empty()) throw UsageError("certify requires --n");
  const long n_max = *std::max_element(config.n_values.begin(), config.n_values.end());

  Report report;
  report.command = "certify";
  echo_family(report, id);
  report.config.emplace_back("n", std::to_string(n_max));

  if (id.kind == FamilyId::Kind::kCounterexample) {
    report.columns = {"omega", "first_q_failure", "first_p_failure", "integral"};
    const std::vector<ScalingScan> scans = counterexample_scaling_scan(id.variant, n_max);
    bool any_integral = false;
    for (const ScalingScan& scan : scans) {
      const auto cell = [](long n) { return n < 0 ? std::string("-") : std::to_string(n); };
      report.rows.push_back({std::to_string(scan.omega), cell(scan.first_q_failure),
                             cell(scan.first_p_failure), yn(scan.integral())});
      any_integral = any_integral || scan.integral();
    }
    report.summary.emplace_back("integral", yn(any_integral));
    report.summary.emplace_back("verdict", any_integral ? "pass" : "fail");
    report.summary.emplace_back(
        "diagnostic", "no scaling n^omega (omega <= 2) with lcm(1..n)^3 integerizes p and q");
    return report;
  }

  const Certificate cert = certificate(id, n_max);
  report.columns = {"n", "q_integral", "p_integral", "value", "nth_root"};
  for (const CertificateRow& row : cert.rows) {
    report.rows.push_back({std::to_string(row.n), yn(row.q_integral), yn(row.p_integral),
                           row.value.to_sci_string(4), row.nth_root.to_sig_string(6)});
  }
  report.summary.emplace_back("omega", std::to_string(cert.omega));
  report.summary.emplace_back("integral", yn(cert.integral));
  report.summary.emplace_back("decays", yn(cert.decays));
  report.summary.emplace_back("crossover_n", std::to_string(cert.crossover_n));
  report.summary.emplace_back("decay_target", decay_target(20).to_sig_string(10));
  report.summary.emplace_back("verdict", cert.integral && cert.decays ? "pass" : "fail");
  return report;
}

// ---------------------------------------------------------------------------
// Writers.
// ---------------------------------------------------------------------------
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_text(const Report& report, std::ostream& os) {
  os << report.command << "\n";
  for (const auto& [key, value] : report.config) os << "  " << key << ": " << value << "\n";
  if (!report.rows.empty()) {
    os << "\n";
    std::vector<std::size_t> widths(report.columns.size());
    for (std::size_t c = 0; c < report.columns.size(); ++c) widths[c] = report.columns[c].size();
    for (const auto& row : report.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) os << "  ";
        os << cells[c];
        if (c + 1 < cells.size()) os << std::string(widths[c] - cells[c].size(), ' ');
      }
      os << "\n";
    };
    line(report.columns);
    for (const auto& row : report.rows) line(row);
  }
  if (!report.summary.empty()) {
    os << "\nsummary\n";
    for (const auto& [key, value] : report.summary) os << "  " << key << ": " << value << "\n";
  }
}

void write_csv(const Report& report, std::ostream& os) {
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    if (c) os << ',';
    os << csv_quote(report.columns[c]);
  }
  os << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      os << csv_quote(row[c]);
    }
    os << "\n";
  }
}

void write_json(const Report& report, std::ostream& os) {
  ordered_json j;
  j["command"] = report.command;
  ordered_json cfg = ordered_json::object();
  for (const auto& [key, value] : report.config) cfg[key] = value;
  j["config"] = cfg;
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) r[report.columns[c]] = row[c];
    rows.push_back(r);
  }
  j["rows"] = rows;
  ordered_json summary = ordered_json::object();
  for (const auto& [key, value] : report.summary) summary[key] = value;
  j["summary"] = summary;
  os << j.dump(2) << "\n";
}

}  // namespace

Report build_report(const RunConfig& config) {
  switch (config.command) {
    case Command::kTable: return cmd_table(config);
    case Command::kFigure: return cmd_figure(config);
    case Command::kCf: return cmd_cf(config);
    case Command::kRecurrence: return cmd_recurrence(config);
    case Command::kCertify: return cmd_certify(config);
  }
  throw std::logic_error("build_report: bad command");
}

void write_report(const Report& report, Format format, std::ostream& os) {
  switch (format) {
    case Format::kText: write_text(report, os); break;
    case Format::kCsv: write_csv(report, os); break;
    case Format::kJson: write_json(report, os); break;
  }
}

void run_command(const RunConfig& config, std::ostream& os) {
  write_report(build_report(config), config.format, os);
}

}  // namespace zeta3::cli
