// Command implementations: each subcommand produces a Report (config echo,
// column-ordered rows, summary), which one writer per output format renders
// deterministically.
#pragma once

#include "run_config.hpp"

#include <iosfwd>
#include <utility>

namespace zeta3::cli {

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
};

Report build_report(const RunConfig& config);
void write_report(const Report& report, Format format, std::ostream& os);

// build + write; throws UsageError for config problems.
void run_command(const RunConfig& config, std::ostream& os);

}  // namespace zeta3::cli
