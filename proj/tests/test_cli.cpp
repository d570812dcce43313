// End-to-end tests of the zeta3 command-line harness: every subcommand, the
// three output formats, file output, and the usage-error contract (exit 2).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using nlohmann::json;

struct CliResult {
  int status = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string("\"") + ZETA3_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  const int rc = pclose(pipe);
  result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return result;
}

json run_json(const std::string& args) {
  const CliResult result = run_cli(args + " --format json");
  REQUIRE(result.status == 0);
  return json::parse(result.output);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string::size_type start = 0;
  while (start < text.size()) {
    const auto pos = text.find('\n', start);
    if (pos == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table renders exact fractions with certified errors") {
  const CliResult result = run_cli("table --family apery --n 2..4");
  CHECK(result.status == 0);
  CHECK(result.output.rfind("table\n  family: apery\n  n: 2,3,4\n  digits: 4\n\n", 0) == 0);
  for (const char* expected :
       {"351/292", "62531/52020", "11424695/9504288", "2.109e-6", "1.968e-9", "1.778e-12",
        "\nsummary\n", "rows: 3"}) {
    CHECK(contains(result.output, expected));
  }
}

TEST_CASE("table covers the parametric families") {
  const CliResult theta = run_cli("table --family 1,2 --theta 2 --n 3");
  CHECK(theta.status == 0);
  CHECK(contains(theta.output, "family: (1,2) theta=2"));
  CHECK(contains(theta.output, "1987/1653"));
  CHECK(contains(theta.output, "3.686e-8"));

  const CliResult linear = run_cli("table --family 1,3 --ups 1 --chi 1 --psi 1 --n 2..4");
  CHECK(linear.status == 0);
  for (const char* expected : {"2231/1856", "783217/651564", "118221931/98349696", "9.489e-6",
                               "6.216e-9", "4.550e-12"}) {
    CHECK(contains(linear.output, expected));
  }
}

TEST_CASE("table csv is a plain machine-readable grid") {
  const CliResult result = run_cli("table --family apery --n 2..4,50 --format csv");
  CHECK(result.status == 0);
  const std::vector<std::string> lines = lines_of(result.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "n,fraction,error");
  CHECK(lines[1] == "2,351/292,2.109e-6");
  CHECK(lines[2] == "3,62531/52020,1.968e-9");
  CHECK(lines[3] == "4,11424695/9504288,1.778e-12");
  // Deep row: the exact fraction is enormous but the certified error is tiny.
  CHECK(lines[4].rfind("50,", 0) == 0);
  CHECK(contains(lines[4], ",2.795e-153"));
}

TEST_CASE("table json structure and determinism") {
  const std::string args = "table --family 1,1 --rho 2 --n 2..4";
  const json j = run_json(args);
  CHECK(j["command"] == "table");
  CHECK(j["config"]["family"] == "(1,1) rho=2");
  CHECK(j["config"]["n"] == "2,3,4");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["fraction"] == "1327/1104");
  CHECK(j["rows"][1]["fraction"] == "104377/86832");
  CHECK(j["rows"][2]["fraction"] == "58624219/48769920");
  CHECK(j["rows"][1]["error"] == "5.776e-8");
  CHECK(j["rows"][2]["error"] == "5.211e-11");
  CHECK(j["summary"]["rows"] == "3");

  // Exact arithmetic end to end: repeated runs must agree byte for byte.
  const CliResult first = run_cli(args + " --format json");
  const CliResult second = run_cli(args + " --format json");
  CHECK(first.status == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("figure presets locate the extreme curves") {
  const json fig1 = run_json("figure --preset figure1");
  REQUIRE(fig1["rows"].size() == 117);  // 13 families, n = 2..10
  CHECK(fig1["rows"][0]["family"] == "apery");
  CHECK(fig1["rows"][0]["n"] == "2");
  CHECK(fig1["rows"][0]["f"] == "0.0765142");
  CHECK(fig1["summary"]["f_min"] == "0.0144346");
  CHECK(fig1["summary"]["f_min_family"] == "apery");
  CHECK(fig1["summary"]["f_min_n"] == "10");
  CHECK(fig1["summary"]["f_max"] == "0.137009");
  CHECK(fig1["summary"]["f_max_family"] == "(3,2) theta=93");
  CHECK(fig1["summary"]["f_max_n"] == "2");

  const json fig2 = run_json("figure --preset figure2");
  REQUIRE(fig2["rows"].size() == 27);  // baseline + 2 counterexamples, n = 2..10
  CHECK(fig2["summary"]["f_min"] == "0.0144346");
  CHECK(fig2["summary"]["f_min_family"] == "apery");
  CHECK(fig2["summary"]["f_max"] == "0.184945");
  CHECK(fig2["summary"]["f_max_family"] == "counterexample2");
  CHECK(fig2["summary"]["f_max_n"] == "2");
}

TEST_CASE("cf classical form") {
  const json j = run_json("cf --family apery");
  CHECK(j["summary"]["method"] == "classical");
  CHECK(j["summary"]["a0"] == "0");
  CHECK(j["summary"]["notation"] == "6|/|5 - 1|/|117 - 64|/|535 - 729|/|1463 ...");
  REQUIRE(j["rows"].size() == 10);
  CHECK(j["rows"][0]["b"] == "6");
  CHECK(j["rows"][0]["a"] == "5");
  CHECK(j["rows"][1]["b"] == "-1");
  CHECK(j["rows"][1]["a"] == "117");
  CHECK(j["rows"][2]["b"] == "-64");
  CHECK(j["rows"][2]["a"] == "535");
}

TEST_CASE("cf accelerated integer form") {
  const json j = run_json("cf --family 1,2 --theta 2 --canonical --terms 6");
  CHECK(j["summary"]["method"] == "accelerated");
  CHECK(j["summary"]["notation"] ==
        "9|/|8 - 184|/|359 - 30672|/|146736 - 209967552|/|1865280 ...");
  REQUIRE(j["rows"].size() == 6);
  CHECK(j["rows"][0]["b"] == "9");
  CHECK(j["rows"][0]["a"] == "8");
  CHECK(j["rows"][2]["b"] == "-30672");
  CHECK(j["rows"][2]["a"] == "146736");
}

TEST_CASE("cf generic construction from the convergents") {
  const json j = run_json("cf --family 1,2 --theta 2 --terms 8");
  CHECK(j["summary"]["method"] == "convergents");
  REQUIRE(j["rows"].size() == 8);
  CHECK(j["rows"][0]["b"] == "9");
  CHECK(j["rows"][0]["a"] == "8");
  CHECK(j["rows"][1]["b"] == "-23/3");
  CHECK(j["rows"][1]["a"] == "359/24");
}

TEST_CASE("cf canonical form is restricted to its tabulated family") {
  const CliResult apery = run_cli("cf --family apery --canonical");
  CHECK(apery.status == 2);
  CHECK(contains(apery.output, "--canonical requires --family 1,2"));
  const CliResult theta3 = run_cli("cf --family 1,2 --theta 3 --canonical");
  CHECK(theta3.status == 2);
  CHECK(contains(theta3.output, "tabulated for --theta 2"));
  CHECK(run_cli("cf --family apery --terms 0").status == 2);
  CHECK(run_cli("cf --family apery --terms 121").status == 2);
}

TEST_CASE("recurrence closed form for the baseline") {
  const json j = run_json("recurrence --family apery");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][0]["coefficient"] == "alpha");
  CHECK(j["rows"][0]["degree"] == "3");
  CHECK(j["rows"][0]["polynomial"] == "n^3 + 6*n^2 + 12*n + 8");
  CHECK(j["rows"][1]["polynomial"] == "-34*n^3 - 153*n^2 - 231*n - 117");
  CHECK(j["rows"][2]["polynomial"] == "n^3 + 3*n^2 + 3*n + 1");
  CHECK(j["summary"]["method"] == "closed-form");
  CHECK(j["summary"]["valid_from"] == "0");
  CHECK(j["summary"]["verified"] == "n=0..50 on p and q: yes");
  CHECK(j["summary"]["characteristic"] == "t^2 - 34*t + 1");
  CHECK(j["summary"]["root_plus"] == "33.97056275");
  CHECK(j["summary"]["root_minus"] == "0.02943725152");
}

TEST_CASE("recurrence fits and verifies a relation where no closed form is known") {
  const json j = run_json("recurrence --family 3,2 --theta 2");
  CHECK(j["summary"]["method"] == "fit");
  CHECK(j["summary"]["fitted"] == "yes");
  CHECK(j["summary"]["valid_from"] == "1");
  CHECK(j["summary"]["verified"] == "all windows n=1..58 on p and q: yes");
  CHECK(j["summary"]["characteristic"] == "t^2 - 34*t + 1");
  REQUIRE(j["rows"].size() == 3);
}

TEST_CASE("recurrence reports the limit pair when no exact relation exists") {
  const json j = run_json("recurrence --family counterexample2");
  CHECK(j["rows"].empty());
  CHECK(j["summary"]["method"] == "fit");
  CHECK(j["summary"]["fitted"] == "no");
  CHECK(j["summary"]["diagnostic"] ==
        "no order-2 relation of coefficient degree <= 14 fits the data");
  CHECK(j["summary"]["limit_c1"] == "34");
  CHECK(j["summary"]["limit_c0"] == "-1");
  CHECK(j["summary"]["limit_integral"] == "yes");
  CHECK(j["summary"]["characteristic"] == "t^2 - 34*t + 1 (limit)");
}

TEST_CASE("certify passes on the integral families") {
  const json j = run_json("certify --family apery --n 30");
  REQUIRE(j["rows"].size() == 30);
  CHECK(j["rows"][29]["n"] == "30");
  CHECK(j["rows"][29]["q_integral"] == "yes");
  CHECK(j["rows"][29]["p_integral"] == "yes");
  CHECK(j["rows"][29]["nth_root"] == "0.424692");
  CHECK(j["summary"]["omega"] == "0");
  CHECK(j["summary"]["integral"] == "yes");
  CHECK(j["summary"]["decays"] == "yes");
  CHECK(j["summary"]["decay_target"] == "0.5912630024");
  CHECK(j["summary"]["verdict"] == "pass");

  const json p11 = run_json("certify --family 1,1 --rho 2 --n 20");
  CHECK(p11["summary"]["omega"] == "1");
  CHECK(p11["summary"]["verdict"] == "pass");
}

TEST_CASE("certify reports the integrality failure of the counterexamples") {
  const json c1 = run_json("certify --family counterexample1 --n 15");
  REQUIRE(c1["rows"].size() == 3);
  for (int w = 0; w < 3; ++w) {
    CHECK(c1["rows"][w]["omega"] == std::to_string(w));
    CHECK(c1["rows"][w]["first_q_failure"] == "2");
    CHECK(c1["rows"][w]["first_p_failure"] == "1");
    CHECK(c1["rows"][w]["integral"] == "no");
  }
  CHECK(c1["summary"]["integral"] == "no");
  CHECK(c1["summary"]["verdict"] == "fail");
  CHECK(c1["summary"]["diagnostic"] ==
        "no scaling n^omega (omega <= 2) with lcm(1..n)^3 integerizes p and q");

  const json c2 = run_json("certify --family counterexample2 --n 12");
  CHECK(c2["summary"]["verdict"] == "fail");
  CHECK(c2["rows"][0]["first_q_failure"] == "2");
  CHECK(c2["rows"][0]["first_p_failure"] == "2");
}

TEST_CASE("output lands in the requested file") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "zeta3_cli_output_test.txt";
  std::filesystem::remove(path);
  const CliResult result =
      run_cli("table --family apery --n 2 --output " + path.string());
  CHECK(result.status == 0);
  CHECK(result.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contains(content, "351/292"));
  in.close();
  std::filesystem::remove(path);
}

TEST_CASE("usage problems exit with code 2") {
  CHECK(run_cli("table --family apery").status == 2);                // missing --n
  CHECK(run_cli("certify --family apery").status == 2);              // missing --n
  CHECK(run_cli("table --family apery --n 0").status == 2);          // below range
  CHECK(run_cli("table --family apery --n 4..2").status == 2);       // inverted range
  CHECK(run_cli("table --family apery --n 2 --format yaml").status == 2);
  CHECK(run_cli("table --family apery --n 2 --digits 51").status == 2);
  CHECK(run_cli("table --family 5,1 --rho 2 --n 2").status == 2);    // i out of range
  CHECK(run_cli("table --family 1,4 --n 2").status == 2);            // j out of range
  CHECK(run_cli("table --family 1,2 --theta 1 --n 2").status == 2);  // |theta| < 2
  CHECK(run_cli("nonsense").status == 2);
  CHECK(run_cli("").status == 2);                                    // subcommand required

  const CliResult missing_theta = run_cli("table --family 1,2 --n 2");
  CHECK(missing_theta.status == 2);
  CHECK(contains(missing_theta.output, "family i,2 requires --theta"));
  const CliResult stray_param = run_cli("table --family apery --rho 3 --n 2");
  CHECK(stray_param.status == 2);
  CHECK(contains(stray_param.output, "takes no shape parameters"));
}

TEST_CASE("help is available and exits cleanly") {
  const CliResult result = run_cli("--help");
  CHECK(result.status == 0);
  for (const char* expected : {"table", "figure", "cf", "recurrence", "certify"}) {
    CHECK(contains(result.output, expected));
  }
}

}  // TEST_SUITE
