/* Copyright 2026 The qfimax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
  std::string stderr_text;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qfimax_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out = scratch_dir() / ("stdout_" + std::to_string(counter) + ".txt");
  const fs::path err = scratch_dir() / ("stderr_" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string command = std::string(QFIMAX_CLI_BIN) + " " + args + " > " +
                              out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.stdout_text = slurp(out);
  result.stderr_text = slurp(err);
  return result;
}

fs::path write_config(const std::string& name, const json& config) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << config.dump(2);
  return path;
}

}  // namespace

TEST_CASE("max-qfi: pure qubit against a diagonal generator") {
  const fs::path config = write_config(
      "max_pure.json", {{"p", {1.0, 0.0}}, {"h_eigs", {1.0, -1.0}}, {"budget", 2000}});
  const RunResult run = run_cli("max-qfi --config " + config.string() + " --seed 1");
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.stdout_text);
  CHECK(report["bound"].get<double>() == doctest::Approx(4.0));
  CHECK(report["optimal_state_qfi"].get<double>() == doctest::Approx(4.0));
  CHECK(report["ratio"].get<double>() >= 1.0 - 1e-4);
  CHECK(report["optimal_state_basis"].size() == 2);
}

TEST_CASE("max-qfi: uniform spectrum reports a zero bound") {
  const fs::path config = write_config(
      "max_uniform.json",
      {{"p", {0.25, 0.25, 0.25, 0.25}}, {"h_eigs", {3.0, 1.0, -1.0, -3.0}}});
  const RunResult run = run_cli("max-qfi --config " + config.string());
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.stdout_text);
  CHECK(report["bound"].get<double>() == 0.0);
  CHECK(report["brute_force_value"].get<double>() == 0.0);
}

TEST_CASE("max-qfi: rank-4 five-level example") {
  const fs::path config = write_config(
      "max_d5.json", {{"p", {0.4, 0.3, 0.2, 0.1, 0.0}},
                      {"h_eigs", {2.0, 1.0, 0.0, -1.0, -2.0}},
                      {"budget", 100}});
  const RunResult run = run_cli("max-qfi --config " + config.string());
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.stdout_text);
  CHECK(report["bound"].get<double>() == doctest::Approx(6.8));
}

TEST_CASE("max-qfi: explicit Hermitian matrix input") {
  const fs::path config = write_config(
      "max_matrix.json",
      {{"p", {0.8, 0.2}},
       {"h_matrix", {{0.0, {0.3, -0.4}}, {{0.3, 0.4}, 1.0}}},
       {"budget", 3000}});
  const RunResult run = run_cli("max-qfi --config " + config.string());
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.stdout_text);
  CHECK(report["ratio"].get<double>() >= 1.0 - 1e-4);
}

TEST_CASE("malformed configs exit with code 1 and name the field") {
  const fs::path config = write_config("bad_missing_p.json", {{"h_eigs", {1.0, -1.0}}});
  const RunResult run = run_cli("max-qfi --config " + config.string());
  CHECK(run.exit_code == 1);
  CHECK(run.stderr_text.find("'p'") != std::string::npos);

  const RunResult missing = run_cli("max-qfi --config /nonexistent/file.json");
  CHECK(missing.exit_code == 1);

  const fs::path bad_gamma = write_config(
      "bad_gamma.json", {{"h_eigs", {1.0, 0.0, -1.0}}, {"gamma_grid", {0.1}}});
  const RunResult purity = run_cli("purity-scan --config " + bad_gamma.string());
  CHECK(purity.exit_code == 1);
}

TEST_CASE("thermal-scan: slope column, zero-temperature row, polarization input") {
  json config = {{"n_grid", {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
                 {"j_grid", {0.5}},
                 {"beta_grid", {1.0}}};
  const fs::path path = write_config("thermal_n.json", config);
  const RunResult run = run_cli("thermal-scan --config " + path.string());
  REQUIRE(run.exit_code == 0);
  CHECK(run.stdout_text.rfind("# schema: thermal-scan v1", 0) == 0);

  // Parse the last column pair of the first data row.
  std::istringstream lines(run.stdout_text);
  std::string line;
  std::string header;
  std::vector<std::string> data_rows;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header.empty()) header = line; else data_rows.push_back(line);
  }
  REQUIRE(header ==
          "n,j,beta,g,k_b,l_b,m_b,k_b_leading,slope_n,slope_j");
  REQUIRE(data_rows.size() == 11);
  // The slope column must be the log-log fit of the emitted k_b column.
  std::vector<double> ns, ks;
  double slope_cell = 0.0, slope_j_cell = 0.0;
  for (const auto& row_text : data_rows) {
    std::istringstream row(row_text);
    std::vector<double> cells;
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 10);
    ns.push_back(cells[0]);
    ks.push_back(cells[4]);
    slope_cell = cells[8];
    slope_j_cell = cells[9];
  }
  double sx = 0.0, sy = 0.0, cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) { sx += std::log(ns[i]); sy += std::log(ks[i]); }
  sx /= ns.size(); sy /= ns.size();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    cov += (std::log(ns[i]) - sx) * (std::log(ks[i]) - sy);
    var += (std::log(ns[i]) - sx) * (std::log(ns[i]) - sx);
  }
  CHECK(slope_cell == doctest::Approx(cov / var).epsilon(1e-12));
  CHECK(slope_cell >= 1.8);  // quadratic growth with a linear-order remainder
  CHECK(slope_cell <= 2.05);
  CHECK(std::isnan(slope_j_cell));  // undefined for a single j

  const fs::path zero_beta = write_config(
      "thermal_zero.json",
      {{"n_grid", {2}}, {"j_grid", {1.0}}, {"beta_grid", {0.0}}});
  const RunResult zero_run = run_cli("thermal-scan --config " + zero_beta.string());
  REQUIRE(zero_run.exit_code == 0);
  CHECK(zero_run.stdout_text.find(",0,") != std::string::npos);

  // Polarization 0.5 must reproduce beta = ln 3.
  const fs::path by_pol = write_config(
      "thermal_pol.json",
      {{"n_grid", {2}}, {"j_grid", {0.5}}, {"polarization_grid", {0.5}}});
  const fs::path by_beta = write_config(
      "thermal_beta.json",
      {{"n_grid", {2}}, {"j_grid", {0.5}}, {"beta_grid", {std::log(3.0)}}});
  const RunResult run_pol = run_cli("thermal-scan --config " + by_pol.string());
  const RunResult run_beta = run_cli("thermal-scan --config " + by_beta.string());
  REQUIRE(run_pol.exit_code == 0);
  REQUIRE(run_beta.exit_code == 0);
  CHECK(run_pol.stdout_text == run_beta.stdout_text);
}

TEST_CASE("thermal-scan output is byte-stable across runs") {
  const fs::path config = write_config(
      "thermal_det.json",
      {{"n_grid", {1, 2, 3}}, {"j_grid", {0.5, 1.0}}, {"beta_grid", {0.5, 2.0}}});
  const fs::path out1 = scratch_dir() / "thermal_det_1.csv";
  const fs::path out2 = scratch_dir() / "thermal_det_2.csv";
  REQUIRE(run_cli("thermal-scan --config " + config.string() + " --out " + out1.string())
              .exit_code == 0);
  REQUIRE(run_cli("thermal-scan --config " + config.string() + " --out " + out2.string())
              .exit_code == 0);
  const std::string a = slurp(out1);
  CHECK(!a.empty());
  CHECK(a == slurp(out2));
}

TEST_CASE("purity-scan: boundary rows are exact") {
  const fs::path config = write_config(
      "purity.json", {{"h_eigs", {3.0, 1.0, -1.0, -3.0}},
                      {"gamma_grid", {0.25, 1.0}},
                      {"restarts", 8}});
  const RunResult run = run_cli("purity-scan --config " + config.string() + " --seed 4");
  REQUIRE(run.exit_code == 0);
  CHECK(run.stdout_text.rfind("# schema: purity-scan v1", 0) == 0);
  std::istringstream lines(run.stdout_text);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  REQUIRE(rows.size() == 3);  // header + two rows
  CHECK(rows[0] == "gamma,p1,p2,p3,p4,value");
  CHECK(rows[1].rfind("0.25,", 0) == 0);
  CHECK(rows[2] == "1,1,0,0,0,36");
}

TEST_CASE("control-sim: constant modulation saturates without pulses") {
  const fs::path config = write_config("control_const.json",
                                       {{"modulation", "constant"},
                                        {"alpha", 1.0},
                                        {"horizon", 1.0},
                                        {"steps", 512},
                                        {"pulses", false},
                                        {"beta", 1.0}});
  const RunResult run = run_cli("control-sim --config " + config.string());
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.stdout_text);
  CHECK(report["ratio"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(report["convergence"].size() == 3);
}

TEST_CASE("control-sim: pulsed cosine drive approaches the bound") {
  const fs::path config = write_config("control_cos.json",
                                       {{"modulation", "cos-amplitude"},
                                        {"alpha", 1.0},
                                        {"omega", 1.0},
                                        {"cycles", 1},
                                        {"steps", 2048},
                                        {"pulses", true},
                                        {"beta", 1.0}});
  const RunResult run = run_cli("control-sim --config " + config.string());
  REQUIRE(run.exit_code == 0);
  const json report = json::parse(run.stdout_text);
  CHECK(report["ratio"].get<double>() >= 1.0 - 1e-3);
  CHECK(report["pulse_times"].size() == 2);
}

TEST_CASE("verify: exit codes and determinism") {
  const RunResult bad = run_cli("verify --samples 0");
  CHECK(bad.exit_code == 1);

  const fs::path out1 = scratch_dir() / "verify_1.txt";
  const fs::path out2 = scratch_dir() / "verify_2.txt";
  const RunResult run1 =
      run_cli("verify --seed 7 --samples 200 --out " + out1.string());
  const RunResult run2 =
      run_cli("verify --seed 7 --samples 200 --out " + out2.string());
  REQUIRE(run1.exit_code == 0);
  REQUIRE(run2.exit_code == 0);
  const std::string a = slurp(out1);
  CHECK(!a.empty());
  CHECK(a == slurp(out2));
  CHECK(a.find("all suites passed") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("max-qfi").exit_code == 1);  // --config is required
  CHECK(run_cli("--help").exit_code == 0);
}
