// Copyright 2026 The bh-transport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bht/commands.hpp"

namespace fs = std::filesystem;

namespace {

fs::path make_clean_dir(const std::string& name) {
  const fs::path dir = fs::path("cli_scratch") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Rows of a CSV file, each split on commas; row 0 is the header.
std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int run_cli(const std::string& args, const fs::path& stderr_to = {}) {
  std::string cmd = std::string(BHT_CLI_PATH) + " " + args;
  cmd += stderr_to.empty() ? " 2>/dev/null" : " 2>" + stderr_to.string();
  return std::system(cmd.c_str());
}

std::string config(const std::string& name) {
  return (fs::path(BHT_CONFIG_DIR) / name).string();
}

}  // namespace

TEST_CASE("an empty document keeps every default") {
  const bht::RunConfig def;
  const bht::RunConfig c = bht::parse_config(nlohmann::json::object());
  REQUIRE(c.omega_ghz == def.omega_ghz);
  REQUIRE(c.j_mhz == def.j_mhz);
  REQUIRE(c.omega_mhz == def.omega_mhz);
  REQUIRE(c.per_site_cap == def.per_site_cap);
  REQUIRE(c.total_cap == def.total_cap);
  REQUIRE(c.sweep.omega_mhz_values == def.sweep.omega_mhz_values);
  REQUIRE(c.disorder.sigma_mhz == def.disorder.sigma_mhz);
  REQUIRE(c.seed == def.seed);
  REQUIRE(c.workers == def.workers);
}

TEST_CASE("every key round-trips") {
  nlohmann::json doc = {
      {"chain",
       {{"omega_GHz", {4.0, 4.1, 4.2}},
        {"alpha_MHz", {-150.0, -151.0, -152.0}},
        {"J_MHz", 37.5},
        {"gamma_per_us", {1.0, 2.0, 3.0}},
        {"gamma_phi_per_us", {0.1, 0.2, 0.3}},
        {"Omega_MHz", 1.25},
        {"omega_d_GHz", 4.05}}},
      {"basis", {{"per_site_cap", 2}, {"total_cap", 3}}},
      {"linear", {{"delta_span_J", 1.5}, {"n_points", 55}}},
      {"sweep",
       {{"omega_d_GHz_min", 3.95},
        {"omega_d_GHz_max", 4.15},
        {"n_omega_d", 7},
        {"Omega_MHz_values", {0.5, 1.5}}}},
      {"levels",
       {{"max_photons", 3}, {"projections", {2, 4}}, {"spacing_sectors", {1, 2}}}},
      {"disorder",
       {{"sigma_MHz", {1.0, 2.0}},
        {"n_realizations", 17},
        {"delta_span_J", 2.25},
        {"n_points", 33},
        {"engine", "quantum"}}},
      {"seed", 99},
      {"workers", 4}};

  const bht::RunConfig c = bht::parse_config(doc);
  REQUIRE(c.omega_ghz == std::vector<double>{4.0, 4.1, 4.2});
  REQUIRE(c.alpha_mhz == std::vector<double>{-150.0, -151.0, -152.0});
  REQUIRE(c.j_mhz == 37.5);
  REQUIRE(c.gamma_per_us == std::vector<double>{1.0, 2.0, 3.0});
  REQUIRE(c.gamma_phi_per_us == std::vector<double>{0.1, 0.2, 0.3});
  REQUIRE(c.omega_mhz == 1.25);
  REQUIRE(c.omega_d_ghz == 4.05);
  REQUIRE(c.per_site_cap == 2);
  REQUIRE(c.total_cap == 3);
  REQUIRE(c.linear.delta_span_J == 1.5);
  REQUIRE(c.linear.n_points == 55);
  REQUIRE(c.sweep.omega_d_ghz_min == 3.95);
  REQUIRE(c.sweep.omega_d_ghz_max == 4.15);
  REQUIRE(c.sweep.n_omega_d == 7);
  REQUIRE(c.sweep.omega_mhz_values == std::vector<double>{0.5, 1.5});
  REQUIRE(c.levels.max_photons == 3);
  REQUIRE(c.levels.projections == std::vector<int>{2, 4});
  REQUIRE(c.levels.spacing_sectors == std::vector<int>{1, 2});
  REQUIRE(c.disorder.sigma_mhz == std::vector<double>{1.0, 2.0});
  REQUIRE(c.disorder.n_realizations == 17);
  REQUIRE(c.disorder.delta_span_J == 2.25);
  REQUIRE(c.disorder.n_points == 33);
  REQUIRE(c.disorder.engine == "quantum");
  REQUIRE(c.seed == 99);
  REQUIRE(c.workers == 4);

  // The derived chain parameters carry the unit conversions.
  const bht::ChainParams p = c.chain_params();
  REQUIRE(p.n_sites == 3);
  REQUIRE(p.omega[0] == Catch::Approx(bht::ghz_to_rad_us(4.0)).margin(1e-12));
  REQUIRE(p.J == Catch::Approx(bht::mhz_to_rad_us(37.5)).margin(1e-12));
  REQUIRE(p.gamma_phi == std::vector<double>{0.1, 0.2, 0.3});
}

TEST_CASE("all violations are reported together") {
  nlohmann::json doc = {{"chain", {{"J_MHz", -1.0}}},
                        {"basis", {{"per_site_cap", 0}}},
                        {"workers", 0},
                        {"disorder", {{"engine", "magic"}}}};
  try {
    bht::parse_config(doc);
    FAIL("expected ConfigError");
  } catch (const bht::ConfigError& e) {
    REQUIRE(e.violations().size() == 4);
    const std::string what = e.what();
    REQUIRE(what.find("J_MHz") != std::string::npos);
    REQUIRE(what.find("per_site_cap") != std::string::npos);
    REQUIRE(what.find("workers") != std::string::npos);
    REQUIRE(what.find("engine") != std::string::npos);
  }

  // Type errors accumulate with range errors.
  nlohmann::json typed = {{"chain", {{"J_MHz", "fast"}}}, {"workers", 0}};
  try {
    bht::parse_config(typed);
    FAIL("expected ConfigError");
  } catch (const bht::ConfigError& e) {
    REQUIRE(e.violations().size() == 2);
  }
}

TEST_CASE("cell formatting is deterministic") {
  REQUIRE(bht::csv_format(1.5) == "1.5");
  REQUIRE(bht::csv_format(-0.25) == "-0.25");
  REQUIRE(bht::csv_format(std::nan("")) == "nan");
  REQUIRE(bht::csv_format(HUGE_VAL) == "inf");
  REQUIRE(bht::csv_format(-HUGE_VAL) == "-inf");

  const fs::path dir = make_clean_dir("csv");
  {
    bht::CsvWriter w(dir / "golden.csv", {"a", "b", "c"});
    w.row(1, 2.5, "x");
    w.row(-3, std::nan(""), std::string("y"));
  }
  REQUIRE(read_file(dir / "golden.csv") == "a,b,c\n1,2.5,x\n-3,nan,y\n");
}

TEST_CASE("identical runs write identical bytes") {
  bht::RunConfig cfg;
  cfg.linear.n_points = 401;
  const fs::path a = make_clean_dir("golden_a");
  const fs::path b = make_clean_dir("golden_b");
  bht::cmd_linear(cfg, a);
  bht::cmd_linear(cfg, b);
  REQUIRE(read_file(a / "linear.csv") == read_file(b / "linear.csv"));
  REQUIRE(read_file(a / "peaks.csv") == read_file(b / "peaks.csv"));
  REQUIRE(read_file(a / "linear.csv").size() > 1000);
}

TEST_CASE("default-model peaks sit on the single-photon band") {
  bht::RunConfig cfg;
  const fs::path dir = make_clean_dir("peaks");
  bht::cmd_linear(cfg, dir);

  const std::vector<std::vector<std::string>> rows = read_csv(dir / "peaks.csv");
  REQUIRE(rows.size() == 6);  // header + five peaks
  REQUIRE(rows[0] ==
          std::vector<std::string>{"center_omega_d_GHz", "fwhm_MHz", "height_abs"});

  const double j_ghz = 41.0 / 1000.0;
  const std::vector<double> expected = {3.9 - std::sqrt(3.0) * j_ghz, 3.9 - j_ghz, 3.9,
                                        3.9 + j_ghz, 3.9 + std::sqrt(3.0) * j_ghz};
  for (int k = 0; k < 5; ++k) {
    const double center = std::stod(rows[k + 1][0]);
    const double height = std::stod(rows[k + 1][2]);
    REQUIRE(std::abs(center - expected[k]) < 0.5e-3);  // within 0.5 MHz
    REQUIRE(height > 0.0);
    REQUIRE(height <= 1.001);
  }
}

TEST_CASE("the tool reports its version and rejects bad invocations") {
  REQUIRE(run_cli("--version") == 0);
  REQUIRE(run_cli("") != 0);                        // missing subcommand
  REQUIRE(run_cli("linear") != 0);                  // missing --config
  REQUIRE(run_cli("linear --config /nonexistent.json") != 0);
}

TEST_CASE("linear mode end to end") {
  const fs::path dir = make_clean_dir("e2e_linear");
  REQUIRE(run_cli("linear --config " + config("small.json") + " --out " + dir.string()) == 0);
  REQUIRE(fs::exists(dir / "linear.csv"));
  REQUIRE(fs::exists(dir / "peaks.csv"));
  REQUIRE(read_csv(dir / "linear.csv").size() == 402);  // header + n_points
}

TEST_CASE("sweep mode end to end and worker independence") {
  const fs::path one = make_clean_dir("e2e_sweep1");
  const fs::path two = make_clean_dir("e2e_sweep2");
  REQUIRE(run_cli("sweep --config " + config("small.json") + " --out " + one.string() +
                  " --workers 1") == 0);
  REQUIRE(run_cli("sweep --config " + config("small.json") + " --out " + two.string() +
                  " --workers 2") == 0);

  const std::vector<std::vector<std::string>> rows = read_csv(one / "spectrum.csv");
  REQUIRE(rows.size() == 4);  // header + 3 omega_d x 1 Omega
  REQUIRE(rows[0] == std::vector<std::string>{"omega_d_GHz", "Omega_MHz", "re_S21", "im_S21",
                                              "abs_S21", "residual"});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const double abs_s21 = std::stod(rows[r][4]);
    REQUIRE(abs_s21 > 0.0);
    REQUIRE(abs_s21 <= 1.0 + 1e-6);
  }
  REQUIRE(fs::exists(one / "lines.csv"));
  REQUIRE(read_file(one / "spectrum.csv") == read_file(two / "spectrum.csv"));
}

TEST_CASE("levels mode end to end") {
  const fs::path dir = make_clean_dir("e2e_levels");
  REQUIRE(run_cli("levels --config " + config("small.json") + " --out " + dir.string()) == 0);
  for (const char* name : {"levels.csv", "lines.csv", "spacings.csv", "projections.csv"})
    REQUIRE(fs::exists(dir / name));
  REQUIRE(read_csv(dir / "levels.csv").size() == 22);  // header + 21 levels
  const std::vector<std::vector<std::string>> spacings = read_csv(dir / "spacings.csv");
  REQUIRE(spacings.size() == 2);  // header + sector 2
  REQUIRE(spacings[1][0] == "2");
  REQUIRE(spacings[1][1] == "15");
}

TEST_CASE("disorder mode end to end: zero sigma repeats the clean curve") {
  const fs::path dir = make_clean_dir("e2e_disorder");
  REQUIRE(run_cli("disorder --config " + config("small.json") + " --out " + dir.string()) == 0);
  for (const char* name : {"averaged.csv", "prominences.csv", "histograms.csv"})
    REQUIRE(fs::exists(dir / name));

  const std::string r0 = read_file(dir / "disorder_s0_r000.csv");
  REQUIRE(r0 == read_file(dir / "disorder_s0_r001.csv"));
  REQUIRE(r0 == read_file(dir / "disorder_s0_r002.csv"));
  REQUIRE(read_csv(dir / "averaged.csv").size() == 16);  // header + 15 grid points

  const std::vector<std::vector<std::string>> hist = read_csv(dir / "histograms.csv");
  REQUIRE(hist.size() == 1 + bht::kProminenceBins);
  int total = 0;
  for (std::size_t r = 1; r < hist.size(); ++r) total += std::stoi(hist[r][3]);
  REQUIRE(total == 3);
}

TEST_CASE("a broken config produces a machine-readable error") {
  const fs::path dir = make_clean_dir("bad_config");
  const fs::path cfg = dir / "bad.json";
  std::ofstream(cfg) << R"({"chain": {"J_MHz": -1.0}, "workers": 0})";

  const fs::path errfile = dir / "stderr.txt";
  REQUIRE(run_cli("linear --config " + cfg.string() + " --out " + dir.string(), errfile) != 0);
  const std::string err = read_file(errfile);
  REQUIRE(err.find("\"error\"") != std::string::npos);
  REQUIRE(err.find("violations") != std::string::npos);
  REQUIRE(err.find("J_MHz") != std::string::npos);
  REQUIRE(err.find("workers") != std::string::npos);
}
