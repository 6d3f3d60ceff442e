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

#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bht/errors.hpp"
#include "bht/params.hpp"

// Run configuration in laboratory units (GHz / MHz / 1/us), read from a
// single JSON document.  Parsing collects every violation before failing so
// a bad file is reported in one pass.

namespace bht {

struct LinearSection {
  double delta_span_J = 2.5;  // half-span of the detuning grid, units of J
  int n_points = 1001;
};

struct SweepSection {
  double omega_d_ghz_min = 3.85;
  double omega_d_ghz_max = 3.95;
  int n_omega_d = 61;
  std::vector<double> omega_mhz_values = {2.0, 8.0, 32.0};  // drive amplitudes
};

struct LevelsSection {
  int max_photons = 4;
  std::vector<int> projections = {0, 1, 11, 20, 116, 119};
  std::vector<int> spacing_sectors = {3, 4};
};

struct DisorderSection {
  std::vector<double> sigma_mhz = {4.1, 20.5, 41.0, 82.0};
  int n_realizations = 100;
  double delta_span_J = 3.0;
  int n_points = 501;
  std::string engine = "linear";  // "linear" or "quantum"
};

struct RunConfig {
  std::vector<double> omega_ghz = {3.9, 3.9, 3.9, 3.9, 3.9};
  std::vector<double> alpha_mhz = {-188.0, -178.0, -178.0, -178.0, -188.0};
  double j_mhz = 41.0;
  std::vector<double> gamma_per_us = {16.0, 6.0, 0.1, 3.0, 16.0};
  std::vector<double> gamma_phi_per_us;  // defaults to zero
  double omega_mhz = 0.5;                // drive amplitude Omega
  double omega_d_ghz = 3.9;

  int per_site_cap = 3;
  int total_cap = 4;

  LinearSection linear;
  SweepSection sweep;
  LevelsSection levels;
  DisorderSection disorder;

  std::uint64_t seed = 1;
  int workers = 1;

  ChainParams chain_params() const {
    ChainParams p;
    p.n_sites = static_cast<int>(omega_ghz.size());
    for (double w : omega_ghz) p.omega.push_back(ghz_to_rad_us(w));
    for (double a : alpha_mhz) p.alpha.push_back(mhz_to_rad_us(a));
    p.J = mhz_to_rad_us(j_mhz);
    p.Omega = mhz_to_rad_us(omega_mhz);
    p.omega_d = ghz_to_rad_us(omega_d_ghz);
    p.gamma = gamma_per_us;
    p.gamma_phi = gamma_phi_per_us.empty() ? std::vector<double>(p.n_sites, 0.0)
                                           : gamma_phi_per_us;
    p.validate();
    return p;
  }
};

namespace detail {

// Accumulating typed readers; a missing key keeps the default.
struct ConfigReader {
  const nlohmann::json& j;
  std::string where;
  std::vector<std::string>& errs;

  bool has(const char* key) const { return j.is_object() && j.contains(key); }

  void number(const char* key, double& out) {
    if (!has(key)) return;
    if (!j[key].is_number()) {
      errs.push_back(where + key + ": expected a number");
      return;
    }
    out = j[key].get<double>();
  }

  void integer(const char* key, int& out) {
    if (!has(key)) return;
    if (!j[key].is_number_integer()) {
      errs.push_back(where + key + ": expected an integer");
      return;
    }
    out = j[key].get<int>();
  }

  void uint64(const char* key, std::uint64_t& out) {
    if (!has(key)) return;
    if (!j[key].is_number_unsigned() && !j[key].is_number_integer()) {
      errs.push_back(where + key + ": expected an integer");
      return;
    }
    out = j[key].get<std::uint64_t>();
  }

  void text(const char* key, std::string& out) {
    if (!has(key)) return;
    if (!j[key].is_string()) {
      errs.push_back(where + key + ": expected a string");
      return;
    }
    out = j[key].get<std::string>();
  }

  void number_array(const char* key, std::vector<double>& out) {
    if (!has(key)) return;
    if (!j[key].is_array()) {
      errs.push_back(where + key + ": expected an array of numbers");
      return;
    }
    std::vector<double> v;
    for (const auto& e : j[key]) {
      if (!e.is_number()) {
        errs.push_back(where + key + ": expected an array of numbers");
        return;
      }
      v.push_back(e.get<double>());
    }
    out = std::move(v);
  }

  void integer_array(const char* key, std::vector<int>& out) {
    if (!has(key)) return;
    if (!j[key].is_array()) {
      errs.push_back(where + key + ": expected an array of integers");
      return;
    }
    std::vector<int> v;
    for (const auto& e : j[key]) {
      if (!e.is_number_integer()) {
        errs.push_back(where + key + ": expected an array of integers");
        return;
      }
      v.push_back(e.get<int>());
    }
    out = std::move(v);
  }
};

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& doc) {
  std::vector<std::string> errs;
  if (!doc.is_object()) throw ConfigError({"config root must be a JSON object"});
  RunConfig c;

  static const nlohmann::json empty = nlohmann::json::object();
  auto section = [&](const char* name) -> const nlohmann::json& {
    if (!doc.contains(name)) return empty;
    if (!doc[name].is_object()) {
      errs.push_back(std::string(name) + ": expected an object");
      return empty;
    }
    return doc[name];
  };

  detail::ConfigReader chain{section("chain"), "chain.", errs};
  chain.number_array("omega_GHz", c.omega_ghz);
  chain.number_array("alpha_MHz", c.alpha_mhz);
  chain.number("J_MHz", c.j_mhz);
  chain.number_array("gamma_per_us", c.gamma_per_us);
  chain.number_array("gamma_phi_per_us", c.gamma_phi_per_us);
  chain.number("Omega_MHz", c.omega_mhz);
  chain.number("omega_d_GHz", c.omega_d_ghz);

  detail::ConfigReader basis{section("basis"), "basis.", errs};
  basis.integer("per_site_cap", c.per_site_cap);
  basis.integer("total_cap", c.total_cap);

  detail::ConfigReader lin{section("linear"), "linear.", errs};
  lin.number("delta_span_J", c.linear.delta_span_J);
  lin.integer("n_points", c.linear.n_points);

  detail::ConfigReader sw{section("sweep"), "sweep.", errs};
  sw.number("omega_d_GHz_min", c.sweep.omega_d_ghz_min);
  sw.number("omega_d_GHz_max", c.sweep.omega_d_ghz_max);
  sw.integer("n_omega_d", c.sweep.n_omega_d);
  sw.number_array("Omega_MHz_values", c.sweep.omega_mhz_values);

  detail::ConfigReader lv{section("levels"), "levels.", errs};
  lv.integer("max_photons", c.levels.max_photons);
  lv.integer_array("projections", c.levels.projections);
  lv.integer_array("spacing_sectors", c.levels.spacing_sectors);

  detail::ConfigReader dis{section("disorder"), "disorder.", errs};
  dis.number_array("sigma_MHz", c.disorder.sigma_mhz);
  dis.integer("n_realizations", c.disorder.n_realizations);
  dis.number("delta_span_J", c.disorder.delta_span_J);
  dis.integer("n_points", c.disorder.n_points);
  dis.text("engine", c.disorder.engine);

  detail::ConfigReader top{doc, "", errs};
  top.uint64("seed", c.seed);
  top.integer("workers", c.workers);

  // Semantic checks on whatever parsed; sizes must agree with the site count.
  const std::size_t n = c.omega_ghz.size();
  if (n < 2) errs.push_back("chain.omega_GHz: need at least two sites");
  if (c.alpha_mhz.size() != n) errs.push_back("chain.alpha_MHz: size differs from omega_GHz");
  if (c.gamma_per_us.size() != n)
    errs.push_back("chain.gamma_per_us: size differs from omega_GHz");
  if (!c.gamma_phi_per_us.empty() && c.gamma_phi_per_us.size() != n)
    errs.push_back("chain.gamma_phi_per_us: size differs from omega_GHz");
  for (double g : c.gamma_per_us)
    if (g < 0.0) {
      errs.push_back("chain.gamma_per_us: rates must be nonnegative");
      break;
    }
  for (double g : c.gamma_phi_per_us)
    if (g < 0.0) {
      errs.push_back("chain.gamma_phi_per_us: rates must be nonnegative");
      break;
    }
  if (c.j_mhz < 0.0) errs.push_back("chain.J_MHz: must be nonnegative");
  if (c.per_site_cap < 1) errs.push_back("basis.per_site_cap: must be at least 1");
  if (c.total_cap < 1) errs.push_back("basis.total_cap: must be at least 1");
  if (c.linear.n_points < 1) errs.push_back("linear.n_points: must be at least 1");
  if (!(c.linear.delta_span_J > 0.0)) errs.push_back("linear.delta_span_J: must be positive");
  if (c.sweep.n_omega_d < 1) errs.push_back("sweep.n_omega_d: must be at least 1");
  if (c.sweep.omega_d_ghz_max < c.sweep.omega_d_ghz_min)
    errs.push_back("sweep.omega_d_GHz_max: must not be below omega_d_GHz_min");
  if (c.sweep.n_omega_d > 1 && !(c.sweep.omega_d_ghz_max > c.sweep.omega_d_ghz_min))
    errs.push_back("sweep.omega_d_GHz_max: grid with several points needs a positive span");
  if (c.sweep.omega_mhz_values.empty())
    errs.push_back("sweep.Omega_MHz_values: need at least one amplitude");
  for (double o : c.sweep.omega_mhz_values)
    if (!(o > 0.0)) {
      errs.push_back("sweep.Omega_MHz_values: amplitudes must be positive");
      break;
    }
  for (std::size_t i = 1; i < c.sweep.omega_mhz_values.size(); ++i)
    if (!(c.sweep.omega_mhz_values[i] > c.sweep.omega_mhz_values[i - 1])) {
      errs.push_back("sweep.Omega_MHz_values: must be strictly increasing");
      break;
    }
  if (c.levels.max_photons < 1) errs.push_back("levels.max_photons: must be at least 1");
  if (c.disorder.sigma_mhz.empty()) errs.push_back("disorder.sigma_MHz: need at least one value");
  for (double s : c.disorder.sigma_mhz)
    if (s < 0.0) {
      errs.push_back("disorder.sigma_MHz: must be nonnegative");
      break;
    }
  if (c.disorder.n_realizations < 1)
    errs.push_back("disorder.n_realizations: must be at least 1");
  if (c.disorder.n_points < 10) errs.push_back("disorder.n_points: need at least 10 grid points");
  if (c.disorder.engine != "linear" && c.disorder.engine != "quantum")
    errs.push_back("disorder.engine: must be \"linear\" or \"quantum\"");
  if (c.workers < 1) errs.push_back("workers: must be at least 1");

  if (!errs.empty()) throw ConfigError(errs);
  return c;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file: " + path});
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError({std::string("config is not valid JSON: ") + e.what()});
  }
  return parse_config(doc);
}

}  // namespace bht
