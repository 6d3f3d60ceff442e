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

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bht/commands.hpp"
#include "bht/version.hpp"

namespace {

// Errors leave on stderr as a single JSON object so callers can parse them.
int fail(const std::string& kind, const std::string& message,
         const std::vector<std::string>& violations = {}) {
  nlohmann::json err;
  err["error"] = kind;
  err["message"] = message;
  if (!violations.empty()) err["violations"] = violations;
  std::fprintf(stderr, "%s\n", err.dump().c_str());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state photon transport through a driven-dissipative "
               "Bose-Hubbard chain"};
  app.set_version_flag("--version", std::string(bht::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  int workers = 0;     // 0: keep the config value
  long long seed = -1; // <0: keep the config value

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Path to the JSON run configuration")
        ->required();
    cmd->add_option("--out", out_dir, "Output directory (default: out)");
    cmd->add_option("--workers", workers, "Override the worker count");
    cmd->add_option("--seed", seed, "Override the RNG seed");
  };

  CLI::App* linear = app.add_subcommand("linear", "Coherent-model transmission and peak fits");
  CLI::App* sweep = app.add_subcommand("sweep", "Quantum transmission map over (omega_d, Omega)");
  CLI::App* levels = app.add_subcommand("levels", "Sector spectra, lines, spacing statistics");
  CLI::App* disorder = app.add_subcommand("disorder", "Frequency-disorder ensembles");
  for (CLI::App* cmd : {linear, sweep, levels, disorder}) add_common(cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    bht::RunConfig cfg = bht::load_config(config_path);
    if (workers > 0) cfg.workers = workers;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);

    if (linear->parsed()) bht::cmd_linear(cfg, out_dir);
    if (sweep->parsed()) bht::cmd_sweep(cfg, out_dir);
    if (levels->parsed()) bht::cmd_levels(cfg, out_dir);
    if (disorder->parsed()) bht::cmd_disorder(cfg, out_dir);
    return 0;
  } catch (const bht::ConfigError& e) {
    return fail("config", e.what(), e.violations());
  } catch (const bht::InvalidArgument& e) {
    return fail("invalid-argument", e.what());
  } catch (const bht::SingularSystem& e) {
    return fail("solver", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}
