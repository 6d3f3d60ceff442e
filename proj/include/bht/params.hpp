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

#include <cstddef>
#include <string>
#include <vector>

#include "bht/errors.hpp"

namespace bht {

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Internal unit system: angular frequencies in rad/us, rates in 1/us, time in
// us. Laboratory values (GHz / MHz / us^-1) are converted once at the config
// boundary and never mixed with internal quantities.
inline double ghz_to_rad_us(double f_ghz) { return kTwoPi * 1.0e3 * f_ghz; }
inline double mhz_to_rad_us(double f_mhz) { return kTwoPi * f_mhz; }
inline double rad_us_to_ghz(double w) { return w / (kTwoPi * 1.0e3); }
inline double rad_us_to_mhz(double w) { return w / kTwoPi; }

// All physical parameters of the driven-dissipative chain. The coherent drive
// acts on site 1 and the output field is read from site n_sites; a mirrored
// device is described by reversing the per-site arrays.
struct ChainParams {
  int n_sites = 0;
  std::vector<double> omega;      // site frequency, rad/us
  std::vector<double> alpha;      // on-site interaction (anharmonicity), rad/us
  double J = 0.0;                 // nearest-neighbour tunnelling, rad/us
  double Omega = 0.0;             // drive amplitude on site 1, rad/us
  double omega_d = 0.0;           // drive frequency, rad/us
  std::vector<double> gamma;      // relaxation rate per site, 1/us
  std::vector<double> gamma_phi;  // pure dephasing rate per site, 1/us

  void validate() const {
    std::vector<std::string> bad;
    if (n_sites < 1) bad.push_back("n_sites must be >= 1");
    auto need = [&](const std::vector<double>& v, const char* name) {
      if (static_cast<int>(v.size()) != n_sites)
        bad.push_back(std::string(name) + " must have n_sites entries");
    };
    need(omega, "omega");
    need(alpha, "alpha");
    need(gamma, "gamma");
    need(gamma_phi, "gamma_phi");
    for (double g : gamma)
      if (g < 0.0) bad.push_back("gamma entries must be >= 0");
    for (double g : gamma_phi)
      if (g < 0.0) bad.push_back("gamma_phi entries must be >= 0");
    if (!bad.empty()) throw ConfigError(std::move(bad));
  }
};

inline double mean_omega(const ChainParams& p) {
  double s = 0.0;
  for (double w : p.omega) s += w;
  return s / static_cast<double>(p.n_sites);
}

}  // namespace bht
