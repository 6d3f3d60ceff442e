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

#include "bht/params.hpp"

namespace testutil {

// Device parameters as extracted from the transmission fits.
inline bht::ChainParams fitted_params() {
  bht::ChainParams p;
  p.n_sites = 5;
  for (double w : {3.898, 3.898, 3.900, 3.901, 3.901}) p.omega.push_back(bht::ghz_to_rad_us(w));
  for (double a : {-188.0, -178.0, -178.0, -178.0, -188.0})
    p.alpha.push_back(bht::mhz_to_rad_us(a));
  p.J = bht::mhz_to_rad_us(41.0);
  p.gamma = {16.0, 6.0, 0.1, 3.0, 16.0};
  p.gamma_phi = {0.0, 0.0, 0.0, 0.0, 0.0};
  p.omega_d = bht::ghz_to_rad_us(3.9);
  return p;
}

// Uniform target values: every site at 3.9 GHz with alpha/2pi = -181 MHz.
inline bht::ChainParams ideal_params() {
  bht::ChainParams p = fitted_params();
  for (double& w : p.omega) w = bht::ghz_to_rad_us(3.9);
  for (double& a : p.alpha) a = bht::mhz_to_rad_us(-181.0);
  return p;
}

// Degenerate five-site chain with decay on the edges only; the configuration
// behind the closed-form transmission.
inline bht::ChainParams degenerate_params(double J, double Gamma) {
  bht::ChainParams p;
  p.n_sites = 5;
  p.omega.assign(5, bht::ghz_to_rad_us(3.9));
  p.alpha.assign(5, bht::mhz_to_rad_us(-181.0));
  p.J = J;
  p.gamma = {Gamma, 0.0, 0.0, 0.0, Gamma};
  p.gamma_phi.assign(5, 0.0);
  p.omega_d = bht::ghz_to_rad_us(3.9);
  return p;
}

}  // namespace testutil
