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

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "bht/sylvester_gmres.hpp"
#include "bht/workers.hpp"

namespace bht {

struct SweepGrid {
  std::vector<double> omega_d;  // drive frequencies, rad/us
  std::vector<double> Omega;    // drive amplitudes, rad/us

  void validate() const {
    std::vector<std::string> bad;
    if (omega_d.empty()) bad.push_back("omega_d grid is empty");
    if (Omega.empty()) bad.push_back("Omega grid is empty");
    for (std::size_t i = 1; i < omega_d.size(); ++i)
      if (!(omega_d[i] > omega_d[i - 1])) {
        bad.push_back("omega_d grid is not strictly increasing");
        break;
      }
    for (std::size_t i = 1; i < Omega.size(); ++i)
      if (!(Omega[i] > Omega[i - 1])) {
        bad.push_back("Omega grid is not strictly increasing");
        break;
      }
    if (!bad.empty()) throw ConfigError(bad);
  }
};

struct SpectrumRow {
  double omega_d = 0.0;
  double Omega = 0.0;
  cplx s21{std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
  double residual = std::numeric_limits<double>::quiet_NaN();
  double seconds = 0.0;
  std::string method;
  bool ok = false;
  std::string error;
};

struct SpectrumTable {
  std::size_t n_omega_d = 0;
  std::size_t n_Omega = 0;
  std::vector<SpectrumRow> rows;  // Omega-major: rows[iO * n_omega_d + iw]
};

// Transmission at one grid point,
//   S21 = 2 sqrt(gamma_1 gamma_N) <b_N^dag> / (i Omega),
// from the steady state of the full master equation.
inline cplx s21_point(const ChainParams& p, const FockBasis& basis,
                      const SteadyStateOptions& opts = {},
                      SteadyStateReport* report = nullptr) {
  p.validate();
  std::vector<std::string> bad;
  if (p.Omega == 0.0) bad.push_back("transmission requires a nonzero drive amplitude Omega");
  if (p.gamma.front() <= 0.0) bad.push_back("transmission requires gamma > 0 on the input site");
  if (p.gamma.back() <= 0.0) bad.push_back("transmission requires gamma > 0 on the output site");
  if (!bad.empty()) throw ConfigError(bad);

  const SparseOperator h = build_hamiltonian(p, basis);
  const std::vector<SparseOperator> cops = collapse_ops(p, basis);
  const DensityMatrix rho = steady_state(h, cops, opts, report);

  const cplx b_out = std::conj(expectation(rho, lowering_op(basis, p.n_sites)));
  const double coupling = 2.0 * std::sqrt(p.gamma.front() * p.gamma.back());
  return coupling * b_out / (cplx(0.0, 1.0) * p.Omega);
}

using SweepProgress = std::function<void(std::size_t done, std::size_t total)>;

// Full drive-frequency x drive-amplitude map.  Every cell lands in its own
// preallocated slot, so results are independent of the worker count; a cell
// that fails is recorded as NaN with the error.
inline SpectrumTable sweep(const ChainParams& base, const FockBasis& basis, const SweepGrid& grid,
                           const SteadyStateOptions& opts = {}, int workers = 1,
                           const SweepProgress& progress = nullptr) {
  base.validate();
  grid.validate();

  SpectrumTable table;
  table.n_omega_d = grid.omega_d.size();
  table.n_Omega = grid.Omega.size();
  table.rows.resize(table.n_omega_d * table.n_Omega);

  std::mutex progress_mu;
  std::size_t done = 0;
  const std::size_t total = table.rows.size();

  parallel_for(total, workers, [&](std::size_t idx) {
    const std::size_t iO = idx / table.n_omega_d;
    const std::size_t iw = idx % table.n_omega_d;
    SpectrumRow& row = table.rows[idx];
    row.omega_d = grid.omega_d[iw];
    row.Omega = grid.Omega[iO];

    ChainParams p = base;
    p.omega_d = row.omega_d;
    p.Omega = row.Omega;
    try {
      SteadyStateReport rep;
      row.s21 = s21_point(p, basis, opts, &rep);
      row.residual = rep.residual_inf;
      row.seconds = rep.seconds;
      row.method = rep.method;
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    if (progress) {
      std::lock_guard<std::mutex> lock(progress_mu);
      progress(++done, total);
    }
  });
  return table;
}

}  // namespace bht
