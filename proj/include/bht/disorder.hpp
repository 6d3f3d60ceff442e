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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "bht/linear_analytics.hpp"
#include "bht/rng.hpp"
#include "bht/spectroscopy.hpp"
#include "bht/workers.hpp"

// Gaussian frequency disorder: ensemble-averaged transmission and the
// distribution of the brightest-peak prominence over realizations.

namespace bht {

struct DisorderSpec {
  double base_omega = 0.0;  // common target frequency, rad/us
  double sigma_mhz = 0.0;   // ordinary-frequency standard deviation
  int n_realizations = 1;
  std::uint64_t seed = 0;

  void validate() const {
    std::vector<std::string> bad;
    if (!(sigma_mhz >= 0.0)) bad.push_back("sigma must be nonnegative");
    if (n_realizations < 1) bad.push_back("n_realizations must be at least 1");
    if (!bad.empty()) throw ConfigError(bad);
  }
};

// Realization k of the disordered chain: every site frequency is redrawn as
// base_omega + N(0, 2 pi sigma).  A pure function of (seed, k, site), so the
// ensemble does not depend on evaluation order.
inline ChainParams sample_realization(const DisorderSpec& spec, const ChainParams& base, int k) {
  spec.validate();
  if (k < 0 || k >= spec.n_realizations)
    throw InvalidArgument("sample_realization: realization index out of range");
  ChainParams p = base;
  for (int i = 0; i < p.n_sites; ++i)
    p.omega[i] = spec.base_omega +
                 mhz_to_rad_us(spec.sigma_mhz) * counter_normal(spec.seed, k, i);
  return p;
}

enum class DisorderEngine { Linear, Quantum };

struct EnsembleOptions {
  DisorderEngine engine = DisorderEngine::Linear;
  const FockBasis* basis = nullptr;  // required by the quantum engine
  SteadyStateOptions solver;
  int workers = 1;
};

struct EnsembleResult {
  std::vector<double> delta;                    // drive detuning grid, rad/us
  std::vector<std::vector<double>> curves_abs;  // |S21| per realization; empty if failed
  std::vector<cplx> averaged;                   // complex mean over successful realizations
  std::vector<double> mean_abs;                 // mean of magnitudes (non-canonical statistic)
  int n_failed = 0;
  std::vector<std::string> errors;              // one entry per failed realization
};

// Transmission of every realization on a common detuning grid (drive at
// base_omega + delta), averaged in the complex plane.  A realization whose
// solve fails anywhere is recorded and left out of both averages.
inline EnsembleResult ensemble_transmission(const DisorderSpec& spec, const ChainParams& base,
                                            const std::vector<double>& delta,
                                            const EnsembleOptions& opts = {}) {
  spec.validate();
  base.validate();
  if (delta.empty()) throw InvalidArgument("ensemble_transmission: empty detuning grid");
  if (opts.engine == DisorderEngine::Quantum && opts.basis == nullptr)
    throw InvalidArgument("ensemble_transmission: quantum engine requires a basis");

  const std::size_t n_grid = delta.size();
  const int n_real = spec.n_realizations;
  std::vector<std::vector<cplx>> curves(n_real);
  std::vector<std::string> errors(n_real);

  parallel_for(n_real, opts.workers, [&](std::size_t k) {
    try {
      ChainParams p = sample_realization(spec, base, static_cast<int>(k));
      std::vector<cplx> curve(n_grid);
      for (std::size_t i = 0; i < n_grid; ++i) {
        const double omega_d = spec.base_omega + delta[i];
        if (opts.engine == DisorderEngine::Linear) {
          curve[i] = linear_s21_at(p, omega_d);
        } else {
          p.omega_d = omega_d;
          curve[i] = s21_point(p, *opts.basis, opts.solver);
        }
      }
      curves[k] = std::move(curve);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  });

  EnsembleResult out;
  out.delta = delta;
  out.curves_abs.resize(n_real);
  out.averaged.assign(n_grid, cplx(0.0, 0.0));
  out.mean_abs.assign(n_grid, 0.0);
  int n_ok = 0;
  for (int k = 0; k < n_real; ++k) {
    if (curves[k].empty()) {
      ++out.n_failed;
      out.errors.push_back("realization " + std::to_string(k) + ": " + errors[k]);
      continue;
    }
    ++n_ok;
    out.curves_abs[k].resize(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i) {
      out.averaged[i] += curves[k][i];
      out.mean_abs[i] += std::abs(curves[k][i]);
      out.curves_abs[k][i] = std::abs(curves[k][i]);
    }
  }
  if (n_ok == 0) throw SingularSystem("ensemble_transmission: every realization failed");
  for (std::size_t i = 0; i < n_grid; ++i) {
    out.averaged[i] /= static_cast<double>(n_ok);
    out.mean_abs[i] /= static_cast<double>(n_ok);
    if (std::abs(out.averaged[i]) > out.mean_abs[i] + 1e-12)
      throw SingularSystem("ensemble_transmission: averaging invariant violated");
  }
  return out;
}

// Mean of the 10 grid points centered on the curve maximum; the window is
// shifted inward at the edges so it always covers 10 points.
inline double brightest_peak_prominence(const std::vector<double>& curve) {
  if (curve.size() < 10)
    throw InvalidArgument("brightest_peak_prominence: need at least 10 points");
  const std::size_t imax =
      std::max_element(curve.begin(), curve.end()) - curve.begin();
  const std::size_t lo =
      std::min(imax > 5 ? imax - 5 : 0, curve.size() - 10);
  double acc = 0.0;
  for (std::size_t i = lo; i < lo + 10; ++i) acc += curve[i];
  return acc / 10.0;
}

inline constexpr int kProminenceBins = 20;
inline constexpr double kProminenceMax = 1.05;  // |S21| histograms share [0, 1.05]

struct ProminenceSummary {
  std::vector<double> samples;  // one per successful realization
  double median = 0.0;
  std::vector<int> histogram;   // kProminenceBins equal bins on [0, kProminenceMax]
};

inline ProminenceSummary prominence_summary(const EnsembleResult& ens) {
  ProminenceSummary out;
  for (const std::vector<double>& c : ens.curves_abs)
    if (!c.empty()) out.samples.push_back(brightest_peak_prominence(c));
  if (out.samples.empty())
    throw InvalidArgument("prominence_summary: no successful realizations");

  std::vector<double> sorted = out.samples;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  out.median = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

  out.histogram.assign(kProminenceBins, 0);
  for (double s : out.samples) {
    int bin = static_cast<int>(s / kProminenceMax * kProminenceBins);
    bin = std::clamp(bin, 0, kProminenceBins - 1);
    ++out.histogram[bin];
  }
  return out;
}

// Disorder-strength scan: one ensemble per sigma value, each reduced to its
// prominence distribution.
inline std::vector<ProminenceSummary> prominence_distribution(
    const std::vector<DisorderSpec>& specs, const ChainParams& base,
    const std::vector<double>& delta, const EnsembleOptions& opts = {}) {
  std::vector<ProminenceSummary> out;
  out.reserve(specs.size());
  for (const DisorderSpec& spec : specs)
    out.push_back(prominence_summary(ensemble_transmission(spec, base, delta, opts)));
  return out;
}

}  // namespace bht
