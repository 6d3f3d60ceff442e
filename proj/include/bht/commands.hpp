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

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "bht/config.hpp"
#include "bht/csv.hpp"
#include "bht/disorder.hpp"
#include "bht/eigenanalysis.hpp"
#include "bht/linear_analytics.hpp"
#include "bht/spectroscopy.hpp"

// The four run modes behind the command-line tool.  Data goes only to CSV
// files under the output directory; progress and warnings go to stderr.

namespace bht {
namespace detail {

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = n == 1 ? lo : lo + (hi - lo) * k / (n - 1);
  return v;
}

inline std::string occupation_label(const Occupation& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(s[i]);
  }
  return out;
}

inline void note(const std::string& msg) { std::fprintf(stderr, "%s\n", msg.c_str()); }

}  // namespace detail

// Coherent-model transmission curve and its fitted peaks.
inline void cmd_linear(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const ChainParams p = cfg.chain_params();
  const double center = mean_omega(p);
  const double span = cfg.linear.delta_span_J * p.J;

  CsvWriter curve(out_dir / "linear.csv", {"omega_d_GHz", "re_S21", "im_S21", "abs_S21"});
  for (double d : detail::linspace(-span, span, cfg.linear.n_points)) {
    const cplx s = linear_s21(p, d);
    curve.row(rad_us_to_ghz(center + d), s.real(), s.imag(), std::abs(s));
  }

  CsvWriter peaks(out_dir / "peaks.csv", {"center_omega_d_GHz", "fwhm_MHz", "height_abs"});
  auto abs_s21 = [&](double d) { return std::abs(linear_s21(p, d)); };
  for (const PeakFit& f : locate_peaks(abs_s21, -span, span))
    peaks.row(rad_us_to_ghz(center + f.delta0), rad_us_to_mhz(f.fwhm), f.height);
  detail::note("linear: wrote linear.csv, peaks.csv");
}

// Quantum steady-state transmission map over drive frequency and amplitude,
// with the multiphoton transition frequencies alongside.
inline void cmd_sweep(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const ChainParams p = cfg.chain_params();
  const FockBasis basis = build_basis(p.n_sites, cfg.per_site_cap, cfg.total_cap);

  SweepGrid grid;
  grid.omega_d = detail::linspace(ghz_to_rad_us(cfg.sweep.omega_d_ghz_min),
                                  ghz_to_rad_us(cfg.sweep.omega_d_ghz_max), cfg.sweep.n_omega_d);
  for (double o : cfg.sweep.omega_mhz_values) grid.Omega.push_back(mhz_to_rad_us(o));

  const SpectrumTable table =
      sweep(p, basis, grid, SteadyStateOptions{}, cfg.workers,
            [](std::size_t done, std::size_t total) {
              std::fprintf(stderr, "\rsweep: %zu/%zu", done, total);
              if (done == total) std::fprintf(stderr, "\n");
            });

  CsvWriter out(out_dir / "spectrum.csv",
                {"omega_d_GHz", "Omega_MHz", "re_S21", "im_S21", "abs_S21", "residual"});
  for (const SpectrumRow& row : table.rows) {
    out.row(rad_us_to_ghz(row.omega_d), rad_us_to_mhz(row.Omega), row.s21.real(), row.s21.imag(),
            std::abs(row.s21), row.residual);
    if (!row.ok)
      detail::note("sweep: cell omega_d=" + std::to_string(rad_us_to_ghz(row.omega_d)) +
                   " GHz failed: " + row.error);
  }

  ChainParams undriven = p;
  undriven.Omega = 0.0;
  undriven.omega_d = 0.0;
  const EigenSpectrum spec = sector_eigensolve(undriven, basis);
  CsvWriter lines(out_dir / "lines.csv", {"n_photons", "omega_d_GHz"});
  for (const MultiphotonLine& l : multiphoton_lines(spec, cfg.levels.max_photons))
    lines.row(l.n_photons, rad_us_to_ghz(l.omega));
  detail::note("sweep: wrote spectrum.csv, lines.csv");
}

// Sector spectra, transition lines, spacing statistics, and eigenstate
// decompositions of the undriven chain.
inline void cmd_levels(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  ChainParams p = cfg.chain_params();
  p.Omega = 0.0;
  p.omega_d = 0.0;
  const FockBasis basis = build_basis(p.n_sites, cfg.per_site_cap, cfg.total_cap);
  const EigenSpectrum spec = sector_eigensolve(p, basis);

  CsvWriter levels(out_dir / "levels.csv", {"sector", "index", "E_over_2pi_GHz"});
  for (const SectorLevels& lev : spec.sectors)
    for (int k = 0; k < lev.energies.size(); ++k)
      levels.row(lev.sector, k, rad_us_to_ghz(lev.energies[k]));

  CsvWriter lines(out_dir / "lines.csv", {"n_photons", "omega_d_GHz"});
  for (const MultiphotonLine& l : multiphoton_lines(spec, cfg.levels.max_photons))
    lines.row(l.n_photons, rad_us_to_ghz(l.omega));

  CsvWriter spacings(out_dir / "spacings.csv",
                     {"sector", "n_levels", "ks_wigner_dyson", "ks_poisson"});
  for (int sector : cfg.levels.spacing_sectors) {
    try {
      const SpacingStats st = level_spacing_stats(spec, sector);
      spacings.row(sector, static_cast<int>(st.spacings.size()) + 1, st.ks_wigner_dyson,
                   st.ks_poisson);
    } catch (const std::exception& e) {
      detail::note("levels: spacing statistics skipped for sector " + std::to_string(sector) +
                   ": " + e.what());
    }
  }

  CsvWriter proj(out_dir / "projections.csv",
                 {"global_index", "sector", "E_over_2pi_GHz", "fock_index", "occupation",
                  "amplitude"});
  for (int idx : cfg.levels.projections) {
    try {
      const Projection pr = eigenstate_projection(spec, basis, idx, 16);
      for (const auto& [fock, amp] : pr.components)
        proj.row(pr.global_index, pr.sector, rad_us_to_ghz(pr.energy), fock,
                 detail::occupation_label(basis.states[fock]), amp);
    } catch (const std::exception& e) {
      detail::note("levels: projection skipped for state " + std::to_string(idx) + ": " +
                   e.what());
    }
  }
  detail::note("levels: wrote levels.csv, lines.csv, spacings.csv, projections.csv");
}

// Disorder ensembles per sigma: every realization's curve, the averaged
// curves, and the brightest-peak prominence samples and histograms.
inline void cmd_disorder(const RunConfig& cfg, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const ChainParams base = cfg.chain_params();
  const FockBasis basis = build_basis(base.n_sites, cfg.per_site_cap, cfg.total_cap);

  EnsembleOptions opts;
  opts.engine =
      cfg.disorder.engine == "quantum" ? DisorderEngine::Quantum : DisorderEngine::Linear;
  opts.basis = &basis;
  opts.workers = cfg.workers;

  const double span = cfg.disorder.delta_span_J * base.J;
  const std::vector<double> delta = detail::linspace(-span, span, cfg.disorder.n_points);
  const double base_omega = mean_omega(base);

  CsvWriter avg(out_dir / "averaged.csv",
                {"sigma_MHz", "omega_d_GHz", "re_avg_S21", "im_avg_S21", "abs_avg_S21",
                 "mean_abs_S21"});
  CsvWriter prom(out_dir / "prominences.csv", {"sigma_MHz", "realization", "prominence"});
  CsvWriter hist(out_dir / "histograms.csv", {"sigma_MHz", "bin_lo", "bin_hi", "count"});

  for (std::size_t si = 0; si < cfg.disorder.sigma_mhz.size(); ++si) {
    const double sigma = cfg.disorder.sigma_mhz[si];
    DisorderSpec spec;
    spec.base_omega = base_omega;
    spec.sigma_mhz = sigma;
    spec.n_realizations = cfg.disorder.n_realizations;
    spec.seed = cfg.seed;

    std::fprintf(stderr, "disorder: sigma=%g MHz (%zu/%zu)\n", sigma, si + 1,
                 cfg.disorder.sigma_mhz.size());
    const EnsembleResult ens = ensemble_transmission(spec, base, delta, opts);
    for (const std::string& e : ens.errors) detail::note("disorder: " + e);

    for (int k = 0; k < spec.n_realizations; ++k) {
      if (ens.curves_abs[k].empty()) continue;
      char name[64];
      std::snprintf(name, sizeof(name), "disorder_s%zu_r%03d.csv", si, k);
      CsvWriter real(out_dir / name, {"omega_d_GHz", "abs_S21"});
      for (std::size_t i = 0; i < delta.size(); ++i)
        real.row(rad_us_to_ghz(base_omega + delta[i]), ens.curves_abs[k][i]);
      prom.row(sigma, k, brightest_peak_prominence(ens.curves_abs[k]));
    }

    for (std::size_t i = 0; i < delta.size(); ++i)
      avg.row(sigma, rad_us_to_ghz(base_omega + delta[i]), ens.averaged[i].real(),
              ens.averaged[i].imag(), std::abs(ens.averaged[i]), ens.mean_abs[i]);

    const ProminenceSummary summary = prominence_summary(ens);
    for (int b = 0; b < kProminenceBins; ++b)
      hist.row(sigma, kProminenceMax * b / kProminenceBins,
               kProminenceMax * (b + 1) / kProminenceBins, summary.histogram[b]);
  }
  detail::note("disorder: wrote averaged.csv, prominences.csv, histograms.csv, "
               "per-realization curves");
}

}  // namespace bht
