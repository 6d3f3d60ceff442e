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
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bht/errors.hpp"
#include "bht/fock_basis.hpp"
#include "bht/hamiltonian.hpp"
#include "bht/params.hpp"

// Excitation-number-resolved spectra of the undriven chain: multiphoton
// transition frequencies, eigenstate decompositions and nearest-neighbor
// level-spacing statistics.

namespace bht {

struct SectorLevels {
  int sector = 0;
  int basis_offset = 0;        // index of the sector's first Fock state
  Eigen::VectorXd energies;    // ascending, relative to the global ground energy
  Eigen::MatrixXd vectors;     // columns match energies
};

struct EigenSpectrum {
  double ground_energy = 0.0;
  std::vector<SectorLevels> sectors;
};

// Diagonalises each excitation-number block of the undriven Hamiltonian.
// The drive term breaks number conservation, so Omega must be zero; the
// frequencies are taken in the frame set by p.omega_d (use zero for absolute
// energies).
inline EigenSpectrum sector_eigensolve(const ChainParams& p, const FockBasis& basis) {
  if (p.Omega != 0.0)
    throw InvalidArgument("sector_eigensolve: spectrum is block-diagonal only without a drive");
  const SparseOperator h = build_hamiltonian(p, basis);
  const Eigen::MatrixXcd dense = h.dense();

  EigenSpectrum spec;
  double ground = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= basis.total_cap; ++n) {
    const int begin = basis.sector_begin[n];
    const int size = basis.sector_begin[n + 1] - begin;
    if (size == 0) continue;
    SectorLevels lev;
    lev.sector = n;
    lev.basis_offset = begin;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense.block(begin, begin, size, size).real());
    if (es.info() != Eigen::Success)
      throw SingularSystem("sector eigensolve failed to converge");
    lev.energies = es.eigenvalues();
    lev.vectors = es.eigenvectors();
    ground = std::min(ground, lev.energies.minCoeff());
    spec.sectors.push_back(std::move(lev));
  }
  spec.ground_energy = ground;
  for (SectorLevels& lev : spec.sectors) lev.energies.array() -= ground;
  return spec;
}

struct MultiphotonLine {
  int n_photons = 0;
  double omega = 0.0;  // drive frequency of the n-photon transition
};

// n-photon transitions from the ground state: a level at energy E above the
// ground is reached by driving at omega_ref + E/n.
inline std::vector<MultiphotonLine> multiphoton_lines(const EigenSpectrum& spec, int max_n,
                                                      double omega_ref = 0.0) {
  std::vector<MultiphotonLine> lines;
  for (const SectorLevels& lev : spec.sectors) {
    if (lev.sector < 1 || lev.sector > max_n) continue;
    for (int k = 0; k < lev.energies.size(); ++k)
      lines.push_back({lev.sector, omega_ref + lev.energies[k] / lev.sector});
  }
  std::sort(lines.begin(), lines.end(), [](const MultiphotonLine& a, const MultiphotonLine& b) {
    return a.n_photons != b.n_photons ? a.n_photons < b.n_photons : a.omega < b.omega;
  });
  return lines;
}

struct StateRef {
  int sector = 0;
  int index_in_sector = 0;
  double energy = 0.0;
};

// All eigenstates ordered by energy (ground first).
inline std::vector<StateRef> energy_ordered_states(const EigenSpectrum& spec) {
  std::vector<StateRef> states;
  for (const SectorLevels& lev : spec.sectors)
    for (int k = 0; k < lev.energies.size(); ++k)
      states.push_back({lev.sector, k, lev.energies[k]});
  std::stable_sort(states.begin(), states.end(), [](const StateRef& a, const StateRef& b) {
    return a.energy != b.energy ? a.energy < b.energy
                                : (a.sector != b.sector ? a.sector < b.sector
                                                        : a.index_in_sector < b.index_in_sector);
  });
  return states;
}

struct Projection {
  int global_index = 0;
  int sector = 0;
  double energy = 0.0;
  std::vector<std::pair<int, double>> components;  // (Fock state index, amplitude)
};

// Decomposition of the global_index-th eigenstate (by energy) over the Fock
// basis, components sorted by decreasing weight.
inline Projection eigenstate_projection(const EigenSpectrum& spec, const FockBasis& basis,
                                        int global_index, int max_components = 0) {
  const std::vector<StateRef> states = energy_ordered_states(spec);
  if (global_index < 0 || global_index >= static_cast<int>(states.size()))
    throw InvalidArgument("eigenstate_projection: state index out of range");
  const StateRef& ref = states[global_index];

  const SectorLevels* lev = nullptr;
  for (const SectorLevels& l : spec.sectors)
    if (l.sector == ref.sector) lev = &l;
  Projection out;
  out.global_index = global_index;
  out.sector = ref.sector;
  out.energy = ref.energy;
  for (int r = 0; r < lev->vectors.rows(); ++r)
    out.components.emplace_back(lev->basis_offset + r, lev->vectors(r, ref.index_in_sector));
  std::stable_sort(out.components.begin(), out.components.end(),
                   [](const auto& a, const auto& b) {
                     return std::abs(a.second) > std::abs(b.second);
                   });
  if (max_components > 0 && static_cast<int>(out.components.size()) > max_components)
    out.components.resize(max_components);
  (void)basis;
  return out;
}

// ---------------------------------------------------------------------------
// Nearest-neighbor spacing statistics.

inline double wigner_dyson_cdf(double s) {
  return s <= 0.0 ? 0.0 : 1.0 - std::exp(-kTwoPi / 8.0 * s * s);  // 1 - exp(-pi s^2/4)
}

inline double poisson_cdf(double s) { return s <= 0.0 ? 0.0 : 1.0 - std::exp(-s); }

// Kolmogorov-Smirnov distance between a sample and a reference CDF.
inline double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw InvalidArgument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::max(f - i / n, (i + 1) / n - f));
  }
  return d;
}

struct SpacingStats {
  std::vector<double> spacings;  // normalised to unit mean
  double ks_wigner_dyson = 0.0;
  double ks_poisson = 0.0;
};

// Mean-normalised nearest-neighbor spacings of an ascending energy list and
// their KS distances to the Wigner-Dyson and Poisson surmises.
inline SpacingStats spacing_stats(const std::vector<double>& energies) {
  if (energies.size() < 3)
    throw InvalidArgument("spacing_stats: need at least three levels");
  std::vector<double> sp(energies.size() - 1);
  double mean = 0.0;
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    sp[i] = energies[i + 1] - energies[i];
    if (sp[i] < 0.0) throw InvalidArgument("spacing_stats: energies must be ascending");
    mean += sp[i];
  }
  mean /= sp.size();
  if (!(mean > 0.0)) throw InvalidArgument("spacing_stats: degenerate spectrum");
  for (double& s : sp) s /= mean;

  SpacingStats out;
  out.spacings = sp;
  out.ks_wigner_dyson = ks_distance(sp, wigner_dyson_cdf);
  out.ks_poisson = ks_distance(sp, poisson_cdf);
  return out;
}

inline SpacingStats level_spacing_stats(const EigenSpectrum& spec, int sector) {
  for (const SectorLevels& lev : spec.sectors)
    if (lev.sector == sector) {
      std::vector<double> e(lev.energies.data(), lev.energies.data() + lev.energies.size());
      return spacing_stats(e);
    }
  throw InvalidArgument("level_spacing_stats: no such sector");
}

// Splits an ascending energy list into clusters separated by gaps larger than
// gap_factor times the median spacing.
inline std::vector<std::vector<double>> split_bands(const std::vector<double>& energies,
                                                    double gap_factor = 3.0) {
  if (energies.empty()) return {};
  if (energies.size() == 1) return {energies};
  std::vector<double> sp(energies.size() - 1);
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) sp[i] = energies[i + 1] - energies[i];
  std::vector<double> sorted = sp;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double median = sorted[sorted.size() / 2];

  std::vector<std::vector<double>> bands(1);
  bands.back().push_back(energies[0]);
  for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
    if (sp[i] > gap_factor * median) bands.emplace_back();
    bands.back().push_back(energies[i + 1]);
  }
  return bands;
}

// The band with the highest level density (count over energy span) among
// those with at least min_levels levels.
inline std::vector<double> densest_band(const std::vector<double>& energies,
                                        double gap_factor = 3.0, int min_levels = 10) {
  const std::vector<std::vector<double>> bands = split_bands(energies, gap_factor);
  const std::vector<double>* best = nullptr;
  double best_density = -1.0;
  for (const std::vector<double>& band : bands) {
    if (static_cast<int>(band.size()) < min_levels) continue;
    const double width = band.back() - band.front();
    if (!(width > 0.0)) continue;
    const double density = band.size() / width;
    if (density > best_density) {
      best_density = density;
      best = &band;
    }
  }
  if (!best)
    throw InvalidArgument("densest_band: no band with the required number of levels");
  return *best;
}

}  // namespace bht
