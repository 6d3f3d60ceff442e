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
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bht/errors.hpp"
#include "bht/params.hpp"

// Closed-form and semiclassical transmission models: the coherent (Langevin)
// steady state, its closed form for a degenerate chain, single-excitation
// dressed modes with saturable Maxwell-Bloch response, and the perturbative
// series for a pair of driven three-level sites.

namespace bht {

using cplx = std::complex<double>;

// Coherent steady state of the daggered Langevin system at an absolute drive
// frequency: A x = -sqrt(gamma_1) e_1 with A_kk = i(omega_k - omega_d) -
// gamma_k/2 and A_{k,k+-1} = iJ; the transmission is sqrt(gamma_N) x_N.
inline cplx linear_s21_at(const ChainParams& p, double omega_d) {
  p.validate();
  const int n = p.n_sites;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    a(k, k) = cplx(-0.5 * p.gamma[k], p.omega[k] - omega_d);
    if (k + 1 < n) {
      a(k, k + 1) = cplx(0.0, p.J);
      a(k + 1, k) = cplx(0.0, p.J);
    }
  }
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(n);
  rhs[0] = -std::sqrt(p.gamma.front());
  const Eigen::VectorXcd x = a.partialPivLu().solve(rhs);
  return std::sqrt(p.gamma.back()) * x[n - 1];
}

// Same, parameterised by the detuning of the drive from the mean site
// frequency.
inline cplx linear_s21(const ChainParams& p, double delta) {
  return linear_s21_at(p, mean_omega(p) + delta);
}

// Closed form of linear_s21 for five degenerate sites with equal edge decay
// Gamma and lossless bulk, delta = omega_d - omega.
inline cplx degenerate_closed_form(double delta, double J, double Gamma) {
  const cplx i(0.0, 1.0);
  const double d = delta;
  const cplx den = (i * d * Gamma + 2.0 * d * d - 2.0 * J * J) *
                   (i * d * d * Gamma - 2.0 * i * J * J * Gamma + 2.0 * d * d * d -
                    6.0 * d * J * J);
  if (std::abs(den) == 0.0)
    throw SingularSystem("degenerate closed form evaluated at a pole");
  return std::conj(4.0 * i * J * J * J * J * Gamma / den);
}

// Single-excitation band of an open chain of odd length N:
//   E_m - omega = 2 J sin(pi m / (N + 1)),   m = 0, +-1, ..., +-(N-1)/2.
inline double dispersion(int n_sites, int m, double J) {
  if (n_sites < 1 || n_sites % 2 == 0)
    throw InvalidArgument("dispersion: defined for odd chain lengths only");
  if (2 * std::abs(m) > n_sites)
    throw InvalidArgument("dispersion: mode index out of band");
  return 2.0 * J * std::sin(kTwoPi / 2.0 * m / (n_sites + 1));
}

// ---------------------------------------------------------------------------
// Lorentzian peak extraction.  1/|S21|^2 is locally quadratic around a
// transmission peak; a least-squares parabola gives center, FWHM and height.

struct PeakFit {
  double delta0 = 0.0;
  double fwhm = 0.0;    // full width at half maximum of |S21|^2
  double height = 0.0;  // |S21| at the fitted center
  bool converged = false;
};

// One peak, refined iteratively on windows of +-3 half-widths.
inline PeakFit fit_peak(const std::function<double(double)>& abs_s21, double center,
                        double halfwidth, int n_points = 61, int n_iter = 3) {
  if (!(halfwidth > 0.0)) throw InvalidArgument("fit_peak: halfwidth must be positive");
  if (n_points < 5) throw InvalidArgument("fit_peak: need at least 5 window points");
  PeakFit out;
  double c = center, w = halfwidth;
  for (int it = 0; it < n_iter; ++it) {
    // Window-relative coordinates u in [-3, 3] keep the normal equations well
    // conditioned no matter how far from zero the peak sits.
    Eigen::MatrixXd vand(n_points, 3);
    Eigen::VectorXd y(n_points);
    for (int k = 0; k < n_points; ++k) {
      const double u = -3.0 + 6.0 * k / (n_points - 1);
      const double s = abs_s21(c + u * w);
      if (!(s > 0.0) || !std::isfinite(s)) return out;  // not a peak
      vand(k, 0) = u * u;
      vand(k, 1) = u;
      vand(k, 2) = 1.0;
      y[k] = 1.0 / (s * s);
    }
    const Eigen::Vector3d coef = vand.colPivHouseholderQr().solve(y);
    const double c2 = coef[0], c1 = coef[1], c0 = coef[2];
    if (!(c2 > 0.0)) return out;  // concave: no minimum of 1/|S21|^2
    const double u0 = -c1 / (2.0 * c2);
    const double qmin = c0 - c1 * c1 / (4.0 * c2);
    c += u0 * w;
    w *= std::sqrt(std::max(qmin / c2, 1e-30));
    out.delta0 = c;
    out.fwhm = 2.0 * w;
    out.height = qmin > 0.0 ? 1.0 / std::sqrt(qmin) : abs_s21(c);
  }
  out.converged = true;
  return out;
}

// Coarse scan for local maxima of |S21|, each refined with fit_peak.  The
// initial half-width comes from the half-maximum crossings on the scan grid.
inline std::vector<PeakFit> locate_peaks(const std::function<double(double)>& abs_s21, double lo,
                                         double hi, int n_coarse = 4001) {
  if (!(hi > lo)) throw InvalidArgument("locate_peaks: empty interval");
  if (n_coarse < 3) throw InvalidArgument("locate_peaks: need at least 3 scan points");
  const double step = (hi - lo) / (n_coarse - 1);
  std::vector<double> s(n_coarse);
  for (int k = 0; k < n_coarse; ++k) s[k] = abs_s21(lo + step * k);

  std::vector<PeakFit> peaks;
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int k = 1; k + 1 < n_coarse; ++k) {
    if (!(s[k] > s[k - 1] && s[k] > s[k + 1])) continue;
    // The coarse samples bracket the maximum; pin it down by golden section
    // first, since a narrow line can peak well off the nearest sample.
    double a = lo + step * (k - 1), b = lo + step * (k + 1);
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = abs_s21(x1), f2 = abs_s21(x2);
    while (b - a > 1e-12 * std::max(1.0, std::abs(a) + std::abs(b))) {
      if (f1 > f2) {
        b = x2, x2 = x1, f2 = f1;
        x1 = b - invphi * (b - a), f1 = abs_s21(x1);
      } else {
        a = x1, x1 = x2, f1 = f2;
        x2 = a + invphi * (b - a), f2 = abs_s21(x2);
      }
    }
    const double c0 = 0.5 * (a + b);
    const double half = abs_s21(c0) / std::sqrt(2.0);  // half max of |S21|^2
    // Half-max crossings of the continuous curve keep the width seed
    // proportionate even when the line is far narrower than the scan step.
    const auto half_crossing = [&](double dir) {
      double inner = 0.0, outer = step / 8.0;
      while (abs_s21(c0 + dir * outer) > half && outer < hi - lo) {
        inner = outer;
        outer *= 2.0;
      }
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (inner + outer);
        (abs_s21(c0 + dir * mid) > half ? inner : outer) = mid;
      }
      return 0.5 * (inner + outer);
    };
    const double hw = 0.5 * (half_crossing(1.0) + half_crossing(-1.0));
    const PeakFit fit = fit_peak(abs_s21, c0, std::max(hw, 1e-12 * std::max(1.0, std::abs(c0))));
    if (fit.converged) peaks.push_back(fit);
  }
  return peaks;
}

// Fitted widths of the five transmission peaks of the degenerate chain,
// ordered by center detuning.
inline std::array<PeakFit, 5> degenerate_peak_widths(double J, double Gamma) {
  const std::array<double, 5> centers = {-std::sqrt(3.0) * J, -J, 0.0, J, std::sqrt(3.0) * J};
  const std::array<double, 5> widths = {Gamma / 6.0, Gamma / 2.0, 2.0 * Gamma / 3.0, Gamma / 2.0,
                                        Gamma / 6.0};
  auto f = [&](double d) { return std::abs(degenerate_closed_form(d, J, Gamma)); };
  std::array<PeakFit, 5> out;
  for (int k = 0; k < 5; ++k) out[k] = fit_peak(f, centers[k], widths[k] / 2.0);
  return out;
}

// ---------------------------------------------------------------------------
// Single-excitation dressed modes of the five-site chain with edge decay.

struct DressedMode {
  int index = 0;                      // 1..5
  double energy = 0.0;                // E_n - omega
  std::array<double, 5> amplitudes;   // site weights of the mode
  double rate = 0.0;                  // decay rate Gamma_n
  double drive = 0.0;                 // input coupling Omega_n
};

inline std::array<DressedMode, 5> dressed_modes(double J, double Gamma, double Omega) {
  const double r3 = std::sqrt(3.0);
  std::array<DressedMode, 5> m;
  m[0] = {1, -r3 * J, {1 / (2 * r3), -0.5, 1 / r3, -0.5, 1 / (2 * r3)}, Gamma / 6, Omega / (2 * r3)};
  m[1] = {2, -J, {0.5, -0.5, 0.0, 0.5, -0.5}, Gamma / 2, Omega / 2};
  m[2] = {3, 0.0, {1 / r3, 0.0, -1 / r3, 0.0, 1 / r3}, 2 * Gamma / 3, Omega / r3};
  m[3] = {4, J, {0.5, 0.5, 0.0, -0.5, -0.5}, Gamma / 2, Omega / 2};
  m[4] = {5, r3 * J, {1 / (2 * r3), 0.5, 1 / r3, 0.5, 1 / (2 * r3)}, Gamma / 6, Omega / (2 * r3)};
  return m;
}

// Saturable response of the five dressed modes; delta_omega = omega - omega_d.
// Each term carries its series sign (+, -, +, -, +), so the transmission is
// the plain sum of the five.
inline std::array<cplx, 5> maxwell_bloch_terms(double delta_omega, double J, double Gamma,
                                               double Omega) {
  const cplx i(0.0, 1.0);
  const std::array<DressedMode, 5> modes = dressed_modes(J, Gamma, Omega);
  const std::array<double, 5> sign = {1.0, -1.0, 1.0, -1.0, 1.0};
  std::array<cplx, 5> out;
  for (int n = 0; n < 5; ++n) {
    const double det = delta_omega + modes[n].energy;  // zero on resonance
    const double gn = modes[n].rate;
    const cplx line = gn / (i * det + gn);
    const double sat = 1.0 + 0.5 * (Omega * Omega * gn) / (det * det + gn * gn);
    out[n] = sign[n] * line / sat;
  }
  return out;
}

inline cplx maxwell_bloch_s21(double delta_omega, double J, double Gamma, double Omega) {
  const std::array<cplx, 5> t = maxwell_bloch_terms(delta_omega, J, Gamma, Omega);
  cplx acc(0.0, 0.0);
  for (const cplx& v : t) acc += v;
  return acc;
}

// ---------------------------------------------------------------------------
// Perturbative transmission of two identical three-level sites, expanded in
// the drive amplitude; delta = omega_d - omega.  Returns the first- and
// third-order terms.
inline std::pair<cplx, cplx> two_qutrit_series(double delta, double Omega, double J, double Gamma,
                                               double alpha) {
  const cplx i(0.0, 1.0);
  const double d = delta, a = alpha, g = Gamma;

  const cplx gm = g - 4.0 * i * d;  // Gamma - 4 i delta
  const cplx gp = g + 4.0 * i * d;
  const cplx q1 = 16.0 * J * J + gm * gm;
  if (std::abs(q1) == 0.0) throw SingularSystem("two_qutrit_series: first-order pole");
  const cplx p1 = -16.0 * Omega * J / q1;

  const cplx q2 = 2.0 * a - i * g - 4.0 * d;
  const cplx q3 = 16.0 * J * J + gp * gp;
  const cplx q4 = 16.0 * J * J + gm * (2.0 * i * a + gm);
  if (std::abs(q2) == 0.0 || std::abs(q3) == 0.0 || std::abs(q4) == 0.0)
    throw SingularSystem("two_qutrit_series: third-order pole");
  const cplx p3 = -4096.0 * Omega * Omega * Omega * J * J * J * (a - i * g - 4.0 * d) /
                  (q2 * q1 * q3 * q4);
  return {p1, p3};
}

// Excitation-number blocks of the two-site, three-level Hamiltonian in the
// rotating frame, n = 1..4.
inline Eigen::MatrixXd two_qutrit_sector_matrix(int n, double delta, double J, double alpha) {
  const double d = delta, a = alpha;
  const double r2 = std::sqrt(2.0);
  switch (n) {
    case 1: {
      Eigen::MatrixXd h(2, 2);
      h << -d, J, J, -d;
      return h;
    }
    case 2: {
      Eigen::MatrixXd h(3, 3);
      h << a - 2 * d, r2 * J, 0.0, r2 * J, -2 * d, r2 * J, 0.0, r2 * J, a - 2 * d;
      return h;
    }
    case 3: {
      Eigen::MatrixXd h(2, 2);
      h << a - 3 * d, 2 * J, 2 * J, a - 3 * d;
      return h;
    }
    case 4: {
      Eigen::MatrixXd h(1, 1);
      h << 2 * a - 4 * d;
      return h;
    }
    default:
      throw InvalidArgument("two_qutrit_sector_matrix: sector must be 1..4");
  }
}

// Detunings at which an n-photon transition to each sector level is resonant
// (zeros of the sector eigenvalues as functions of delta), sorted ascending.
inline std::map<int, std::vector<double>> two_qutrit_sector_resonances(double J, double alpha) {
  const double a = alpha;
  const double disc = std::sqrt(16.0 * J * J + a * a);
  std::map<int, std::vector<double>> out;
  out[1] = {-J, J};
  out[2] = {(a - disc) / 4.0, a / 2.0, (a + disc) / 4.0};
  out[3] = {(a - 2.0 * J) / 3.0, (a + 2.0 * J) / 3.0};
  out[4] = {a / 2.0};
  for (auto& [n, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace bht
