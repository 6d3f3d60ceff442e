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

#include <chrono>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "bht/liouvillian.hpp"

// Steady-state solver for large Hilbert spaces.  The singular system
// L rho = 0, tr rho = 1 is recast as the regular system
//
//   (L + tr(.) M) rho = M,        M = I / dim,
//
// whose unique solution is the steady state: M has unit trace and therefore
// lies outside range(L), which forces tr rho = 1 and L rho = 0.  The system
// is solved by GMRES, left-preconditioned with the inverse of the
// non-Hermitian Sylvester map
//
//   S(rho) = -i (H_eff rho - rho H_eff^dag),   H_eff = H - (i/2) sum O^dag O,
//
// which is the full Liouvillian minus the quantum-jump terms.  S is inverted
// exactly through the eigendecomposition H_eff = V Lambda V^{-1}.

namespace bht {

class SylvesterPreconditioner {
 public:
  SylvesterPreconditioner(const SparseOperator& h, const std::vector<SparseOperator>& cops)
      : dim_(h.dim) {
    Eigen::MatrixXcd heff = h.dense();
    for (const SparseOperator& op : cops) {
      if (op.dim != dim_)
        throw InvalidArgument("SylvesterPreconditioner: operator dimension mismatch");
      heff -= cplx(0.0, 0.5) * (op.mat.adjoint() * op.mat);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(heff);
    if (es.info() != Eigen::Success)
      throw SingularSystem("eigendecomposition of the effective Hamiltonian failed");
    v_ = es.eigenvectors();
    vinv_ = v_.inverse();
    const Eigen::VectorXcd& lam = es.eigenvalues();

    const double floor = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());
    inv_denom_.resize(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        const cplx d = lam[i] - std::conj(lam[j]);
        if (std::abs(d) < floor)
          throw SingularSystem("effective Hamiltonian has an undamped eigenvalue pair; "
                               "Sylvester preconditioner is singular");
        inv_denom_(i, j) = cplx(0.0, 1.0) / d;
      }
  }

  // Y = S^{-1}(X) = V [ (V^{-1} X V^{-dag}) .* i/(lam_i - conj(lam_j)) ] V^dag
  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& x) const {
    Eigen::MatrixXcd xt = vinv_ * x * vinv_.adjoint();
    xt.array() *= inv_denom_.array();
    return v_ * xt * v_.adjoint();
  }

  Eigen::VectorXcd apply_vec(const Eigen::VectorXcd& x) const {
    Eigen::Map<const Eigen::MatrixXcd> xm(x.data(), dim_, dim_);
    Eigen::MatrixXcd y = apply(xm);
    return Eigen::Map<Eigen::VectorXcd>(y.data(), y.size());
  }

  int dim() const { return dim_; }

 private:
  int dim_;
  Eigen::MatrixXcd v_, vinv_, inv_denom_;
};

namespace detail {

struct GmresResult {
  Eigen::VectorXcd x;
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

// Restarted GMRES with modified Gram-Schmidt and Givens rotations.
inline GmresResult gmres(const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& apply,
                         const Eigen::VectorXcd& b, double tol, int restart, int max_outer) {
  const long n = b.size();
  const double bnorm = b.norm();
  GmresResult out;
  out.x = Eigen::VectorXcd::Zero(n);
  if (bnorm == 0.0) {
    out.converged = true;
    return out;
  }

  Eigen::MatrixXcd basis(n, restart + 1);
  Eigen::MatrixXcd hess = Eigen::MatrixXcd::Zero(restart + 1, restart);
  Eigen::VectorXd cs(restart);
  Eigen::VectorXcd sn(restart), g(restart + 1);

  for (int outer = 0; outer < max_outer; ++outer) {
    Eigen::VectorXcd r = b - apply(out.x);
    ++out.iterations;
    const double beta = r.norm();
    out.rel_residual = beta / bnorm;
    if (out.rel_residual < tol) {
      out.converged = true;
      return out;
    }
    basis.col(0) = r / beta;
    g.setZero();
    g[0] = beta;

    int k = 0;
    for (; k < restart; ++k) {
      Eigen::VectorXcd w = apply(basis.col(k));
      ++out.iterations;
      for (int i = 0; i <= k; ++i) {
        hess(i, k) = basis.col(i).dot(w);
        w -= hess(i, k) * basis.col(i);
      }
      const double hnext = w.norm();
      const bool happy = hnext < 1e-300;
      if (!happy) basis.col(k + 1) = w / hnext;
      hess(k + 1, k) = hnext;

      for (int i = 0; i < k; ++i) {
        const cplx t = cs[i] * hess(i, k) + sn[i] * hess(i + 1, k);
        hess(i + 1, k) = -std::conj(sn[i]) * hess(i, k) + cs[i] * hess(i + 1, k);
        hess(i, k) = t;
      }
      const double ha = std::abs(hess(k, k));
      const double hb = std::abs(hess(k + 1, k));
      const double denom = std::hypot(ha, hb);
      if (denom == 0.0) {
        cs[k] = 1.0;
        sn[k] = cplx(0.0, 0.0);
      } else if (ha == 0.0) {
        cs[k] = 0.0;
        sn[k] = std::conj(hess(k + 1, k)) / hb;
      } else {
        cs[k] = ha / denom;
        sn[k] = (hess(k, k) / ha) * std::conj(hess(k + 1, k)) / denom;
      }
      hess(k, k) = cs[k] * hess(k, k) + sn[k] * hess(k + 1, k);
      hess(k + 1, k) = cplx(0.0, 0.0);
      g[k + 1] = -std::conj(sn[k]) * g[k];
      g[k] *= cs[k];

      out.rel_residual = std::abs(g[k + 1]) / bnorm;
      if (out.rel_residual < tol || happy || k == restart - 1) {
        ++k;
        break;
      }
    }

    // Back substitution on the k x k triangular system.
    Eigen::VectorXcd y(k);
    for (int i = k - 1; i >= 0; --i) {
      cplx s = g[i];
      for (int j = i + 1; j < k; ++j) s -= hess(i, j) * y[j];
      y[i] = s / hess(i, i);
    }
    out.x += basis.leftCols(k) * y;

    if (out.rel_residual < tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace detail

inline DensityMatrix steady_state_gmres(const LiouvillianMatrix& l, const SparseOperator& h,
                                        const std::vector<SparseOperator>& cops,
                                        const SteadyStateOptions& opts = {},
                                        SteadyStateReport* report = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  const int dim = l.dim;
  const long n = static_cast<long>(dim) * dim;
  const SylvesterPreconditioner pre(h, cops);
  const double w = 1.0 / dim;

  auto apply = [&](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd av = l.mat * v;
    cplx tr(0.0, 0.0);
    for (int k = 0; k < dim; ++k) tr += v[static_cast<long>(k) * (dim + 1)];
    for (int k = 0; k < dim; ++k) av[static_cast<long>(k) * (dim + 1)] += tr * w;
    return pre.apply_vec(av);
  };
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
  for (int k = 0; k < dim; ++k) b[static_cast<long>(k) * (dim + 1)] = w;
  b = pre.apply_vec(b);

  detail::GmresResult res =
      detail::gmres(apply, b, 1e-10, opts.gmres_restart, opts.gmres_max_outer);
  if (!res.converged)
    throw SingularSystem("preconditioned GMRES stalled at relative residual " +
                         std::to_string(res.rel_residual));

  DensityMatrix rho = detail::finish_steady_state(l, std::move(res.x), opts, report);
  if (report) {
    report->method = "sylvester-gmres";
    report->gmres_iterations = res.iterations;
    report->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return rho;
}

// Build the Liouvillian for (h, cops) and solve for its steady state.  Small
// problems go to the direct solver; large ones use preconditioned GMRES with
// a direct fallback if the iteration fails to reach the residual tolerance.
inline DensityMatrix steady_state(const SparseOperator& h,
                                  const std::vector<SparseOperator>& cops,
                                  const SteadyStateOptions& opts = {},
                                  SteadyStateReport* report = nullptr) {
  const LiouvillianMatrix l = build_liouvillian(h, cops);
  switch (opts.method) {
    case SteadyStateMethod::DirectLU:
      return steady_state_direct(l, opts, report);
    case SteadyStateMethod::PreconditionedGmres:
      return steady_state_gmres(l, h, cops, opts, report);
    case SteadyStateMethod::Auto:
    default:
      if (l.dim <= 64) return steady_state_direct(l, opts, report);
      try {
        return steady_state_gmres(l, h, cops, opts, report);
      } catch (const SingularSystem&) {
        return steady_state_direct(l, opts, report);
      }
  }
}

}  // namespace bht
