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
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/KroneckerProduct>

#include "bht/density_matrix.hpp"
#include "bht/errors.hpp"
#include "bht/fock_basis.hpp"
#include "bht/hamiltonian.hpp"
#include "bht/params.hpp"
#include "bht/sparse_operator.hpp"

namespace bht {

// Collapse operators of the master equation: sqrt(gamma_i) b_i for each site
// with nonzero photon loss, sqrt(gamma_phi_i) n_i for nonzero pure dephasing.
inline std::vector<SparseOperator> collapse_ops(const ChainParams& p, const FockBasis& basis) {
  p.validate();
  if (basis.n_sites != p.n_sites)
    throw InvalidArgument("collapse_ops: basis and parameters disagree on site count");
  std::vector<SparseOperator> ops;
  for (int i = 1; i <= p.n_sites; ++i) {
    if (p.gamma[i - 1] > 0.0) {
      SparseOperator op = lowering_op(basis, i);
      op.mat *= std::sqrt(p.gamma[i - 1]);
      ops.push_back(std::move(op));
    }
  }
  for (int i = 1; i <= p.n_sites; ++i) {
    const double gphi = p.gamma_phi.empty() ? 0.0 : p.gamma_phi[i - 1];
    if (gphi > 0.0) {
      SparseOperator op = number_op(basis, i);
      op.mat *= std::sqrt(gphi);
      ops.push_back(std::move(op));
    }
  }
  return ops;
}

struct LiouvillianMatrix {
  int dim = 0;           // Hilbert-space dimension; mat is dim^2 x dim^2
  SpMat mat;
  double scale = 0.0;    // max |entry|, used to normalise residual tolerances
};

// Matrix of the generator acting on column-major vec(rho):
//   L = -i (I (x) H - H^T (x) I)
//     + sum_k [ conj(O_k) (x) O_k
//               - 1/2 I (x) (O_k^dag O_k) - 1/2 (O_k^dag O_k)^T (x) I ].
inline LiouvillianMatrix build_liouvillian(const SparseOperator& h,
                                           const std::vector<SparseOperator>& cops) {
  const int dim = h.dim;
  SpMat eye(dim, dim);
  eye.setIdentity();

  const cplx mi(0.0, -1.0);
  SpMat ht = h.mat.transpose();
  SpMat l = mi * (Eigen::kroneckerProduct(eye, h.mat).eval() -
                  Eigen::kroneckerProduct(ht, eye).eval());
  for (const SparseOperator& op : cops) {
    if (op.dim != dim) throw InvalidArgument("build_liouvillian: operator dimension mismatch");
    SpMat oc = op.mat.conjugate();
    SpMat odo = (SpMat(op.mat.adjoint()) * op.mat).eval();
    SpMat odot = odo.transpose();
    l += Eigen::kroneckerProduct(oc, op.mat).eval();
    l -= cplx(0.5, 0.0) * Eigen::kroneckerProduct(eye, odo).eval();
    l -= cplx(0.5, 0.0) * Eigen::kroneckerProduct(odot, eye).eval();
  }
  l.prune(cplx(0.0, 0.0));
  l.makeCompressed();

  LiouvillianMatrix out;
  out.dim = dim;
  out.mat = std::move(l);
  for (int k = 0; k < out.mat.outerSize(); ++k)
    for (SpMat::InnerIterator it(out.mat, k); it; ++it)
      out.scale = std::max(out.scale, std::abs(it.value()));
  return out;
}

enum class SteadyStateMethod { Auto, DirectLU, PreconditionedGmres };

struct SteadyStateOptions {
  double tol = 1e-8;  // relative to the Liouvillian scale
  SteadyStateMethod method = SteadyStateMethod::Auto;
  int gmres_restart = 100;
  int gmres_max_outer = 8;
};

struct SteadyStateReport {
  double residual_inf = 0.0;
  double scale = 0.0;
  int gmres_iterations = 0;
  std::string method;
  double seconds = 0.0;
};

inline double steady_residual_inf(const LiouvillianMatrix& l, const Eigen::MatrixXcd& rho) {
  Eigen::Map<const Eigen::VectorXcd> v(rho.data(), rho.size());
  return (l.mat * v).cwiseAbs().maxCoeff();
}

namespace detail {

inline DensityMatrix finish_steady_state(const LiouvillianMatrix& l, Eigen::VectorXcd x,
                                         const SteadyStateOptions& opts,
                                         SteadyStateReport* report) {
  const int dim = l.dim;
  Eigen::MatrixXcd rho = Eigen::Map<Eigen::MatrixXcd>(x.data(), dim, dim);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const cplx tr = rho.trace();
  if (std::abs(tr) < 1e-12)
    throw SingularSystem("steady state solve returned a traceless matrix");
  rho /= tr;

  const double resid = steady_residual_inf(l, rho);
  if (report) {
    report->residual_inf = resid;
    report->scale = l.scale;
  }
  if (!(resid <= opts.tol * l.scale))
    throw SingularSystem("steady state residual " + std::to_string(resid) +
                         " exceeds tolerance; Liouvillian may be singular beyond the trace mode");
  DensityMatrix out;
  out.dim = dim;
  out.values = std::move(rho);
  return out;
}

}  // namespace detail

// Direct solve: replace the first row of L by the trace functional and solve
// M x = e_0.  Works for any Liouvillian whose kernel is one-dimensional.
inline DensityMatrix steady_state_direct(const LiouvillianMatrix& l,
                                         const SteadyStateOptions& opts = {},
                                         SteadyStateReport* report = nullptr) {
  const auto t0 = std::chrono::steady_clock::now();
  const int dim = l.dim;
  const long n = static_cast<long>(dim) * dim;

  std::vector<Triplet> trips;
  trips.reserve(static_cast<size_t>(l.mat.nonZeros()) + dim);
  for (int k = 0; k < l.mat.outerSize(); ++k)
    for (SpMat::InnerIterator it(l.mat, k); it; ++it)
      if (it.row() != 0) trips.emplace_back(it.row(), it.col(), it.value());
  for (int k = 0; k < dim; ++k)
    trips.emplace_back(0, k * (dim + 1), cplx(1.0, 0.0));
  SpMat m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();

  Eigen::SparseLU<SpMat, Eigen::COLAMDOrdering<int>> lu;
  lu.compute(m);
  if (lu.info() != Eigen::Success)
    throw SingularSystem("sparse LU factorisation of the constrained Liouvillian failed");

  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
  b[0] = cplx(1.0, 0.0);
  Eigen::VectorXcd x = lu.solve(b);
  x += lu.solve((b - m * x).eval());  // one refinement step

  DensityMatrix rho = detail::finish_steady_state(l, std::move(x), opts, report);
  if (report) {
    report->method = "direct-lu";
    report->gmres_iterations = 0;
    report->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return rho;
}

}  // namespace bht
