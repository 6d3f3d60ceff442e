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
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "bht/fock_basis.hpp"

namespace bht {

using cplx = std::complex<double>;
using SpMat = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;

// Sparse complex operator on the Fock basis. Backed by Eigen compressed
// storage; duplicate coordinates are merged at construction.
struct SparseOperator {
  int dim = 0;
  SpMat mat;

  SparseOperator() = default;
  SparseOperator(int d, const std::vector<Triplet>& entries) : dim(d), mat(d, d) {
    mat.setFromTriplets(entries.begin(), entries.end());
    mat.makeCompressed();
  }

  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat); }

  double max_abs() const {
    double m = 0.0;
    for (int k = 0; k < mat.outerSize(); ++k)
      for (SpMat::InnerIterator it(mat, k); it; ++it)
        m = std::max(m, std::abs(it.value()));
    return m;
  }

  bool is_hermitian(double tol = 1e-12) const {
    SpMat d = SpMat(mat.adjoint()) - mat;
    for (int k = 0; k < d.outerSize(); ++k)
      for (SpMat::InnerIterator it(d, k); it; ++it)
        if (std::abs(it.value()) > tol) return false;
    return true;
  }
};

inline SparseOperator adjoint(const SparseOperator& a) {
  SparseOperator r;
  r.dim = a.dim;
  r.mat = a.mat.adjoint();
  r.mat.makeCompressed();
  return r;
}

// Site lowering operator b_site (sites are 1-based). Truncation acts by
// projection: matrix elements whose image tuple leaves the basis are absent.
inline SparseOperator lowering_op(const FockBasis& basis, int site) {
  if (site < 1 || site > basis.n_sites)
    throw InvalidArgument("lowering_op: site out of range");
  const int i = site - 1;
  std::vector<Triplet> t;
  Occupation target;
  for (int k = 0; k < basis.dim(); ++k) {
    const Occupation& s = basis.states[k];
    if (s[i] == 0) continue;
    target = s;
    --target[i];
    t.emplace_back(basis.index(target), k, std::sqrt(static_cast<double>(s[i])));
  }
  return SparseOperator(basis.dim(), t);
}

inline SparseOperator number_op(const FockBasis& basis, int site) {
  if (site < 1 || site > basis.n_sites)
    throw InvalidArgument("number_op: site out of range");
  std::vector<Triplet> t;
  for (int k = 0; k < basis.dim(); ++k)
    if (basis.states[k][site - 1] > 0)
      t.emplace_back(k, k, static_cast<double>(basis.states[k][site - 1]));
  return SparseOperator(basis.dim(), t);
}

inline SparseOperator total_number_op(const FockBasis& basis) {
  std::vector<Triplet> t;
  for (int k = 0; k < basis.dim(); ++k)
    if (basis.total(k) > 0) t.emplace_back(k, k, static_cast<double>(basis.total(k)));
  return SparseOperator(basis.dim(), t);
}

}  // namespace bht
