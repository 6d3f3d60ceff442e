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

#include <Eigen/Dense>

#include "bht/errors.hpp"
#include "bht/sparse_operator.hpp"

namespace bht {

struct DensityMatrix {
  int dim = 0;
  Eigen::MatrixXcd values;

  // Numerical invariants of a physical state: Hermitian to 1e-10, unit trace
  // to 1e-10, spectrum above -1e-8.
  void check_invariants() const {
    if ((values - values.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
      throw SingularSystem("density matrix is not Hermitian");
    if (std::abs(values.trace() - cplx(1.0, 0.0)) > 1e-10)
      throw SingularSystem("density matrix trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(values, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-8)
      throw SingularSystem("density matrix has a negative eigenvalue");
  }
};

inline cplx expectation(const DensityMatrix& rho, const SparseOperator& a) {
  if (rho.dim != a.dim) throw InvalidArgument("expectation: dimension mismatch");
  cplx acc(0.0, 0.0);
  // Tr(rho A) = sum_{rc} A_rc rho_cr
  for (int k = 0; k < a.mat.outerSize(); ++k)
    for (SpMat::InnerIterator it(a.mat, k); it; ++it)
      acc += it.value() * rho.values(it.col(), it.row());
  return acc;
}

}  // namespace bht
