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

#include "bht/params.hpp"
#include "bht/sparse_operator.hpp"

namespace bht {

// Rotating-frame chain Hamiltonian (hbar = 1, rad/us):
//
//   H = sum_i [ (omega_i - omega_d) n_i + (alpha_i/2) n_i (n_i - 1) ]
//     + J sum_i ( b^dag_{i+1} b_i + b^dag_i b_{i+1} )
//     + (Omega/2) ( b^dag_1 + b_1 ).
//
// The drive is attached to site 1. Assembled per basis state, so the sector
// block structure (contiguous by total excitation when Omega = 0) is exact.
inline SparseOperator build_hamiltonian(const ChainParams& p, const FockBasis& basis) {
  p.validate();
  if (p.n_sites != basis.n_sites)
    throw InvalidArgument("build_hamiltonian: params/basis site count mismatch");

  std::vector<Triplet> t;
  Occupation target;
  for (int k = 0; k < basis.dim(); ++k) {
    const Occupation& s = basis.states[k];
    double diag = 0.0;
    for (int i = 0; i < p.n_sites; ++i) {
      const double n = static_cast<double>(s[i]);
      diag += (p.omega[i] - p.omega_d) * n + 0.5 * p.alpha[i] * n * (n - 1.0);
    }
    if (diag != 0.0) t.emplace_back(k, k, diag);

    // Hopping: emit b^dag_{i+1} b_i from each state; the Hermitian partner
    // b^dag_i b_{i+1} is emitted as the mirrored triplet.
    for (int i = 0; i + 1 < p.n_sites; ++i) {
      if (s[i] == 0 || s[i + 1] >= basis.per_site_cap) continue;
      target = s;
      --target[i];
      ++target[i + 1];
      auto it = basis.index_of.find(target);
      if (it == basis.index_of.end()) continue;  // total cap cannot change here
      const double amp = p.J * std::sqrt(static_cast<double>(s[i]) *
                                         static_cast<double>(s[i + 1] + 1));
      t.emplace_back(it->second, k, amp);
      t.emplace_back(k, it->second, amp);
    }

    // Drive on site 1: b^dag_1 raises, partner triplet supplies b_1.
    if (p.Omega != 0.0 && s[0] < basis.per_site_cap && basis.total(k) < basis.total_cap) {
      target = s;
      ++target[0];
      auto it = basis.index_of.find(target);
      if (it != basis.index_of.end()) {
        const double amp = 0.5 * p.Omega * std::sqrt(static_cast<double>(s[0] + 1));
        t.emplace_back(it->second, k, amp);
        t.emplace_back(k, it->second, amp);
      }
    }
  }
  return SparseOperator(basis.dim(), t);
}

}  // namespace bht
