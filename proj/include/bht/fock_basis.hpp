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
#include <map>
#include <numeric>
#include <vector>

#include "bht/errors.hpp"

namespace bht {

using Occupation = std::vector<int>;

// Truncated bosonic Fock space: every occupation tuple with 0 <= n_i <=
// per_site_cap and sum n_i <= total_cap, enumerated exactly once.
//
// Ordering is deterministic and load-bearing: ascending total excitation
// number first (so each excitation sector occupies a contiguous index block
// that eigen-solvers can slice without permutation), lexicographic within a
// sector.
struct FockBasis {
  int n_sites = 0;
  int per_site_cap = 0;
  int total_cap = 0;
  std::vector<Occupation> states;
  std::map<Occupation, int> index_of;
  // sector_begin[n] .. sector_begin[n+1] is the index range of the states
  // with total excitation n; sector_begin.size() == total_cap + 2.
  std::vector<int> sector_begin;

  int dim() const { return static_cast<int>(states.size()); }

  int index(const Occupation& s) const {
    auto it = index_of.find(s);
    if (it == index_of.end()) throw InvalidArgument("occupation tuple not in basis");
    return it->second;
  }

  int total(int k) const {
    return std::accumulate(states[k].begin(), states[k].end(), 0);
  }

  int sector_size(int n) const { return sector_begin[n + 1] - sector_begin[n]; }
};

inline FockBasis build_basis(int n_sites, int per_site_cap, int total_cap) {
  if (n_sites < 1) throw InvalidArgument("build_basis: n_sites must be >= 1");
  if (per_site_cap < 1 || total_cap < 1)
    throw InvalidArgument("build_basis: caps must be >= 1");

  FockBasis b;
  b.n_sites = n_sites;
  b.per_site_cap = per_site_cap;
  b.total_cap = total_cap;

  // Odometer enumeration of all tuples within the per-site cap, filtered by
  // the total cap; the sort below establishes the sector-major order.
  Occupation s(n_sites, 0);
  while (true) {
    int tot = std::accumulate(s.begin(), s.end(), 0);
    if (tot <= total_cap) b.states.push_back(s);
    int i = n_sites - 1;
    while (i >= 0 && s[i] == per_site_cap) s[i--] = 0;
    if (i < 0) break;
    ++s[i];
  }
  std::sort(b.states.begin(), b.states.end(),
            [](const Occupation& a, const Occupation& c) {
              int ta = std::accumulate(a.begin(), a.end(), 0);
              int tc = std::accumulate(c.begin(), c.end(), 0);
              if (ta != tc) return ta < tc;
              return a < c;
            });

  b.sector_begin.assign(total_cap + 2, 0);
  for (int k = 0; k < b.dim(); ++k) {
    b.index_of.emplace(b.states[k], k);
    ++b.sector_begin[b.total(k) + 1];
  }
  for (int n = 0; n <= total_cap; ++n) b.sector_begin[n + 1] += b.sector_begin[n];
  return b;
}

}  // namespace bht
