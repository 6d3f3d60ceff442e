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

#include <catch2/catch_amalgamated.hpp>

#include "bht/fock_basis.hpp"

using bht::FockBasis;
using bht::Occupation;

namespace {

// Independent counting oracle: brute-force enumeration of capped tuples.
long brute_force_count(int n_sites, int per_site_cap, int total_cap) {
  long count = 0;
  std::vector<int> s(n_sites, 0);
  for (;;) {
    int total = 0;
    for (int v : s) total += v;
    if (total <= total_cap) ++count;
    int i = 0;
    while (i < n_sites && ++s[i] > per_site_cap) s[i++] = 0;
    if (i == n_sites) break;
  }
  return count;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("basis dimension matches brute-force and closed-form counts") {
  const FockBasis b = bht::build_basis(5, 3, 4);
  REQUIRE(b.dim() == 121);
  REQUIRE(brute_force_count(5, 3, 4) == 121);

  // Inclusion-exclusion over per-site-cap violations:
  // sum_k (-1)^k C(5,k) C(T - k(c+1) + 5, 5) summed over totals up to T.
  long closed = 0;
  for (int k = 0; k <= 5; ++k) {
    const long rem = 4 - k * 4;  // total_cap - k*(per_site_cap+1)
    closed += (k % 2 ? -1 : 1) * binom(5, k) * binom(rem + 5, 5);
  }
  REQUIRE(closed == 121);

  for (int n_sites : {2, 3, 4})
    for (int cap : {1, 2, 3})
      for (int total : {1, 2, 3, 5}) {
        const FockBasis bb = bht::build_basis(n_sites, cap, total);
        REQUIRE(bb.dim() == brute_force_count(n_sites, cap, total));
      }
}

TEST_CASE("sector sizes of the 121-state space") {
  const FockBasis b = bht::build_basis(5, 3, 4);
  const int expected[] = {1, 5, 15, 35, 65};
  for (int n = 0; n <= 4; ++n) {
    REQUIRE(b.sector_size(n) == expected[n]);
    for (int k = b.sector_begin[n]; k < b.sector_begin[n + 1]; ++k)
      REQUIRE(b.total(k) == n);
  }
  REQUIRE(b.sector_begin.front() == 0);
  REQUIRE(b.sector_begin.back() == b.dim());
}

TEST_CASE("index and states are mutually inverse") {
  const FockBasis b = bht::build_basis(5, 3, 4);
  for (int k = 0; k < b.dim(); ++k) REQUIRE(b.index(b.states[k]) == k);
  REQUIRE_THROWS_AS(b.index(Occupation{4, 0, 0, 0, 0}), bht::InvalidArgument);
  REQUIRE_THROWS_AS(b.index(Occupation{1, 1, 1, 1, 1}), bht::InvalidArgument);  // total 5 > 4
  REQUIRE_THROWS_AS(b.index(Occupation{1, 0, 0}), bht::InvalidArgument);
}

TEST_CASE("ordering is sector-major then lexicographic") {
  const FockBasis b = bht::build_basis(5, 3, 4);
  for (int k = 0; k + 1 < b.dim(); ++k) {
    const int ta = b.total(k), tb = b.total(k + 1);
    REQUIRE(ta <= tb);
    if (ta == tb) REQUIRE(b.states[k] < b.states[k + 1]);
  }
  REQUIRE(b.states[0] == Occupation{0, 0, 0, 0, 0});
  REQUIRE(b.states[1] == Occupation{0, 0, 0, 0, 1});
  REQUIRE(b.states[5] == Occupation{1, 0, 0, 0, 0});
}

TEST_CASE("small bases enumerate exactly") {
  const FockBasis b = bht::build_basis(2, 1, 2);
  REQUIRE(b.dim() == 4);
  REQUIRE(b.states == std::vector<Occupation>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const FockBasis c = bht::build_basis(2, 3, 2);
  REQUIRE(c.dim() == 6);  // 00 | 01 10 | 02 11 20
  REQUIRE(c.states[3] == Occupation{0, 2});
}

TEST_CASE("invalid construction is rejected") {
  REQUIRE_THROWS_AS(bht::build_basis(0, 3, 4), bht::InvalidArgument);
  REQUIRE_THROWS_AS(bht::build_basis(5, 0, 4), bht::InvalidArgument);
  REQUIRE_THROWS_AS(bht::build_basis(5, 3, 0), bht::InvalidArgument);
}
