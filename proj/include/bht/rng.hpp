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
#include <cstdint>

#include "bht/params.hpp"

namespace bht {

// SplitMix64 finaliser.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based standard normal draw: the value at (seed, realization, site)
// never depends on evaluation order, so ensembles are reproducible under any
// scheduling.  Box-Muller on two uniforms derived from the chained keys.
inline double counter_normal(std::uint64_t seed, std::uint64_t realization, std::uint64_t site) {
  const std::uint64_t k1 = splitmix64(seed ^ 0xA0761D6478BD642FULL);
  const std::uint64_t k2 = splitmix64(k1 ^ realization);
  const std::uint64_t k3 = splitmix64(k2 ^ site);
  const std::uint64_t a = splitmix64(k3);
  const std::uint64_t b = splitmix64(k3 + 0x9E3779B97F4A7C15ULL);
  const double u1 = ((a >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = (b >> 11) * 0x1.0p-53;        // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace bht
