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

#include "bht/spectroscopy.hpp"
#include "helpers.hpp"

using bht::ChainParams;
using bht::FockBasis;

TEST_CASE("matched symmetric chain transmits fully on resonance") {
  // Equal edge decay, no dephasing, degenerate sites: the central dressed mode
  // transmits with |S21| -> 1 in the weak-drive limit.
  ChainParams p = testutil::degenerate_params(bht::mhz_to_rad_us(41.0), 16.0);
  p.omega_d = p.omega[0];
  p.Omega = p.gamma.front() / 100.0;
  const FockBasis b = bht::build_basis(5, 2, 2);
  REQUIRE(std::abs(bht::s21_point(p, b)) == Catch::Approx(1.0).margin(0.01));
}

TEST_CASE("transmission never exceeds unity") {
  ChainParams p = testutil::fitted_params();
  const FockBasis b = bht::build_basis(5, 2, 2);
  for (double omega_d_ghz : {3.86, 3.88, 3.9, 3.92, 3.94}) {
    for (double omega_mhz : {0.2, 2.0, 20.0}) {
      p.omega_d = bht::ghz_to_rad_us(omega_d_ghz);
      p.Omega = bht::mhz_to_rad_us(omega_mhz);
      REQUIRE(std::abs(bht::s21_point(p, b)) <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("strong drives suppress transmission through the blockade") {
  ChainParams p = testutil::fitted_params();
  p.omega_d = bht::ghz_to_rad_us(3.9);
  const FockBasis b = bht::build_basis(5, 3, 4);  // 121 states

  p.Omega = bht::mhz_to_rad_us(2.0);
  const double weak = std::abs(bht::s21_point(p, b));
  p.Omega = bht::mhz_to_rad_us(64.0);
  const double strong = std::abs(bht::s21_point(p, b));
  REQUIRE(strong < weak);
  REQUIRE(weak > 0.5);
}

TEST_CASE("sweep grid validation rejects malformed axes") {
  bht::SweepGrid grid;
  grid.omega_d = {1.0, 2.0, 2.0};  // not strictly increasing
  grid.Omega = {0.1};
  REQUIRE_THROWS_AS(grid.validate(), bht::ConfigError);
  grid.omega_d = {1.0, 2.0};
  grid.Omega = {};
  REQUIRE_THROWS_AS(grid.validate(), bht::ConfigError);
  grid.Omega = {0.1};
  REQUIRE_NOTHROW(grid.validate());
}

TEST_CASE("a one-cell sweep produces exactly one row") {
  ChainParams p = testutil::fitted_params();
  const FockBasis b = bht::build_basis(5, 2, 2);
  bht::SweepGrid grid;
  grid.omega_d = {bht::ghz_to_rad_us(3.9)};
  grid.Omega = {bht::mhz_to_rad_us(2.0)};

  const bht::SpectrumTable table = bht::sweep(p, b, grid);
  REQUIRE(table.rows.size() == 1);
  REQUIRE(table.n_omega_d == 1);
  REQUIRE(table.n_Omega == 1);
  REQUIRE(table.rows[0].ok);
  REQUIRE(table.rows[0].error.empty());
  REQUIRE(std::isfinite(std::abs(table.rows[0].s21)));
  REQUIRE(table.rows[0].residual >= 0.0);

  // The row must agree with a standalone solve of the same cell.
  p.omega_d = grid.omega_d[0];
  p.Omega = grid.Omega[0];
  REQUIRE(std::abs(table.rows[0].s21 - bht::s21_point(p, b)) < 1e-12);
}

TEST_CASE("sweep results do not depend on the worker count") {
  ChainParams p = testutil::fitted_params();
  const FockBasis b = bht::build_basis(5, 2, 2);
  bht::SweepGrid grid;
  for (int k = 0; k < 5; ++k)
    grid.omega_d.push_back(bht::ghz_to_rad_us(3.88 + 0.01 * k));
  grid.Omega = {bht::mhz_to_rad_us(1.0), bht::mhz_to_rad_us(8.0)};

  const bht::SpectrumTable serial = bht::sweep(p, b, grid, {}, 1);
  const bht::SpectrumTable threaded = bht::sweep(p, b, grid, {}, 3);
  REQUIRE(serial.rows.size() == threaded.rows.size());
  REQUIRE(serial.rows.size() == 10);
  for (std::size_t k = 0; k < serial.rows.size(); ++k) {
    REQUIRE(serial.rows[k].s21.real() == threaded.rows[k].s21.real());
    REQUIRE(serial.rows[k].s21.imag() == threaded.rows[k].s21.imag());
    REQUIRE(serial.rows[k].omega_d == threaded.rows[k].omega_d);
    REQUIRE(serial.rows[k].Omega == threaded.rows[k].Omega);
  }
}

TEST_CASE("normalized transmission requires a drive and edge decay") {
  ChainParams p = testutil::fitted_params();
  const FockBasis b = bht::build_basis(5, 2, 2);

  p.Omega = 0.0;
  REQUIRE_THROWS_AS(bht::s21_point(p, b), bht::ConfigError);
  p.Omega = 0.1;
  p.gamma.front() = 0.0;
  REQUIRE_THROWS_AS(bht::s21_point(p, b), bht::ConfigError);
  p.gamma.front() = 16.0;
  p.gamma.back() = 0.0;
  REQUIRE_THROWS_AS(bht::s21_point(p, b), bht::ConfigError);
}
