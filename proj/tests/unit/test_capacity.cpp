// Copyright 2026 The neurocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "neurocap/capacity.hpp"
#include "neurocap/error.hpp"
#include "neurocap/info_density.hpp"

namespace neurocap {
namespace {

using testing::rate_model;
using testing::temporal_model;

TEST(InputGrid, LogSpacedEndpoints) {
  const GammaChannel ch(3.0, 0.003, 0.03);
  const auto g = input_grid(ch, 5);
  ASSERT_EQ(g.size(), 5u);
  EXPECT_DOUBLE_EQ(g.front(), 0.001);
  EXPECT_DOUBLE_EQ(g.back(), 0.01);
  EXPECT_NEAR(g[2], std::sqrt(0.001 * 0.01), 1e-15);
}

TEST(GridCapacity, CollapsedIntervalCarriesAlmostNothing) {
  GridOptions opt;
  opt.grid_n = 51;
  const auto sol = grid_capacity(temporal_model(3.0, 0.003, 0.003 * 1.0001), opt);
  EXPECT_LT(sol.capacity_per_use, 1e-6);
  EXPECT_GE(sol.capacity_per_use, 0.0);
}

TEST(GridCapacity, NestedGridsNeverLoseCapacity) {
  GridOptions opt;
  opt.tol = 1e-6;
  opt.max_iter = 2'000'000;
  opt.slack_tol = 1.0;
  double previous = 0.0;
  // Each log grid contains the previous one.
  for (std::size_t n : {51u, 101u, 201u, 401u}) {
    opt.grid_n = n;
    const auto sol = grid_capacity(rate_model(1.0), opt);
    EXPECT_GE(sol.upper_bound, previous - 1e-9) << n;
    previous = sol.lower_bound;
  }
}

TEST(GridCapacity, MassGathersInFewClusters) {
  const auto sol = grid_capacity(temporal_model(3.0));
  const auto grid = input_grid(sol.model.gamma(), 2001);
  // Count runs of adjacent grid indices carrying mass.
  std::size_t clusters = 0;
  std::size_t last = grid.size() + 1;
  for (double p : sol.ensemble.points()) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), p * (1 - 1e-12));
    const auto idx = static_cast<std::size_t>(it - grid.begin());
    if (last > grid.size() || idx > last + 1) ++clusters;
    last = idx;
  }
  EXPECT_GE(clusters, 2u);
  EXPECT_LE(clusters, 8u);
  // The grid optimum is only certified up to its bound gap plus the grid spacing.
  EXPECT_LE(sol.certificate.max_violation, 1e-3);
}

TEST(ParticleCapacity, FewPointsAndCertified) {
  for (const auto& model : {temporal_model(1.0), rate_model(1.0), temporal_model(2.0)}) {
    const auto sol = particle_capacity(model);
    EXPECT_TRUE(sol.certificate.passed);
    EXPECT_GE(sol.ensemble.size(), 2u);
    EXPECT_LE(sol.ensemble.size(), 8u);
    EXPECT_LE(sol.lower_bound, sol.capacity_per_use + 1e-12);
    EXPECT_GE(sol.upper_bound, sol.capacity_per_use - 1e-12);
    EXPECT_NEAR(sol.capacity_per_use, ensemble_mi(sol.ensemble, model), 1e-9);
    // The interval ends always carry mass.
    EXPECT_DOUBLE_EQ(sol.ensemble.points().front(), model.gamma().theta_min());
    EXPECT_DOUBLE_EQ(sol.ensemble.points().back(), model.gamma().theta_max());
  }
}

TEST(ParticleCapacity, AgreesWithGridOracle) {
  const auto model = rate_model(1.0);
  const auto a = particle_capacity(model);
  const auto b = grid_capacity(model);
  EXPECT_NEAR(a.capacity_per_use, b.capacity_per_use, 1e-3);
}

TEST(ParticleCapacity, BudgetExhaustionCarriesBestIterate) {
  ParticleOptions opt;
  opt.max_rounds = 1;
  try {
    particle_capacity(rate_model(2.0), opt);
    FAIL() << "expected a convergence error";
  } catch (const SolverConvergenceError& e) {
    EXPECT_FALSE(e.best().certificate.passed);
    EXPECT_GT(e.best().capacity_per_use, 0.0);
  }
}

TEST(KktVerify, DetectsPerturbedWeights) {
  auto sol = particle_capacity(rate_model(1.0));
  ASSERT_TRUE(kkt_verify(sol).passed);
  auto w = sol.ensemble.weights();
  w[0] += 0.05;
  w[1] -= 0.05;
  sol.ensemble = InputEnsemble(sol.ensemble.points(), w);
  const auto report = kkt_verify(sol);
  EXPECT_FALSE(report.passed);
  EXPECT_GT(std::max(report.max_violation, report.at_support_gap), 1e-4);
}

TEST(KktVerify, RejectsSinglePoint) {
  const auto model = temporal_model(3.0);
  CapacitySolution sol{InputEnsemble::single(0.004), model};
  sol.capacity_per_use = 0.0;
  const auto report = kkt_verify(sol);
  EXPECT_FALSE(report.passed);
  EXPECT_GT(report.max_violation, 0.1);
  EXPECT_EQ(report.grid.size(), kDefaultProbeCount);
}

TEST(KktVerify, RejectsBadArguments) {
  CapacitySolution sol{InputEnsemble::single(0.004), temporal_model(3.0)};
  EXPECT_THROW(kkt_verify(sol, 10), ValidationError);
  EXPECT_THROW(kkt_verify(sol, 2001, 0.0), ValidationError);
}

TEST(CapacityBps, RateDividesByWindow) {
  const InputEnsemble e({0.001, 0.01}, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(capacity_bps(1.5, e, rate_model(3.0)), 15.0);
}

TEST(CapacityBps, TemporalDividesByMeanIsi) {
  const InputEnsemble e({0.001, 0.01}, {0.5, 0.5});
  // mean ISI = 3 * 0.0055 = 16.5 ms
  EXPECT_NEAR(capacity_bps(0.9, e, temporal_model(3.0)), 0.9 / 0.0165, 1e-9);
}

TEST(ParticleCapacity, GrowsWithInputInterval) {
  double previous = 0.0;
  for (double b0 : {0.010, 0.020, 0.030}) {
    const auto sol = particle_capacity(rate_model(1.0, 0.003, b0));
    EXPECT_GE(sol.capacity_per_use, previous - 1e-4) << b0;
    previous = sol.capacity_per_use;
  }
}

TEST(ParticleCapacity, InvariantUnderTimeRescaling) {
  const auto model = rate_model(1.0);
  const auto sol = particle_capacity(model);
  for (double factor : {0.01, 10.0}) {
    const auto m = model.rescaled(factor);
    EXPECT_NEAR(ensemble_mi(testing::scaled(sol.ensemble, factor), m), sol.capacity_per_use, 1e-9);
    const auto again = particle_capacity(m);
    EXPECT_NEAR(again.capacity_per_use, sol.capacity_per_use, 1e-4);
    EXPECT_NEAR(capacity_bps(again) * factor, capacity_bps(sol), 1e-2);
  }
}

}  // namespace
}  // namespace neurocap
