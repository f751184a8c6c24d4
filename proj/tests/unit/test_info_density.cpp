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
#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "neurocap/capacity.hpp"
#include "neurocap/error.hpp"
#include "neurocap/info_density.hpp"
#include "oracle_values.hpp"

namespace neurocap {
namespace {

using testing::rate_model;
using testing::temporal_model;

TEST(InfoDensity, SinglePointCarriesNothing) {
  for (const auto& model : {temporal_model(3.0), rate_model(3.0), temporal_model(0.7)}) {
    const InputEnsemble e = InputEnsemble::single(0.005);
    const InfoDensity density(e, model);
    EXPECT_NEAR(density(0.005), 0.0, 1e-10);
    EXPECT_NEAR(ensemble_mi(e, model), 0.0, 1e-10);
    EXPECT_GT(density(0.009), 0.0);
  }
}

TEST(InfoDensity, TwoPointTemporalValues) {
  const InputEnsemble e({0.001, 0.01}, {0.5, 0.5});
  const InfoDensity density(e, temporal_model(3.0));
  EXPECT_NEAR(density(0.001), oracle::kTwoPointLowDensity, 1e-8);
  EXPECT_NEAR(density(0.01), oracle::kTwoPointHighDensity, 1e-8);
  EXPECT_NEAR(density(0.0055), oracle::kTwoPointMidDensity, 1e-8);
  EXPECT_NEAR(density.mutual_information(),
              0.5 * (oracle::kTwoPointLowDensity + oracle::kTwoPointHighDensity), 1e-8);
}

TEST(InfoDensity, ThreePointRateValue) {
  const InputEnsemble e({0.0015, 0.004, 0.012}, {0.3, 0.3, 0.4});
  EXPECT_NEAR(ensemble_mi(e, rate_model(2.0)), oracle::kThreePointRateMi, 1e-10);
}

TEST(InfoDensity, OutsideIntervalThrows) {
  const InfoDensity density(InputEnsemble::single(0.004), temporal_model(3.0));
  EXPECT_THROW(density(0.0005), DomainError);
  EXPECT_THROW(density(0.02), DomainError);
}

TEST(InfoDensity, WeightedAverageIsMutualInformation) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 12; ++trial) {
    const double kappa = gen.uniform(0.5, 4.0);
    const auto model = trial % 2 ? rate_model(kappa) : temporal_model(kappa);
    const auto& ch = model.gamma();
    const std::size_t n = gen.size(1, 5);
    std::vector<double> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(gen.uniform(ch.theta_min(), ch.theta_max()));
    std::sort(pts.begin(), pts.end());
    const InputEnsemble e(pts, gen.simplex(n, 0.0));
    const InfoDensity density(e, model);
    double avg = 0.0;
    for (std::size_t i = 0; i < n; ++i) avg += e.weights()[i] * density(pts[i]);
    EXPECT_NEAR(avg, ensemble_mi(e, model), 1e-9);
    EXPECT_GE(avg, -1e-10);
  }
}

TEST(InfoDensity, EvaluateMatchesPointwiseAcrossThreads) {
  const InputEnsemble e({0.0015, 0.004, 0.012}, {0.3, 0.3, 0.4});
  const InfoDensity density(e, rate_model(2.0));
  const auto grid = input_grid(rate_model(2.0).gamma(), 37);
  const auto values = density.evaluate(grid, 4);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(values[i], density(grid[i]));
}

// Away from a capacity-achieving law the density can peak between points; at
// the optimum every point of the interval sits at or below the support level.
TEST(InfoDensity, SupportDominatesMidpointAtOptimum) {
  const auto sol = particle_capacity(temporal_model(3.0));
  ASSERT_TRUE(sol.certificate.passed);
  const InfoDensity density(sol.ensemble, sol.model);
  const auto& pts = sol.ensemble.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double mid = std::sqrt(pts[i] * pts[i + 1]);
    EXPECT_LT(density(mid), std::min(density(pts[i]), density(pts[i + 1])));
  }
}

TEST(InfoDensity, InvariantUnderTimeRescaling) {
  const InputEnsemble e({0.0015, 0.004, 0.012}, {0.3, 0.3, 0.4});
  for (const auto& model : {temporal_model(2.0), rate_model(2.0)}) {
    const double base = ensemble_mi(e, model);
    for (double factor : {0.1, 7.0, 1000.0}) {
      EXPECT_NEAR(ensemble_mi(testing::scaled(e, factor), model.rescaled(factor)), base, 1e-9);
    }
  }
}

}  // namespace
}  // namespace neurocap
