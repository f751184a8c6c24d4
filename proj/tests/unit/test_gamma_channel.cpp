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

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <gtest/gtest.h>

#include "neurocap/error.hpp"
#include "neurocap/gamma_channel.hpp"
#include "neurocap/special_functions.hpp"
#include "oracle_values.hpp"

namespace neurocap {
namespace {

double poisson(std::size_t r, double mu) {
  return std::exp(static_cast<double>(r) * std::log(mu) - mu - std::lgamma(r + 1.0));
}

// A channel whose input interval contains theta for every kappa used below.
CountChannelConfig config(double kappa, double theta, double x, double tail_tol = 1e-12) {
  return CountChannelConfig(GammaChannel(kappa, 0.5 * kappa * theta, 2.0 * kappa * theta),
                            x * theta, tail_tol);
}

TEST(GammaChannel, InputInterval) {
  const GammaChannel ch(3.0, 0.003, 0.030);
  EXPECT_DOUBLE_EQ(ch.theta_min(), 0.001);
  EXPECT_DOUBLE_EQ(ch.theta_max(), 0.01);
  EXPECT_TRUE(ch.contains(0.005));
  EXPECT_FALSE(ch.contains(0.02));
  EXPECT_THROW(ch.check_input(0.0005), DomainError);
}

TEST(GammaChannel, RejectsBadParameters) {
  EXPECT_THROW(GammaChannel(0.0, 0.003, 0.03), ValidationError);
  EXPECT_THROW(GammaChannel(1.0, 0.003, 0.003), ValidationError);
  EXPECT_THROW(GammaChannel(1.0, 0.03, 0.003), ValidationError);
  EXPECT_THROW(GammaChannel(1.0, -0.1, 0.003), ValidationError);
  EXPECT_THROW(CountChannelConfig(GammaChannel(1.0, 0.003, 0.03), 0.0), ValidationError);
  EXPECT_THROW(CountChannelConfig(GammaChannel(1.0, 0.003, 0.03), 0.1, 1e-5), ValidationError);
}

TEST(IsiDensity, ExponentialAtOrigin) {
  const GammaChannel ch(1.0, 0.5, 2.0);
  EXPECT_NEAR(std::exp(isi_log_density(1e-300, 1.0, ch)), 1.0, 1e-12);
}

TEST(IsiDensity, ShapeTwo) {
  const GammaChannel ch(2.0, 1.0, 4.0);
  EXPECT_NEAR(std::exp(isi_log_density(1.0, 1.0, ch)), 0.3679, 1e-4);
  EXPECT_NEAR(isi_log2_density(1.0, 1.0, ch), -1.0 / std::log(2.0), 1e-14);
}

TEST(IsiDensity, DomainErrors) {
  const GammaChannel ch(2.0, 1.0, 4.0);
  EXPECT_THROW(isi_log_density(0.0, 1.0, ch), DomainError);
  EXPECT_THROW(isi_log_density(-1.0, 1.0, ch), DomainError);
  EXPECT_THROW(isi_log_density(1.0, 5.0, ch), DomainError);
}

TEST(IsiDensity, MeanIsKappaTheta) {
  const GammaChannel ch(3.0, 0.003, 0.06);
  boost::math::quadrature::tanh_sinh<double> q;
  const double mean =
      q.integrate([&](double t) { return t * std::exp(isi_log_density(t, 0.01, ch)); }, 0.0,
                  std::numeric_limits<double>::infinity());
  EXPECT_NEAR(mean, 0.03, 1e-8);
}

TEST(IsiDensity, IntegratesToOne) {
  boost::math::quadrature::tanh_sinh<double> q;
  for (double kappa : {0.5, 1.0, 2.0, 3.0, 10.0}) {
    for (double theta : {0.001, 0.01, 0.1}) {
      const GammaChannel ch(kappa, 0.5 * kappa * theta, 2.0 * kappa * theta);
      const double total =
          q.integrate([&](double t) { return t > 0 ? std::exp(isi_log_density(t, theta, ch)) : 0.0; },
                      0.0, std::numeric_limits<double>::infinity());
      EXPECT_NEAR(total, 1.0, 1e-8) << kappa << " " << theta;
    }
  }
}

TEST(IsiSampling, SampleMeanWithinThreeStandardErrors) {
  std::mt19937_64 rng(2024);
  const double kappa = 3.0;
  const double theta = 0.005;
  const std::size_t n = 1000000;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += sample_isi(rng, theta, kappa);
  const double se = std::sqrt(kappa) * theta / std::sqrt(static_cast<double>(n));
  EXPECT_LT(std::abs(sum / n - kappa * theta), 3.0 * se);
}

TEST(CountPmf, PoissonAtZero) {
  EXPECT_NEAR(count_pmf(0, 1.0, config(1.0, 1.0, 2.0)), 0.13534, 1e-5);
  EXPECT_NEAR(count_pmf(0, 1.0, config(1.0, 1.0, 2.0)), std::exp(-2.0), 1e-15);
}

TEST(CountPmf, ZeroCountIsFirstSpikeBeyondWindow) {
  for (double kappa : {0.5, 2.0, 3.0}) {
    const auto cfg = config(kappa, 1.0, 4.0);
    EXPECT_NEAR(count_pmf(0, 1.0, cfg), gamma_q(kappa, 4.0), 1e-14);
  }
}

TEST(CountPmf, FrozenValues) {
  EXPECT_NEAR(count_pmf(2, 1.0, config(3.0, 1.0, 5.0)), oracle::kCountPmfKappa3X5R2, 1e-14);
  EXPECT_NEAR(count_pmf(3, 1.0, config(0.5, 1.0, 1.0)), oracle::kCountPmfKappaHalfX1R3, 1e-14);
}

TEST(CountPmf, PoissonForKappaOne) {
  for (double x : {0.5, 2.0, 10.0}) {
    const auto cfg = config(1.0, 1.0, x);
    for (std::size_t r = 0; r <= 50; ++r) {
      EXPECT_NEAR(count_pmf(r, 1.0, cfg), poisson(r, x), 1e-10) << "x=" << x << " r=" << r;
    }
  }
}

TEST(CountPmf, SumsToOne) {
  for (auto [kappa, x] : {std::pair{1.0, 2.0}, {3.0, 5.0}, {0.5, 1.0}}) {
    const auto p = truncated_count_pmf(1.0, config(kappa, 1.0, x));
    double total = 0.0;
    for (double v : p.probs) total += v;
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_NEAR(total + p.tail_mass, 1.0, 1e-13);
  }
}

TEST(TruncatedCountPmf, PoissonTail) {
  const auto p = truncated_count_pmf(1.0, config(1.0, 1.0, 2.0));
  EXPECT_NEAR(p.probs[0], std::exp(-2.0), 1e-15);
  EXPECT_GE(p.r_max, 15u);
  EXPECT_LE(p.r_max, 25u);
  // r_max is the first index whose remaining tail is within tolerance.
  double tail_before = 0.0;
  for (std::size_t r = p.r_max; r < 200; ++r) tail_before += poisson(r, 2.0);
  EXPECT_GT(tail_before, 1e-12);
  EXPECT_LE(p.tail_mass, 1e-12);
}

TEST(TruncatedCountPmf, ShortWindowConcentratesAtZero) {
  const auto p = truncated_count_pmf(1.0, config(1.0, 1.0, 0.01));
  EXPECT_GT(p.probs[0], 0.99);
  EXPECT_LE(p.r_max, 8u);
}

TEST(TruncatedCountPmf, LargerToleranceNeverRaisesRmax) {
  std::size_t previous = std::numeric_limits<std::size_t>::max();
  for (double tol : {1e-15, 1e-13, 1e-12, 1e-10, 1e-8, 1e-7}) {
    const auto p = truncated_count_pmf(1.0, config(2.0, 1.0, 20.0, tol));
    EXPECT_LE(p.r_max, previous);
    EXPECT_LE(1.0 - [&] { double s = 0; for (double v : p.probs) s += v; return s; }(), tol + 1e-15);
    previous = p.r_max;
  }
}

TEST(TruncatedCountPmf, CapViolationNamesInputs) {
  const CountChannelConfig cfg(GammaChannel(1.0, 0.001, 0.01), 100.0, 1e-12, 50);
  try {
    truncated_count_pmf(0.001, cfg);
    FAIL();
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("theta=0.001"), std::string::npos) << msg;
    EXPECT_NE(msg.find("delta=100"), std::string::npos) << msg;
  }
}

TEST(CountMean, PoissonMean) {
  const auto m = count_mean(1.0, config(1.0, 1.0, 2.0));
  EXPECT_NEAR(m.exact, 2.0, 1e-10);
  EXPECT_DOUBLE_EQ(m.asymptotic, 2.0);
}

TEST(CountMean, RenewalMeanNearRate) {
  const CountChannelConfig cfg(GammaChannel(3.0, 0.003, 0.03), 0.1);
  const auto m = count_mean(0.01, cfg);
  EXPECT_NEAR(m.exact, oracle::kCountMeanKappa3X10, 1e-10);
  EXPECT_NEAR(m.asymptotic, 10.0 / 3.0, 1e-12);
  EXPECT_LT(std::abs(m.exact - m.asymptotic) / m.asymptotic, 0.15);
}

// Renewal theory: E N = x / kappa + (1 / kappa - 1) / 2 + o(1) for long windows.
TEST(CountMean, LongWindowRenewalOffset) {
  for (double kappa : {0.5, 2.0, 3.0}) {
    const auto m = count_mean(1.0, config(kappa, 1.0, 400.0));
    EXPECT_NEAR(m.exact - m.asymptotic, (1.0 / kappa - 1.0) / 2.0, 1e-8) << kappa;
    EXPECT_NEAR(m.exact / m.asymptotic, 1.0, 0.01);
  }
}

TEST(CountSimulation, MatchesLawWithinThreeStandardErrors) {
  for (auto [kappa, x] : {std::pair{1.0, 2.0}, {3.0, 5.0}}) {
    const auto cfg = config(kappa, 1.0, x);
    const auto law = truncated_count_pmf(1.0, cfg);
    const std::size_t n = 1000000;
    const auto hist = simulate_count_histogram(1.0, cfg, n, 99);
    for (std::size_t r = 0; r < hist.size(); ++r) {
      const double p = r <= law.r_max ? law.probs[r] : 0.0;
      const double se = std::sqrt(std::max(p * (1 - p), 1e-12) / n);
      EXPECT_LT(std::abs(hist[r] - p), 3.0 * se + 1e-12) << "kappa=" << kappa << " r=" << r;
    }
  }
}

}  // namespace
}  // namespace neurocap
