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
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace neurocap {

// Default model parameters, seconds. Mean ISI is bounded to [a0, b0].
inline constexpr double kDefaultA0 = 0.003;
inline constexpr double kDefaultB0 = 0.030;
inline constexpr double kDefaultDelta = 0.100;
inline constexpr double kDefaultTailTol = 1e-12;
inline constexpr std::size_t kDefaultCountCap = 10000;

// Gamma ISI channel: given input theta the ISI is Gamma(shape kappa, scale
// theta) with mean kappa * theta, and a0 <= kappa * theta <= b0.
class GammaChannel {
 public:
  GammaChannel(double kappa, double a0, double b0);

  double kappa() const { return kappa_; }
  double a0() const { return a0_; }
  double b0() const { return b0_; }

  // The feasible input interval [a0/kappa, b0/kappa].
  double theta_min() const { return a0_ / kappa_; }
  double theta_max() const { return b0_ / kappa_; }
  double omega_width() const { return theta_max() - theta_min(); }

  // Membership with a relative slack of 1e-12 for round-off at the ends.
  bool contains(double theta) const;
  // Throws DomainError naming theta when it falls outside the interval.
  void check_input(double theta) const;

 private:
  double kappa_;
  double a0_;
  double b0_;
};

// Rate-coding configuration: spikes of a GammaChannel are counted in [0, delta].
struct CountChannelConfig {
  CountChannelConfig(GammaChannel base, double delta, double tail_tol = kDefaultTailTol,
                     std::size_t count_cap = kDefaultCountCap);

  GammaChannel base;
  double delta;
  double tail_tol;
  std::size_t count_cap;
};

// Counts 0..r_max of p(r | theta); the raw (not renormalized) probabilities.
struct TruncatedCountPMF {
  double theta = 0.0;
  std::size_t r_max = 0;
  std::vector<double> probs;
  double tail_mass = 0.0;  // P(R > r_max), computed directly
};

struct CountMean {
  double exact = 0.0;       // sum of r p(r | theta) over the truncated PMF
  double asymptotic = 0.0;  // delta / (kappa theta), the renewal-rate value
};

// log p(t | theta) in nats and in bits.
double isi_log_density(double t, double theta, const GammaChannel& ch);
double isi_log2_density(double t, double theta, const GammaChannel& ch);

// P(R = r) for an ordinary renewal process started at the window's left edge:
// P(r kappa, delta/theta) - P((r+1) kappa, delta/theta), P the lower
// regularized incomplete gamma.
double count_pmf(std::size_t r, double theta, const CountChannelConfig& cfg);
double count_log_pmf(std::size_t r, double theta, const CountChannelConfig& cfg);

TruncatedCountPMF truncated_count_pmf(double theta, const CountChannelConfig& cfg);
CountMean count_mean(double theta, const CountChannelConfig& cfg);

// Monte-Carlo helpers. Deterministic for a given engine state.
double sample_isi(std::mt19937_64& rng, double theta, double kappa);
std::size_t sample_count(std::mt19937_64& rng, double theta, double kappa, double delta);

// Empirical count histogram from simulated spike trains; entry r is the
// fraction of trials with exactly r spikes in [0, delta].
std::vector<double> simulate_count_histogram(double theta, const CountChannelConfig& cfg,
                                             std::size_t trials, std::uint64_t seed);

namespace detail {

// Unchecked kernels in dimensionless form. x = delta / theta.
double count_log_pmf(std::size_t r, double kappa, double x);
// P(R >= r) = P(r kappa, x); equals 1 for r = 0.
double count_log_tail(std::size_t r, double kappa, double x);
// Smallest r with P(R > r) <= tail_tol, or count_cap + 1 when none is found.
std::size_t count_truncation(double kappa, double x, double tail_tol, std::size_t count_cap);

}  // namespace detail

}  // namespace neurocap
