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
#include <string>
#include <vector>

#include "neurocap/capacity.hpp"
#include "neurocap/pmf.hpp"

namespace neurocap {

// Stimulus law on a bounded interval [x_lo, x_hi].
class StimulusDistribution {
 public:
  enum class Kind { kUniform, kBeta, kPiecewiseLinear };

  static StimulusDistribution uniform(double lo, double hi);
  // Beta(alpha, beta) stretched onto [lo, hi].
  static StimulusDistribution beta(double alpha, double beta, double lo = 0.0, double hi = 1.0);
  // Density linear between the knots xs (strictly increasing) with the given
  // nonnegative values. Zero-density stretches are accepted here; they only
  // fail when a quantile lands inside one.
  static StimulusDistribution piecewise_linear(std::vector<double> xs,
                                               std::vector<double> densities,
                                               Normalization mode = Normalization::kStrict);

  Kind kind() const { return kind_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& parameters() const { return params_; }
  const std::vector<double>& knots() const { return xs_; }
  const std::vector<double>& knot_densities() const { return ds_; }

  double pdf(double x) const;
  double cdf(double x) const;
  // Smallest x with cdf(x) >= p, by bisection to 1e-12 of the support width.
  double quantile(double p) const;

  // "uniform:0,1", "beta:2,2" style description (the CLI syntax).
  std::string describe() const;

 private:
  StimulusDistribution(Kind kind, double lo, double hi) : kind_(kind), lo_(lo), hi_(hi) {}
  // Throws ValidationError naming the zero-density stretch that p falls on.
  void check_not_flat(double p) const;

  Kind kind_;
  double lo_;
  double hi_;
  std::vector<double> params_;  // beta: alpha, beta
  std::vector<double> xs_;      // piecewise linear
  std::vector<double> ds_;
  std::vector<double> cum_;  // CDF at each knot
};

// Breakpoints x_0 = lo < x_1 < ... < x_M = hi with P(x_{m-1} < X <= x_m) = w_m.
std::vector<double> quantile_partition(const StimulusDistribution& stimulus,
                                       const std::vector<double>& weights);

// Orientation of theta = f(x).
enum class TuningDirection {
  kDefault,     // rate coding: decreasing (rate grows with x); temporal: increasing
  kIncreasing,  // theta grows with x
  kDecreasing,
};

std::string to_string(TuningDirection direction);
TuningDirection parse_tuning_direction(const std::string& text);

// Monotone staircase f: interval m = (x_{m-1}, x_m] (the first one closed at
// x_lo) maps to levels[m-1], a theta value in seconds.
struct TuningCurve {
  std::vector<double> breakpoints;
  std::vector<double> levels;
  std::vector<double> weights;  // ensemble weight of each level
  Coding coding = Coding::kRate;

  double level_at(double x) const;
};

// Requires a solution whose KKT certificate passed.
TuningCurve build_tuning_curve(const CapacitySolution& solution,
                               const StimulusDistribution& stimulus,
                               TuningDirection direction = TuningDirection::kDefault);

// Temporal: mean ISI kappa f(x). Rate: delta / (kappa f(x)), the renewal-rate
// count; the exact finite-window mean is count_mean.
double mean_response(const TuningCurve& curve, double x, double kappa, double delta);

struct TuningCheck {
  double mi = 0.0;   // I(X; output), bits
  double gap = 0.0;  // capacity - mi, bits
};

// I(X; output) of x -> f(x) -> channel. Since f is deterministic this is the
// MI of the theta-law the curve induces, with level masses read off the
// stimulus CDF.
TuningCheck verify_tuning_mi(const TuningCurve& curve, const StimulusDistribution& stimulus,
                             const ChannelModel& model, double capacity_per_use);
TuningCheck verify_tuning_mi(const TuningCurve& curve, const StimulusDistribution& stimulus,
                             const CapacitySolution& solution);

struct StaircaseSample {
  double x = 0.0;
  double level = 0.0;
  double mean_response = 0.0;
};

// n >= 2 evenly spaced stimulus values across the support.
std::vector<StaircaseSample> sample_staircase(const TuningCurve& curve, double kappa, double delta,
                                              std::size_t n);

}  // namespace neurocap
