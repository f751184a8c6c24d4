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
#include "neurocap/tuning.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "neurocap/error.hpp"
#include "neurocap/info_density.hpp"

namespace neurocap {
namespace {

constexpr double kStimulusTol = 1e-10;
constexpr double kBisectionTol = 1e-12;

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void check_support(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ValidationError("stimulus: support needs finite lo < hi");
  }
}

}  // namespace

StimulusDistribution StimulusDistribution::uniform(double lo, double hi) {
  check_support(lo, hi);
  return StimulusDistribution(Kind::kUniform, lo, hi);
}

StimulusDistribution StimulusDistribution::beta(double alpha, double beta, double lo, double hi) {
  check_support(lo, hi);
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw ValidationError("stimulus: beta parameters must be positive");
  }
  StimulusDistribution s(Kind::kBeta, lo, hi);
  s.params_ = {alpha, beta};
  return s;
}

StimulusDistribution StimulusDistribution::piecewise_linear(std::vector<double> xs,
                                                            std::vector<double> densities,
                                                            Normalization mode) {
  if (xs.size() < 2 || xs.size() != densities.size()) {
    throw ValidationError("stimulus: piecewise-linear density needs >= 2 knots and one value each");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || (i > 0 && !(xs[i] > xs[i - 1]))) {
      throw ValidationError("stimulus: knots must be finite and strictly increasing");
    }
    if (!std::isfinite(densities[i]) || densities[i] < 0.0) {
      throw ValidationError("stimulus: density at knot " + num(xs[i]) + " must be >= 0");
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    total += 0.5 * (densities[i] + densities[i + 1]) * (xs[i + 1] - xs[i]);
  }
  if (!(total > 0.0)) throw ValidationError("stimulus: density has zero mass");
  if (mode == Normalization::kRenormalize) {
    for (double& d : densities) d /= total;
  } else if (std::abs(total - 1.0) > kStimulusTol) {
    throw ValidationError("stimulus: density integrates to " + num(total) + ", not 1");
  }
  StimulusDistribution s(Kind::kPiecewiseLinear, xs.front(), xs.back());
  s.cum_.assign(xs.size(), 0.0);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    s.cum_[i + 1] = s.cum_[i] + 0.5 * (densities[i] + densities[i + 1]) * (xs[i + 1] - xs[i]);
  }
  s.xs_ = std::move(xs);
  s.ds_ = std::move(densities);
  return s;
}

double StimulusDistribution::pdf(double x) const {
  if (x < lo_ || x > hi_) return 0.0;
  const double w = hi_ - lo_;
  switch (kind_) {
    case Kind::kUniform:
      return 1.0 / w;
    case Kind::kBeta:
      return boost::math::ibeta_derivative(params_[0], params_[1], (x - lo_) / w) / w;
    case Kind::kPiecewiseLinear: {
      const auto i = std::min<std::size_t>(
          std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin(), xs_.size() - 1);
      const double f = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
      return ds_[i - 1] + f * (ds_[i] - ds_[i - 1]);
    }
  }
  return 0.0;
}

double StimulusDistribution::cdf(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return 1.0;
  const double w = hi_ - lo_;
  switch (kind_) {
    case Kind::kUniform:
      return (x - lo_) / w;
    case Kind::kBeta:
      return boost::math::ibeta(params_[0], params_[1], (x - lo_) / w);
    case Kind::kPiecewiseLinear: {
      const auto i = std::min<std::size_t>(
          std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin(), xs_.size() - 1);
      const double h = xs_[i] - xs_[i - 1];
      const double s = x - xs_[i - 1];
      return std::min(1.0, cum_[i - 1] + ds_[i - 1] * s + 0.5 * (ds_[i] - ds_[i - 1]) * s * s / h);
    }
  }
  return 0.0;
}

void StimulusDistribution::check_not_flat(double p) const {
  if (kind_ != Kind::kPiecewiseLinear) return;
  for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
    if (ds_[i] > 0.0 || ds_[i + 1] > 0.0) continue;
    if (std::abs(p - cum_[i]) <= kBisectionTol) {
      throw ValidationError("stimulus: quantile " + num(p) + " falls on the zero-density region [" +
                            num(xs_[i]) + ", " + num(xs_[i + 1]) + "]");
    }
  }
}

double StimulusDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("stimulus: quantile level outside [0, 1]");
  check_not_flat(p);
  double a = lo_;
  double b = hi_;
  const double stop = kBisectionTol * (hi_ - lo_);
  while (b - a > stop) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (cdf(mid) >= p) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return b;
}

std::string StimulusDistribution::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::kUniform:
      os << "uniform:" << lo_ << ',' << hi_;
      break;
    case Kind::kBeta:
      os << "beta:" << params_[0] << ',' << params_[1] << ',' << lo_ << ',' << hi_;
      break;
    case Kind::kPiecewiseLinear:
      os << "pwl:";
      for (std::size_t i = 0; i < xs_.size(); ++i) {
        os << (i ? ";" : "") << xs_[i] << ',' << ds_[i];
      }
      break;
  }
  return os.str();
}

std::vector<double> quantile_partition(const StimulusDistribution& stimulus,
                                       const std::vector<double>& weights) {
  if (weights.empty()) throw ValidationError("quantile_partition: no weights");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("quantile_partition: weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kPmfTolerance) {
    throw ValidationError("quantile_partition: weights sum to " + num(total) + ", not 1");
  }
  std::vector<double> x(weights.size() + 1);
  x.front() = stimulus.lo();
  x.back() = stimulus.hi();
  double cum = 0.0;
  for (std::size_t m = 0; m + 1 < weights.size(); ++m) {
    cum += weights[m];
    x[m + 1] = std::max(x[m], stimulus.quantile(std::min(cum, 1.0)));
  }
  return x;
}

std::string to_string(TuningDirection direction) {
  switch (direction) {
    case TuningDirection::kDefault:
      return "default";
    case TuningDirection::kIncreasing:
      return "increasing";
    case TuningDirection::kDecreasing:
      return "decreasing";
  }
  return "default";
}

TuningDirection parse_tuning_direction(const std::string& text) {
  if (text == "default") return TuningDirection::kDefault;
  if (text == "increasing") return TuningDirection::kIncreasing;
  if (text == "decreasing") return TuningDirection::kDecreasing;
  throw ValidationError("unknown tuning direction '" + text + "'");
}

double TuningCurve::level_at(double x) const {
  if (breakpoints.size() != levels.size() + 1 || levels.empty()) {
    throw ValidationError("tuning curve: breakpoints and levels do not match");
  }
  if (!(x >= breakpoints.front() && x <= breakpoints.back())) {
    throw DomainError("tuning curve: x = " + num(x) + " outside the stimulus support");
  }
  const auto it = std::lower_bound(breakpoints.begin() + 1, breakpoints.end(), x);
  const auto m = static_cast<std::size_t>(it - breakpoints.begin() - 1);
  return levels[std::min(m, levels.size() - 1)];
}

TuningCurve build_tuning_curve(const CapacitySolution& solution,
                               const StimulusDistribution& stimulus, TuningDirection direction) {
  if (!solution.certificate.passed) {
    throw ValidationError("build_tuning_curve: solution is not certified");
  }
  if (direction == TuningDirection::kDefault) {
    direction = solution.coding() == Coding::kRate ? TuningDirection::kDecreasing
                                                   : TuningDirection::kIncreasing;
  }
  TuningCurve curve;
  curve.coding = solution.coding();
  curve.levels = solution.ensemble.points();
  curve.weights = solution.ensemble.weights();
  if (direction == TuningDirection::kDecreasing) {
    std::reverse(curve.levels.begin(), curve.levels.end());
    std::reverse(curve.weights.begin(), curve.weights.end());
  }
  curve.breakpoints = quantile_partition(stimulus, curve.weights);
  return curve;
}

double mean_response(const TuningCurve& curve, double x, double kappa, double delta) {
  if (!(kappa > 0.0)) throw ValidationError("mean_response: kappa must be positive");
  const double theta = curve.level_at(x);
  if (curve.coding == Coding::kTemporal) return kappa * theta;
  if (!(delta > 0.0)) throw ValidationError("mean_response: delta must be positive");
  return delta / (kappa * theta);
}

TuningCheck verify_tuning_mi(const TuningCurve& curve, const StimulusDistribution& stimulus,
                             const ChannelModel& model, double capacity_per_use) {
  if (curve.breakpoints.size() != curve.levels.size() + 1 || curve.levels.empty()) {
    throw ValidationError("verify_tuning_mi: breakpoints and levels do not match");
  }
  std::map<double, double> law;
  for (std::size_t m = 0; m < curve.levels.size(); ++m) {
    const double mass =
        stimulus.cdf(curve.breakpoints[m + 1]) - stimulus.cdf(curve.breakpoints[m]);
    if (mass > 0.0) law[curve.levels[m]] += mass;
  }
  std::vector<double> points;
  std::vector<double> weights;
  double total = 0.0;
  for (const auto& [theta, mass] : law) {
    points.push_back(theta);
    weights.push_back(mass);
    total += mass;
  }
  for (double& w : weights) w /= total;
  const double mi = ensemble_mi(InputEnsemble(std::move(points), std::move(weights)), model);
  return {mi, capacity_per_use - mi};
}

TuningCheck verify_tuning_mi(const TuningCurve& curve, const StimulusDistribution& stimulus,
                             const CapacitySolution& solution) {
  return verify_tuning_mi(curve, stimulus, solution.model, solution.capacity_per_use);
}

std::vector<StaircaseSample> sample_staircase(const TuningCurve& curve, double kappa, double delta,
                                              std::size_t n) {
  if (n < 2) throw ValidationError("sample_staircase: need at least two samples");
  const double lo = curve.breakpoints.front();
  const double hi = curve.breakpoints.back();
  std::vector<StaircaseSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x =
        i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    out[i] = {x, curve.level_at(x), mean_response(curve, x, kappa, delta)};
  }
  return out;
}

}  // namespace neurocap
