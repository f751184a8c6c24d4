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
#include "neurocap/ensemble.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "neurocap/error.hpp"
#include "neurocap/pmf.hpp"

namespace neurocap {

std::string to_string(Coding coding) {
  return coding == Coding::kTemporal ? "temporal" : "rate";
}

Coding parse_coding(std::string_view text) {
  if (text == "temporal") return Coding::kTemporal;
  if (text == "rate") return Coding::kRate;
  throw ValidationError("coding must be 'temporal' or 'rate', got '" + std::string(text) + "'");
}

ChannelModel::ChannelModel(Coding coding, GammaChannel gamma, double delta, double tail_tol,
                           std::size_t count_cap)
    : coding_(coding), gamma_(gamma), delta_(delta), tail_tol_(tail_tol), count_cap_(count_cap) {}

ChannelModel ChannelModel::temporal(const GammaChannel& channel) {
  return ChannelModel(Coding::kTemporal, channel, kDefaultDelta, kDefaultTailTol,
                      kDefaultCountCap);
}

ChannelModel ChannelModel::rate(const CountChannelConfig& config) {
  return ChannelModel(Coding::kRate, config.base, config.delta, config.tail_tol,
                      config.count_cap);
}

CountChannelConfig ChannelModel::count_config() const {
  return CountChannelConfig(gamma_, delta_, tail_tol_, count_cap_);
}

ChannelModel ChannelModel::rescaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw ValidationError("time rescaling factor must be positive");
  }
  GammaChannel g(gamma_.kappa(), gamma_.a0() * factor, gamma_.b0() * factor);
  return ChannelModel(coding_, g, delta_ * factor, tail_tol_, count_cap_);
}

InputEnsemble::InputEnsemble(std::vector<double> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw ValidationError("ensemble: no mass points");
  if (points_.size() != weights_.size()) {
    throw ValidationError("ensemble: points and weights differ in length");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(points_[i] > 0.0) || !std::isfinite(points_[i])) {
      throw ValidationError("ensemble: mass point " + std::to_string(i) + " is not positive");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw ValidationError("ensemble: mass points must be strictly increasing");
    }
    if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) {
      throw ValidationError("ensemble: weight " + std::to_string(i) + " is negative");
    }
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > kPmfTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "ensemble: weights sum to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
}

InputEnsemble InputEnsemble::single(double theta) { return InputEnsemble({theta}, {1.0}); }

void InputEnsemble::check_within(const GammaChannel& channel) const {
  for (double theta : points_) channel.check_input(theta);
}

double InputEnsemble::mean_isi(double kappa) const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) m += weights_[i] * kappa * points_[i];
  return m;
}

}  // namespace neurocap
