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

#include <string>
#include <string_view>
#include <vector>

#include "neurocap/gamma_channel.hpp"

namespace neurocap {

enum class Coding { kTemporal, kRate };

std::string to_string(Coding coding);
Coding parse_coding(std::string_view text);

// A gamma ISI channel together with the observed output: the ISI itself
// (temporal coding) or the spike count in a window of length delta (rate).
class ChannelModel {
 public:
  static ChannelModel temporal(const GammaChannel& channel);
  static ChannelModel rate(const CountChannelConfig& config);

  Coding coding() const { return coding_; }
  const GammaChannel& gamma() const { return gamma_; }
  // Only meaningful for rate coding; temporal models keep the defaults.
  double delta() const { return delta_; }
  double tail_tol() const { return tail_tol_; }
  std::size_t count_cap() const { return count_cap_; }
  CountChannelConfig count_config() const;

  // Same law with every time quantity (a0, b0, delta) multiplied by factor.
  ChannelModel rescaled(double factor) const;

 private:
  ChannelModel(Coding coding, GammaChannel gamma, double delta, double tail_tol,
               std::size_t count_cap);

  Coding coding_;
  GammaChannel gamma_;
  double delta_;
  double tail_tol_;
  std::size_t count_cap_;
};

// Finitely supported input law: mass points theta_i (seconds, strictly
// increasing) with weights w_i summing to one.
class InputEnsemble {
 public:
  InputEnsemble(std::vector<double> points, std::vector<double> weights);

  static InputEnsemble single(double theta);

  std::size_t size() const { return points_.size(); }
  const std::vector<double>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }

  // Throws DomainError if any point lies outside the channel's input interval.
  void check_within(const GammaChannel& channel) const;

  // Sum of w_i kappa theta_i.
  double mean_isi(double kappa) const;

 private:
  std::vector<double> points_;
  std::vector<double> weights_;
};

}  // namespace neurocap
