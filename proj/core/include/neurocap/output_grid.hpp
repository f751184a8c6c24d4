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
#include <span>
#include <vector>

#include "neurocap/ensemble.hpp"

namespace neurocap {

// Finite-output surrogate of a ChannelModel used inside the solvers.
//
// Temporal coding: the ISI axis is mapped to u = log(t / theta_min) and
// covered by a composite Gauss-Legendre rule wide enough that every input's
// tails beyond it carry < 1e-17 mass; the mass of output j is
// weight_j * t_j * p(t_j | theta). Rate coding: counts 0..R-1 plus a tail
// bin {R, R+1, ...}, R = truncation index of the fastest input plus one.
// Times are handled in units of theta_min, so the surrogate is invariant
// under a joint rescaling of (a0, b0, delta).
class DiscretizedChannel {
 public:
  explicit DiscretizedChannel(const ChannelModel& model);

  std::size_t outputs() const { return outputs_; }
  const ChannelModel& model() const { return model_; }

  // Output masses of one input; sums to one.
  void row(double theta, std::span<double> out) const;
  // Row-major matrix for many inputs.
  std::vector<double> rows(std::span<const double> thetas) const;

  // D(row(theta) || exp(log_marginal)) in bits.
  double info_density(double theta, std::span<const double> log_marginal) const;

  // log of the output marginal for inputs/weights given as a row matrix.
  static std::vector<double> log_marginal(std::span<const double> rows, std::size_t outputs,
                                          std::span<const double> weights);

 private:
  ChannelModel model_;
  std::size_t outputs_ = 0;
  // Temporal: log t (units of theta_min) and log(weight * t) per node.
  std::vector<double> log_t_;
  std::vector<double> log_jacobian_;
  std::vector<double> t_;
};

}  // namespace neurocap
