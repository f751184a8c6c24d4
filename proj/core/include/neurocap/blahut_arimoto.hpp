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
#include <functional>
#include <span>
#include <vector>

#include "neurocap/pmf.hpp"

namespace neurocap {

// Called once per iteration with the current lower bound I(w) and upper bound
// max_x D(p(.|x) || p_w) on capacity, both in bits.
using BlahutArimotoObserver =
    std::function<void(std::size_t iteration, double lower_bits, double upper_bits)>;

struct BlahutArimotoResult {
  double capacity = 0.0;     // lower bound at the returned input, bits
  double upper_bound = 0.0;  // certified upper bound on capacity, bits
  DiscretePMF optimal_input;
  std::size_t iterations = 0;
};

// Capacity of a discrete memoryless channel. Stops when the bound gap is below
// tol; throws ConvergenceError (carrying the best bracket) after max_iter.
BlahutArimotoResult blahut_arimoto(const ChannelMatrix& channel, double tol = 1e-9,
                                   std::size_t max_iter = 100000,
                                   const BlahutArimotoObserver& observer = {});

// Weight optimization on an unlabeled row-major channel. Rows need not be
// exactly normalized; this is the engine shared with the continuous solvers.
struct WeightOptimization {
  std::vector<double> weights;
  std::vector<double> info_density;  // D(p(.|x) || p_w) per input, bits
  double lower = 0.0;                // bits
  double upper = 0.0;                // bits
  std::size_t iterations = 0;
  bool converged = false;
};

// max_relaxation > 1 enables over-relaxed updates w_i <- w_i exp(mu D_i) with
// mu adapted in [1, max_relaxation]; a step that lowers I(w) is rejected and
// retried with mu halved, so the observed lower bounds stay nondecreasing.
WeightOptimization optimize_input_weights(std::span<const double> rows, std::size_t inputs,
                                          std::size_t outputs, std::vector<double> initial,
                                          double tol, std::size_t max_iter,
                                          const BlahutArimotoObserver& observer = {},
                                          double max_relaxation = 1.0);

}  // namespace neurocap
