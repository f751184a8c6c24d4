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

#include "neurocap/ensemble.hpp"

namespace neurocap {

struct MonteCarloEstimate {
  double estimate = 0.0;   // bits
  double std_error = 0.0;  // bits, from batch means
  std::size_t samples = 0;
};

inline constexpr std::size_t kMinMonteCarloSamples = 10000;

// Draws (theta, output) pairs from the ensemble and the channel (ISIs from
// the gamma law, counts from simulated spike trains) and averages the log
// ratio log p(y|theta) / p(y; pi). n_samples must be at least 1e4 and is
// split into 100 equal batches for the standard error.
MonteCarloEstimate monte_carlo_mi(const InputEnsemble& ensemble, const ChannelModel& model,
                                  std::size_t n_samples, std::uint64_t seed);

}  // namespace neurocap
