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
#include <vector>

#include "neurocap/capacity.hpp"
#include "neurocap/pmf.hpp"

namespace neurocap {

// Outputs in [lo, hi) are decoded as support point 'owner'. Temporal coding
// uses ISIs in seconds; rate coding uses counts, with hi = +inf on the last
// region.
struct DecisionRegion {
  std::size_t owner = 0;
  double lo = 0.0;
  double hi = 0.0;
};

struct DecoderPartition {
  Coding coding = Coding::kTemporal;
  std::vector<double> boundaries;  // interior thresholds, increasing
  std::vector<DecisionRegion> regions;
  // Rows: support points. Columns: decisions, one per support point.
  ChannelMatrix induced_channel;
  double hard_rate = 0.0;            // capacity of the induced channel, bits
  double hard_mi_at_ensemble = 0.0;  // induced-channel MI at the ensemble weights, bits
  std::vector<std::size_t> empty_owners;  // support points that own no output
};

// MAP decision regions of the ensemble's posterior and the discrete channel
// they induce. Needs at least two support points.
DecoderPartition hard_decoder(const InputEnsemble& ensemble, const ChannelModel& model);
DecoderPartition hard_decoder(const CapacitySolution& solution);

}  // namespace neurocap
