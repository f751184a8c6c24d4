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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "neurocap/ensemble.hpp"
#include "neurocap/error.hpp"

namespace neurocap {

// Optimality certificate for an input ensemble: i(theta) <= C on a probe grid
// covering the input interval, with equality at every support point.
struct KKTReport {
  std::vector<double> grid;          // probe inputs, seconds
  std::vector<double> info_density;  // i(theta) at each probe, bits
  double capacity_ref = 0.0;         // bits
  double max_violation = 0.0;        // max_probe i(theta) - C, bits
  double at_support_gap = 0.0;       // max_i |i(theta_i) - C|, bits
  double slack_tol = 0.0;            // bits
  bool passed = false;
};

struct CapacitySolution {
  InputEnsemble ensemble;
  ChannelModel model;
  double capacity_per_use = 0.0;  // bits per spike (temporal) or per window (rate)
  double capacity_bps = 0.0;
  // Bracket of the optimizer on its discretized problem, bits.
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  KKTReport certificate;
  std::string method;

  Coding coding() const { return model.coding(); }
};

// Raised when a solver exhausts its budget; carries the best solution found.
class SolverConvergenceError : public ConvergenceError {
 public:
  SolverConvergenceError(const std::string& what, CapacitySolution best);
  const CapacitySolution& best() const { return *best_; }

 private:
  std::shared_ptr<const CapacitySolution> best_;
};

inline constexpr double kDefaultSlackTol = 1e-4;
inline constexpr std::size_t kDefaultProbeCount = 2001;

// n points spaced uniformly in log(theta) from theta_min to theta_max.
std::vector<double> input_grid(const GammaChannel& channel, std::size_t n);

struct GridOptions {
  std::size_t grid_n = 2001;
  double tol = 1e-4;  // Blahut-Arimoto bound gap, bits
  std::size_t max_iter = 200'000;
  double max_relaxation = 16.0;  // over-relaxation cap; 1 gives plain Blahut-Arimoto
  double prune_threshold = 1e-6;
  std::size_t probe_n = kDefaultProbeCount;
  double slack_tol = kDefaultSlackTol;
  unsigned threads = 1;
};

// Brute-force oracle: Blahut-Arimoto over a fixed input grid. Running out of
// iterations raises SolverConvergenceError with the pruned iterate.
CapacitySolution grid_capacity(const ChannelModel& model, const GridOptions& options = {});

struct ParticleOptions {
  double tol = kDefaultSlackTol;  // KKT slack the result must certify at, bits
  std::size_t seed_n = 101;       // log-spaced seed grid when no init is given
  double prune_threshold = 1e-6;
  double merge_fraction = 1e-4;   // merge points closer than this * |Omega|
  std::size_t max_rounds = 80;
  std::size_t probe_n = kDefaultProbeCount;
  unsigned threads = 1;
};

// Alternates weight optimization, pruning/merging and local repositioning of
// mass points until the KKT certificate passes.
CapacitySolution particle_capacity(const ChannelModel& model, const ParticleOptions& options = {},
                                   const std::optional<InputEnsemble>& init = std::nullopt);

KKTReport kkt_verify(const CapacitySolution& solution, std::size_t probe_n = kDefaultProbeCount,
                     double slack_tol = kDefaultSlackTol, unsigned threads = 1);

// Rate coding: C / delta. Temporal coding: C / E_pi[T] with E_pi[T] = sum w_i kappa theta_i.
double capacity_bps(double capacity_per_use, const InputEnsemble& ensemble,
                    const ChannelModel& model);
double capacity_bps(const CapacitySolution& solution);

}  // namespace neurocap
