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

#include <span>
#include <vector>

#include "neurocap/ensemble.hpp"

namespace neurocap {

// Marginal information density i(theta) = D(p(.|theta) || p(.; pi)) in bits,
// for a fixed input ensemble pi. Temporal coding integrates over the ISI with
// adaptive Gauss-Kronrod quadrature; rate coding sums the count law up to its
// truncation index.
class InfoDensity {
 public:
  // abs_tol bounds the quadrature error of each temporal evaluation, bits.
  InfoDensity(InputEnsemble ensemble, ChannelModel model, double abs_tol = 1e-10);

  // Throws DomainError if theta lies outside the channel's input interval.
  double operator()(double theta) const;

  // Evaluates at many inputs, split across up to 'threads' workers.
  std::vector<double> evaluate(std::span<const double> thetas, unsigned threads = 1) const;

  // sum_i w_i i(theta_i).
  double mutual_information() const;

  const InputEnsemble& ensemble() const { return ensemble_; }
  const ChannelModel& model() const { return model_; }

  // log p(y; pi) for an ISI t (seconds) or a count r, nats.
  double log_marginal_isi(double t) const;
  double log_marginal_count(std::size_t r) const;

 private:
  double temporal(double theta) const;
  double rate(double theta) const;

  InputEnsemble ensemble_;
  ChannelModel model_;
  double abs_tol_;
  std::vector<double> log_weights_;
  // Rate coding: log p(r; pi) for r = 0..count_limit_.
  std::vector<double> log_marginal_counts_;
  double log_s_lo_ = 0.0;
  double log_s_hi_ = 0.0;
};

double marginal_info_density(double theta, const InputEnsemble& ensemble,
                             const ChannelModel& model);

// Mutual information per channel use (per spike or per window), bits.
double ensemble_mi(const InputEnsemble& ensemble, const ChannelModel& model);

}  // namespace neurocap
