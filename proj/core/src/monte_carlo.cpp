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
#include "neurocap/monte_carlo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "neurocap/error.hpp"
#include "neurocap/info_density.hpp"
#include "neurocap/special_functions.hpp"

namespace neurocap {
namespace {

constexpr std::size_t kBatches = 100;

}  // namespace

MonteCarloEstimate monte_carlo_mi(const InputEnsemble& ensemble, const ChannelModel& model,
                                  std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < kMinMonteCarloSamples) {
    throw ValidationError("monte_carlo_mi: n_samples must be at least 10000");
  }
  const InfoDensity density(ensemble, model);
  const double kappa = model.gamma().kappa();
  const auto& points = ensemble.points();
  const std::size_t m = points.size();

  // Rate coding: log p(r | theta_j) tabulated lazily as counts are drawn.
  std::vector<std::vector<double>> count_table(m);
  auto log_count = [&](std::size_t j, std::size_t r) {
    auto& t = count_table[j];
    const double x = model.delta() / points[j];
    while (t.size() <= r) t.push_back(detail::count_log_pmf(t.size(), kappa, x));
    return t[r];
  };
  std::vector<double> marginal_cache;
  auto log_marginal = [&](std::size_t r) {
    while (marginal_cache.size() <= r) {
      marginal_cache.push_back(density.log_marginal_count(marginal_cache.size()));
    }
    return marginal_cache[r];
  };

  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(ensemble.weights().begin(),
                                               ensemble.weights().end());
  const std::size_t per_batch = n_samples / kBatches;
  std::vector<double> batch_means(kBatches, 0.0);
  double total = 0.0;
  std::size_t drawn = 0;
  for (std::size_t b = 0; b < kBatches; ++b) {
    const std::size_t count = b + 1 == kBatches ? n_samples - drawn : per_batch;
    double acc = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t j = pick(rng);
      double ratio;
      if (model.coding() == Coding::kTemporal) {
        const double t = sample_isi(rng, points[j], kappa);
        ratio = gamma_log_pdf(t, kappa, points[j]) - density.log_marginal_isi(t);
      } else {
        const std::size_t r = sample_count(rng, points[j], kappa, model.delta());
        ratio = log_count(j, r) - log_marginal(r);
      }
      acc += ratio;
    }
    drawn += count;
    total += acc;
    batch_means[b] = acc / static_cast<double>(count) / std::numbers::ln2;
  }
  MonteCarloEstimate out;
  out.samples = n_samples;
  out.estimate = total / static_cast<double>(n_samples) / std::numbers::ln2;
  double ss = 0.0;
  for (double v : batch_means) ss += (v - out.estimate) * (v - out.estimate);
  out.std_error = std::sqrt(ss / static_cast<double>(kBatches - 1) / static_cast<double>(kBatches));
  return out;
}

}  // namespace neurocap
