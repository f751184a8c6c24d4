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
#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "neurocap/blahut_arimoto.hpp"
#include "neurocap/capacity.hpp"
#include "neurocap/info_density.hpp"
#include "neurocap/special_functions.hpp"

namespace {

using namespace neurocap;

void BM_LogGammaQ(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  double x = 0.5 * a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma_q(a, x));
    x = x < 2.0 * a ? x * 1.01 : 0.5 * a;
  }
}
BENCHMARK(BM_LogGammaQ)->Arg(1)->Arg(30)->Arg(3000);

ChannelModel model(bool rate, double kappa) {
  const GammaChannel ch(kappa, kDefaultA0, kDefaultB0);
  return rate ? ChannelModel::rate(CountChannelConfig(ch, kDefaultDelta))
              : ChannelModel::temporal(ch);
}

void BM_InfoDensity(benchmark::State& state) {
  const auto m = model(state.range(0) != 0, 3.0);
  const InfoDensity density(InputEnsemble({0.001, 0.003, 0.01}, {0.4, 0.2, 0.4}), m);
  double theta = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(density(theta));
    theta = theta * 1.03 < 0.01 ? theta * 1.03 : 0.001;
  }
}
BENCHMARK(BM_InfoDensity)->ArgName("rate")->Arg(0)->Arg(1);

void BM_BlahutArimoto(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double d = static_cast<double>(i) - static_cast<double>(j);
      rows[i][j] = std::exp(-0.5 * d * d / 4.0);
      total += rows[i][j];
    }
    for (double& v : rows[i]) v /= total;
  }
  const auto ch = ChannelMatrix::from_rows(rows);
  for (auto _ : state) benchmark::DoNotOptimize(blahut_arimoto(ch, 1e-6, 10'000'000).capacity);
}
BENCHMARK(BM_BlahutArimoto)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ParticleCapacity(benchmark::State& state) {
  const auto m = model(state.range(0) != 0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(particle_capacity(m).capacity_per_use);
}
BENCHMARK(BM_ParticleCapacity)->ArgName("rate")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
