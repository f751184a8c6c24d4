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
#include "neurocap/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "neurocap/blahut_arimoto.hpp"
#include "neurocap/error.hpp"
#include "neurocap/information.hpp"
#include "neurocap/special_functions.hpp"

namespace neurocap {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Owners of the upper envelope of the lines c_k - t / theta_k over t >= 0.
// Slopes increase with k, so ownership only moves to larger k as t grows.
std::vector<DecisionRegion> temporal_regions(const InputEnsemble& ens, double kappa) {
  const auto& th = ens.points();
  const std::size_t m = th.size();
  std::vector<double> c(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double w = ens.weights()[k];
    c[k] = w > 0.0 ? std::log(w) - kappa * std::log(th[k]) : -kInf;
  }
  std::size_t owner = 0;
  for (std::size_t k = 1; k < m; ++k) {
    if (c[k] >= c[owner]) owner = k;
  }
  std::vector<DecisionRegion> out;
  double t = 0.0;
  while (true) {
    std::size_t next = m;
    double cross = kInf;
    for (std::size_t j = owner + 1; j < m; ++j) {
      if (!std::isfinite(c[j])) continue;
      // Equal crossings go to the larger index, which dominates afterwards.
      const double tj = std::max(t, (c[owner] - c[j]) / (1.0 / th[owner] - 1.0 / th[j]));
      if (tj <= cross) {
        cross = tj;
        next = j;
      }
    }
    if (next == m) {
      out.push_back({owner, t, kInf});
      break;
    }
    if (cross > t) out.push_back({owner, t, cross});
    t = cross;
    owner = next;
  }
  return out;
}

double gamma_interval_mass(double kappa, double lo, double hi) {
  if (hi <= lo) return 0.0;
  const double p_lo = gamma_p(kappa, lo);
  if (p_lo < 0.5) return (std::isfinite(hi) ? gamma_p(kappa, hi) : 1.0) - p_lo;
  return gamma_q(kappa, lo) - (std::isfinite(hi) ? gamma_q(kappa, hi) : 0.0);
}

std::vector<DecisionRegion> rate_regions(const InputEnsemble& ens, const ChannelModel& model,
                                         std::size_t r_last) {
  const auto& th = ens.points();
  const double kappa = model.gamma().kappa();
  std::vector<DecisionRegion> out;
  for (std::size_t r = 0; r <= r_last; ++r) {
    std::size_t owner = 0;
    double best = -kInf;
    for (std::size_t k = 0; k < th.size(); ++k) {
      const double w = ens.weights()[k];
      if (!(w > 0.0)) continue;
      const double s = std::log(w) + detail::count_log_pmf(r, kappa, model.delta() / th[k]);
      if (s > best) {
        best = s;
        owner = k;
      }
    }
    const double rr = static_cast<double>(r);
    if (!out.empty() && out.back().owner == owner) {
      out.back().hi = rr + 1.0;
    } else {
      out.push_back({owner, rr, rr + 1.0});
    }
  }
  out.back().hi = kInf;
  return out;
}

}  // namespace

DecoderPartition hard_decoder(const InputEnsemble& ensemble, const ChannelModel& model) {
  if (ensemble.size() < 2) throw ValidationError("hard_decoder: ensemble needs at least two points");
  ensemble.check_within(model.gamma());
  const std::size_t m = ensemble.size();
  const double kappa = model.gamma().kappa();
  const auto& th = ensemble.points();

  std::vector<DecisionRegion> regions;
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  if (model.coding() == Coding::kTemporal) {
    regions = temporal_regions(ensemble, kappa);
    for (std::size_t k = 0; k < m; ++k) {
      for (const auto& reg : regions) {
        rows[k][reg.owner] += gamma_interval_mass(kappa, reg.lo / th[k], reg.hi / th[k]);
      }
    }
  } else {
    std::size_t r_last = 0;
    for (double theta : th) {
      r_last = std::max(r_last, detail::count_truncation(kappa, model.delta() / theta,
                                                         model.tail_tol(), model.count_cap()));
    }
    if (r_last > model.count_cap()) {
      throw ValidationError("hard_decoder: count truncation exceeds the configured cap");
    }
    regions = rate_regions(ensemble, model, r_last);
    for (std::size_t k = 0; k < m; ++k) {
      const double x = model.delta() / th[k];
      for (const auto& reg : regions) {
        const auto lo = static_cast<std::size_t>(reg.lo);
        double mass;
        if (std::isfinite(reg.hi)) {
          mass = 0.0;
          for (auto r = lo; r < static_cast<std::size_t>(reg.hi); ++r) {
            mass += std::exp(detail::count_log_pmf(r, kappa, x));
          }
        } else {
          mass = std::exp(detail::count_log_tail(lo, kappa, x));
        }
        rows[k][reg.owner] += mass;
      }
    }
  }

  std::vector<std::string> in_labels;
  std::vector<std::string> out_labels;
  for (std::size_t k = 0; k < m; ++k) {
    in_labels.push_back("theta" + std::to_string(k));
    out_labels.push_back("decide" + std::to_string(k));
  }
  ChannelMatrix induced(in_labels, out_labels, std::move(rows), Normalization::kRenormalize);

  std::vector<bool> owns(m, false);
  std::vector<double> boundaries;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    owns[regions[i].owner] = true;
    if (i > 0) boundaries.push_back(regions[i].lo);
  }
  std::vector<std::size_t> empty;
  for (std::size_t k = 0; k < m; ++k) {
    if (!owns[k]) empty.push_back(k);
  }

  const auto ba = blahut_arimoto(induced, 1e-12, 1'000'000);
  const DiscretePMF input(in_labels, ensemble.weights(), Normalization::kRenormalize);
  const double mi = mutual_information(JointPMF::from_channel(input, induced));
  return DecoderPartition{
      .coding = model.coding(),
      .boundaries = std::move(boundaries),
      .regions = std::move(regions),
      .induced_channel = std::move(induced),
      .hard_rate = ba.capacity,
      .hard_mi_at_ensemble = mi,
      .empty_owners = std::move(empty),
  };
}

DecoderPartition hard_decoder(const CapacitySolution& solution) {
  return hard_decoder(solution.ensemble, solution.model);
}

}  // namespace neurocap
