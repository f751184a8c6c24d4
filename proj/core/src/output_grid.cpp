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
#include "neurocap/output_grid.hpp"

#include <algorithm>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <numbers>

#include "neurocap/error.hpp"
#include "neurocap/quadrature.hpp"
#include "neurocap/special_functions.hpp"

namespace neurocap {
namespace {

constexpr double kTail = 1e-17;
constexpr double kLogFloor = -745.0;

}  // namespace

DiscretizedChannel::DiscretizedChannel(const ChannelModel& model) : model_(model) {
  const double kappa = model_.gamma().kappa();
  const double ratio = model_.gamma().theta_max() / model_.gamma().theta_min();
  if (model_.coding() == Coding::kTemporal) {
    const double u_lo = std::log(gamma_lower_quantile(kappa, kTail));
    const double u_hi = std::log(gamma_upper_quantile(kappa, kTail) * ratio);
    // Panels resolve the spread of log T, whose standard deviation is sqrt(trigamma(kappa)).
    const double spread = std::sqrt(boost::math::trigamma(kappa));
    const auto rule = composite_gauss_legendre(u_lo, u_hi, std::min(0.25, 0.4 * spread));
    outputs_ = rule.nodes.size();
    log_t_ = rule.nodes;
    t_.resize(outputs_);
    log_jacobian_.resize(outputs_);
    for (std::size_t j = 0; j < outputs_; ++j) {
      t_[j] = std::exp(log_t_[j]);
      log_jacobian_[j] = std::log(rule.weights[j]) + log_t_[j];
    }
    return;
  }
  const double x_max = model_.delta() / model_.gamma().theta_min();
  const std::size_t r_max =
      detail::count_truncation(kappa, x_max, model_.tail_tol(), model_.count_cap());
  if (r_max > model_.count_cap()) {
    throw ValidationError("rate coding: count truncation exceeds the configured cap");
  }
  outputs_ = r_max + 2;
}

void DiscretizedChannel::row(double theta, std::span<double> out) const {
  if (out.size() != outputs_) throw ValidationError("discretized channel: row size mismatch");
  const double kappa = model_.gamma().kappa();
  const double rho = theta / model_.gamma().theta_min();
  if (model_.coding() == Coding::kTemporal) {
    const double c = -log_gamma(kappa) - kappa * std::log(rho);
    double total = 0.0;
    for (std::size_t j = 0; j < outputs_; ++j) {
      const double lp = (kappa - 1.0) * log_t_[j] - t_[j] / rho + c + log_jacobian_[j];
      out[j] = lp > kLogFloor ? std::exp(lp) : 0.0;
      total += out[j];
    }
    for (double& v : out) v /= total;
    return;
  }
  const double x = model_.delta() / theta;
  const std::size_t tail_bin = outputs_ - 1;
  for (std::size_t r = 0; r < tail_bin; ++r) out[r] = std::exp(detail::count_log_pmf(r, kappa, x));
  out[tail_bin] = std::exp(detail::count_log_tail(tail_bin, kappa, x));
}

std::vector<double> DiscretizedChannel::rows(std::span<const double> thetas) const {
  std::vector<double> m(thetas.size() * outputs_);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    row(thetas[i], std::span<double>(m).subspan(i * outputs_, outputs_));
  }
  return m;
}

double DiscretizedChannel::info_density(double theta, std::span<const double> log_marginal) const {
  std::vector<double> r(outputs_);
  row(theta, r);
  double d = 0.0;
  for (std::size_t j = 0; j < outputs_; ++j) {
    if (r[j] > 0.0) d += r[j] * (std::log(r[j]) - log_marginal[j]);
  }
  return std::max(d, 0.0) / std::numbers::ln2;
}

std::vector<double> DiscretizedChannel::log_marginal(std::span<const double> rows,
                                                     std::size_t outputs,
                                                     std::span<const double> weights) {
  std::vector<double> m(outputs, 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0.0) continue;
    const double* row = rows.data() + i * outputs;
    for (std::size_t j = 0; j < outputs; ++j) m[j] += weights[i] * row[j];
  }
  for (double& v : m) v = v > 0.0 ? std::log(v) : kLogFloor;
  return m;
}

}  // namespace neurocap
