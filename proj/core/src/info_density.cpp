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
#include "neurocap/info_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "neurocap/error.hpp"
#include "neurocap/quadrature.hpp"
#include "neurocap/special_functions.hpp"

namespace neurocap {
namespace {

// Probability left outside the temporal integration range, per tail.
constexpr double kTemporalTail = 1e-17;

double log_sum_exp(std::span<const double> v) {
  double hi = -std::numeric_limits<double>::infinity();
  for (double x : v) hi = std::max(hi, x);
  if (!std::isfinite(hi)) return hi;
  double s = 0.0;
  for (double x : v) s += std::exp(x - hi);
  return hi + std::log(s);
}

}  // namespace

InfoDensity::InfoDensity(InputEnsemble ensemble, ChannelModel model, double abs_tol)
    : ensemble_(std::move(ensemble)), model_(std::move(model)), abs_tol_(abs_tol) {
  ensemble_.check_within(model_.gamma());
  if (!(abs_tol_ > 0.0)) throw ValidationError("info density: tolerance must be positive");
  log_weights_.reserve(ensemble_.size());
  for (double w : ensemble_.weights()) {
    log_weights_.push_back(w > 0.0 ? std::log(w) : -std::numeric_limits<double>::infinity());
  }
  const double kappa = model_.gamma().kappa();
  if (model_.coding() == Coding::kTemporal) {
    log_s_lo_ = std::log(gamma_lower_quantile(kappa, kTemporalTail));
    log_s_hi_ = std::log(gamma_upper_quantile(kappa, kTemporalTail));
    return;
  }
  // Every input in the interval truncates no later than the smallest theta does.
  const double x_max = model_.delta() / model_.gamma().theta_min();
  const std::size_t limit =
      detail::count_truncation(kappa, x_max, model_.tail_tol(), model_.count_cap());
  if (limit > model_.count_cap()) {
    throw ValidationError("rate coding: count truncation exceeds the configured cap");
  }
  log_marginal_counts_.resize(limit + 1);
  std::vector<double> terms(ensemble_.size());
  for (std::size_t r = 0; r <= limit; ++r) {
    for (std::size_t j = 0; j < ensemble_.size(); ++j) {
      const double x = model_.delta() / ensemble_.points()[j];
      terms[j] = log_weights_[j] + detail::count_log_pmf(r, kappa, x);
    }
    log_marginal_counts_[r] = log_sum_exp(terms);
  }
}

double InfoDensity::log_marginal_isi(double t) const {
  if (!(t > 0.0)) throw DomainError("ISI must be positive");
  const double kappa = model_.gamma().kappa();
  std::vector<double> terms(ensemble_.size());
  for (std::size_t j = 0; j < ensemble_.size(); ++j) {
    terms[j] = log_weights_[j] + gamma_log_pdf(t, kappa, ensemble_.points()[j]);
  }
  return log_sum_exp(terms);
}

double InfoDensity::log_marginal_count(std::size_t r) const {
  if (model_.coding() == Coding::kRate && r < log_marginal_counts_.size()) {
    return log_marginal_counts_[r];
  }
  std::vector<double> terms(ensemble_.size());
  for (std::size_t j = 0; j < ensemble_.size(); ++j) {
    const double x = model_.delta() / ensemble_.points()[j];
    terms[j] = log_weights_[j] + detail::count_log_pmf(r, model_.gamma().kappa(), x);
  }
  return log_sum_exp(terms);
}

double InfoDensity::temporal(double theta) const {
  // With s = t / theta and rho_j = theta / theta_j the log-likelihood ratio is
  //   log p(t|theta) - log p(t; pi) = -s - logsumexp_j(log w_j - s rho_j + kappa log rho_j),
  // and the integral is taken over u = log s against the Gamma(kappa, 1) law.
  const double kappa = model_.gamma().kappa();
  const double lg = log_gamma(kappa);
  const std::size_t m = ensemble_.size();
  std::vector<double> rho(m);
  std::vector<double> offset(m);
  for (std::size_t j = 0; j < m; ++j) {
    rho[j] = theta / ensemble_.points()[j];
    offset[j] = log_weights_[j] + kappa * std::log(rho[j]);
  }
  auto integrand = [&](double u) {
    const double s = std::exp(u);
    const double log_weight = kappa * u - s - lg;
    if (log_weight < -745.0) return 0.0;
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) hi = std::max(hi, offset[j] - s * rho[j]);
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) sum += std::exp(offset[j] - s * rho[j] - hi);
    const double log_ratio = -s - (hi + std::log(sum));
    return std::exp(log_weight) * log_ratio;
  };
  const double tol_nats = abs_tol_ * std::numbers::ln2;
  const auto result = integrate_adaptive(integrand, log_s_lo_, log_s_hi_, tol_nats, 1e-11);
  return std::max(result.value, 0.0) / std::numbers::ln2;
}

double InfoDensity::rate(double theta) const {
  const double kappa = model_.gamma().kappa();
  const double x = model_.delta() / theta;
  const std::size_t r_max =
      detail::count_truncation(kappa, x, model_.tail_tol(), model_.count_cap());
  double d = 0.0;
  for (std::size_t r = 0; r <= r_max; ++r) {
    const double lp = detail::count_log_pmf(r, kappa, x);
    if (!std::isfinite(lp)) continue;
    d += std::exp(lp) * (lp - log_marginal_count(r));
  }
  return std::max(d, 0.0) / std::numbers::ln2;
}

double InfoDensity::operator()(double theta) const {
  model_.gamma().check_input(theta);
  return model_.coding() == Coding::kTemporal ? temporal(theta) : rate(theta);
}

std::vector<double> InfoDensity::evaluate(std::span<const double> thetas, unsigned threads) const {
  std::vector<double> out(thetas.size());
  const std::size_t n = thetas.size();
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (*this)(thetas[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < n; i += workers) out[i] = (*this)(thetas[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

double InfoDensity::mutual_information() const {
  double mi = 0.0;
  for (std::size_t i = 0; i < ensemble_.size(); ++i) {
    if (ensemble_.weights()[i] > 0.0) mi += ensemble_.weights()[i] * (*this)(ensemble_.points()[i]);
  }
  return mi;
}

double marginal_info_density(double theta, const InputEnsemble& ensemble,
                             const ChannelModel& model) {
  return InfoDensity(ensemble, model)(theta);
}

double ensemble_mi(const InputEnsemble& ensemble, const ChannelModel& model) {
  return InfoDensity(ensemble, model).mutual_information();
}

}  // namespace neurocap
