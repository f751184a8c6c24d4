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
#include "neurocap/gamma_channel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "neurocap/error.hpp"
#include "neurocap/special_functions.hpp"

namespace neurocap {
namespace {

constexpr double kBoundarySlack = 1e-12;
constexpr double kLogHalf = -0.69314718055994530942;

}  // namespace

GammaChannel::GammaChannel(double kappa, double a0, double b0)
    : kappa_(kappa), a0_(a0), b0_(b0) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw ValidationError("kappa must be positive and finite");
  }
  if (!(a0 > 0.0) || !std::isfinite(a0)) throw ValidationError("a0 must be positive");
  if (!std::isfinite(b0)) throw ValidationError("b0 must be finite");
  if (!(a0 < b0)) {
    std::ostringstream os;
    os.precision(17);
    os << "degenerate interval: need a0 < b0, got a0=" << a0 << ", b0=" << b0;
    throw ValidationError(os.str());
  }
}

bool GammaChannel::contains(double theta) const {
  const double lo = theta_min() * (1.0 - kBoundarySlack);
  const double hi = theta_max() * (1.0 + kBoundarySlack);
  return theta >= lo && theta <= hi;
}

void GammaChannel::check_input(double theta) const {
  if (!contains(theta)) {
    std::ostringstream os;
    os.precision(17);
    os << "theta=" << theta << " lies outside [" << theta_min() << ", " << theta_max() << "]";
    throw DomainError(os.str());
  }
}

CountChannelConfig::CountChannelConfig(GammaChannel base_channel, double window,
                                       double tail_tolerance, std::size_t cap)
    : base(base_channel), delta(window), tail_tol(tail_tolerance), count_cap(cap) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ValidationError("delta must be positive and finite");
  }
  if (!(tail_tol > 0.0 && tail_tol < 1e-6)) {
    throw ValidationError("tail_tol must lie in (0, 1e-6)");
  }
  if (count_cap == 0) throw ValidationError("count cap must be positive");
}

double isi_log_density(double t, double theta, const GammaChannel& ch) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("ISI t must be positive and finite");
  ch.check_input(theta);
  return gamma_log_pdf(t, ch.kappa(), theta);
}

double isi_log2_density(double t, double theta, const GammaChannel& ch) {
  return isi_log_density(t, theta, ch) / std::log(2.0);
}

namespace detail {

double count_log_tail(std::size_t r, double kappa, double x) {
  if (r == 0) return 0.0;
  return log_gamma_p(static_cast<double>(r) * kappa, x);
}

double count_log_pmf(std::size_t r, double kappa, double x) {
  if (r == 0) return log_gamma_q(kappa, x);
  const double a = static_cast<double>(r) * kappa;
  const double b = a + kappa;
  // Subtract whichever pair of tails is smaller to avoid cancellation.
  const double log_pa = log_gamma_p(a, x);
  if (log_pa < kLogHalf) {
    const double log_pb = log_gamma_p(b, x);
    return log_pa + std::log1p(-std::exp(log_pb - log_pa));
  }
  const double log_qa = log_gamma_q(a, x);
  const double log_qb = log_gamma_q(b, x);
  return log_qb + std::log1p(-std::exp(log_qa - log_qb));
}

std::size_t count_truncation(double kappa, double x, double tail_tol, std::size_t count_cap) {
  const double log_tol = std::log(tail_tol);
  // P(R > r) = P((r+1) kappa, x) decreases in r; exponential search then bisection.
  auto tail_ok = [&](std::size_t r) { return count_log_tail(r + 1, kappa, x) <= log_tol; };
  if (tail_ok(0)) return 0;
  std::size_t lo = 0;  // tail_ok(lo) is false
  std::size_t hi = 1;
  while (!tail_ok(hi)) {
    lo = hi;
    if (hi > count_cap) return count_cap + 1;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (tail_ok(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace detail

double count_log_pmf(std::size_t r, double theta, const CountChannelConfig& cfg) {
  cfg.base.check_input(theta);
  return detail::count_log_pmf(r, cfg.base.kappa(), cfg.delta / theta);
}

double count_pmf(std::size_t r, double theta, const CountChannelConfig& cfg) {
  return std::exp(count_log_pmf(r, theta, cfg));
}

TruncatedCountPMF truncated_count_pmf(double theta, const CountChannelConfig& cfg) {
  cfg.base.check_input(theta);
  const double kappa = cfg.base.kappa();
  const double x = cfg.delta / theta;
  const std::size_t r_max = detail::count_truncation(kappa, x, cfg.tail_tol, cfg.count_cap);
  if (r_max > cfg.count_cap) {
    std::ostringstream os;
    os.precision(17);
    os << "count truncation exceeds cap " << cfg.count_cap << " at theta=" << theta
       << ", delta=" << cfg.delta;
    throw ValidationError(os.str());
  }
  TruncatedCountPMF out;
  out.theta = theta;
  out.r_max = r_max;
  out.probs.resize(r_max + 1);
  for (std::size_t r = 0; r <= r_max; ++r) out.probs[r] = std::exp(detail::count_log_pmf(r, kappa, x));
  out.tail_mass = std::exp(detail::count_log_tail(r_max + 1, kappa, x));
  return out;
}

CountMean count_mean(double theta, const CountChannelConfig& cfg) {
  const auto pmf = truncated_count_pmf(theta, cfg);
  CountMean mean;
  for (std::size_t r = 1; r < pmf.probs.size(); ++r) mean.exact += static_cast<double>(r) * pmf.probs[r];
  mean.asymptotic = cfg.delta / (cfg.base.kappa() * theta);
  return mean;
}

double sample_isi(std::mt19937_64& rng, double theta, double kappa) {
  std::gamma_distribution<double> isi(kappa, theta);
  return isi(rng);
}

std::size_t sample_count(std::mt19937_64& rng, double theta, double kappa, double delta) {
  std::gamma_distribution<double> isi(kappa, theta);
  std::size_t count = 0;
  double t = isi(rng);
  while (t <= delta) {
    ++count;
    t += isi(rng);
  }
  return count;
}

std::vector<double> simulate_count_histogram(double theta, const CountChannelConfig& cfg,
                                             std::size_t trials, std::uint64_t seed) {
  cfg.base.check_input(theta);
  if (trials == 0) throw ValidationError("simulation needs at least one trial");
  std::mt19937_64 rng(seed);
  std::vector<double> hist;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t r = sample_count(rng, theta, cfg.base.kappa(), cfg.delta);
    if (r >= hist.size()) hist.resize(r + 1, 0.0);
    hist[r] += 1.0;
  }
  for (double& h : hist) h /= static_cast<double>(trials);
  return hist;
}

}  // namespace neurocap
