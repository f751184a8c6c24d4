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
#include "neurocap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "neurocap/blahut_arimoto.hpp"
#include "neurocap/info_density.hpp"
#include "neurocap/output_grid.hpp"

namespace neurocap {
namespace {

constexpr double kGolden = 0.61803398874989484820;

// Inner weight optimization on a handful of support points.
constexpr double kInnerTol = 1e-10;
constexpr std::size_t kInnerMaxIter = 200000;
// The seed pass only has to locate the mass points.
constexpr double kSeedTol = 1e-4;
constexpr std::size_t kSeedMaxIter = 5000;
constexpr double kSeedPrune = 1e-4;
constexpr double kInsertWeight = 0.02;
// Neighbours whose log-midpoint sits within this of C form one ridge of i(theta).
constexpr double kMergeDip = 1e-5;

struct Support {
  std::vector<double> points;
  std::vector<double> weights;
  std::vector<double> density;  // i(theta_j), bits
  std::vector<double> log_marginal;
  double lower = 0.0;
  double upper = 0.0;
};

void normalize(std::vector<double>& w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= total;
}

Support optimize_support(const DiscretizedChannel& disc, std::vector<double> points,
                         std::vector<double> weights, double tol, std::size_t max_iter) {
  const auto rows = disc.rows(points);
  auto opt = optimize_input_weights(rows, points.size(), disc.outputs(), std::move(weights), tol,
                                    max_iter);
  Support s;
  s.points = std::move(points);
  s.weights = std::move(opt.weights);
  s.density = std::move(opt.info_density);
  s.lower = opt.lower;
  s.upper = opt.upper;
  s.log_marginal = DiscretizedChannel::log_marginal(rows, disc.outputs(), s.weights);
  return s;
}

// Drops light points, then merges neighbours closer than merge_distance.
bool prune_and_merge(std::vector<double>& points, std::vector<double>& weights, double threshold,
                     double merge_distance) {
  const std::size_t before = points.size();
  std::vector<double> p;
  std::vector<double> w;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (weights[i] < threshold) continue;
    if (!p.empty() && points[i] - p.back() < merge_distance) {
      const double total = w.back() + weights[i];
      p.back() = (w.back() * p.back() + weights[i] * points[i]) / total;
      w.back() = total;
      continue;
    }
    p.push_back(points[i]);
    w.push_back(weights[i]);
  }
  if (p.empty()) {
    const auto heaviest = std::max_element(weights.begin(), weights.end()) - weights.begin();
    p = {points[heaviest]};
    w = {1.0};
  }
  normalize(w);
  const bool changed = p.size() != before;
  points = std::move(p);
  weights = std::move(w);
  return changed;
}

// Collapses each run of consecutive surviving seed points into one point at
// the run's weighted log-mean.
void consolidate_runs(std::vector<double>& points, std::vector<double>& weights,
                      double threshold) {
  std::vector<double> p;
  std::vector<double> w;
  std::size_t i = 0;
  while (i < points.size()) {
    if (weights[i] < threshold) {
      ++i;
      continue;
    }
    double mass = 0.0;
    double log_centre = 0.0;
    for (; i < points.size() && weights[i] >= threshold; ++i) {
      mass += weights[i];
      log_centre += weights[i] * std::log(points[i]);
    }
    p.push_back(std::exp(log_centre / mass));
    w.push_back(mass);
  }
  if (p.empty()) {
    const auto heaviest = std::max_element(weights.begin(), weights.end()) - weights.begin();
    p = {points[heaviest]};
    w = {1.0};
  }
  normalize(w);
  points = std::move(p);
  weights = std::move(w);
}

// Maximizes f over [lo, hi] by golden-section search in log(theta); the
// endpoints are compared explicitly so boundary maxima are found exactly.
template <typename F>
double golden_max(F&& f, double lo, double hi, double rel_tol = 1e-10) {
  if (!(hi > lo)) return lo;
  double a = std::log(lo);
  double b = std::log(hi);
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(std::exp(c));
  double fd = f(std::exp(d));
  while (b - a > rel_tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(std::exp(c));
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(std::exp(d));
    }
  }
  double best = fc >= fd ? std::exp(c) : std::exp(d);
  double fbest = std::max(fc, fd);
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe > fbest) {
      fbest = fe;
      best = edge;
    }
  }
  return std::clamp(best, lo, hi);
}

double mid_log(double a, double b) { return std::sqrt(a * b); }

struct ProbeScan {
  std::vector<double> grid;
  std::vector<double> density;
  double max_violation = 0.0;
  double support_gap = 0.0;
};

ProbeScan scan(const DiscretizedChannel& disc, const Support& s, std::span<const double> grid) {
  ProbeScan out;
  out.grid.assign(grid.begin(), grid.end());
  out.density.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out.density[k] = disc.info_density(grid[k], s.log_marginal);
  }
  out.max_violation = *std::max_element(out.density.begin(), out.density.end()) - s.lower;
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    if (s.weights[j] > 0.0) out.support_gap = std::max(out.support_gap, std::abs(s.density[j] - s.lower));
  }
  return out;
}

CapacitySolution finalize(const ChannelModel& model, const Support& s, std::size_t probe_n,
                          double slack_tol, unsigned threads, const char* method) {
  std::vector<double> p;
  std::vector<double> w;
  const GammaChannel& ch = model.gamma();
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    if (s.weights[j] > 0.0) {
      // Snap round-off at the interval ends.
      double theta = std::clamp(s.points[j], ch.theta_min(), ch.theta_max());
      if (std::abs(theta - ch.theta_min()) <= 1e-12 * ch.theta_min()) theta = ch.theta_min();
      if (std::abs(theta - ch.theta_max()) <= 1e-12 * ch.theta_max()) theta = ch.theta_max();
      p.push_back(theta);
      w.push_back(s.weights[j]);
    }
  }
  normalize(w);
  InputEnsemble ensemble(std::move(p), std::move(w));
  const double c = ensemble_mi(ensemble, model);
  CapacitySolution sol{
      .ensemble = ensemble,
      .model = model,
      .capacity_per_use = c,
      .capacity_bps = capacity_bps(c, ensemble, model),
      .lower_bound = s.lower,
      .upper_bound = s.upper,
      .certificate = {},
      .method = method,
  };
  sol.certificate = kkt_verify(sol, probe_n, slack_tol, threads);
  return sol;
}


// Moves every mass point to the maximum of i(theta) within its cell, with
// step halving when the full move lowers the mutual information.
void reposition(const DiscretizedChannel& disc, const GammaChannel& ch, double merge_distance,
                Support& s) {
  std::vector<double> moved(s.points.size());
  for (std::size_t j = 0; j < s.points.size(); ++j) {
    const double lo = j == 0 ? ch.theta_min() : mid_log(s.points[j - 1], s.points[j]);
    const double hi =
        j + 1 == s.points.size() ? ch.theta_max() : mid_log(s.points[j], s.points[j + 1]);
    moved[j] = golden_max(
        [&](double theta) { return disc.info_density(theta, s.log_marginal); }, lo, hi);
  }
  for (double step : {1.0, 0.5, 0.25}) {
    std::vector<double> cand(moved.size());
    for (std::size_t j = 0; j < cand.size(); ++j) {
      cand[j] = step == 1.0 ? moved[j]
                            : std::exp(std::log(s.points[j]) +
                                       step * (std::log(moved[j]) - std::log(s.points[j])));
      cand[j] = std::clamp(cand[j], ch.theta_min(), ch.theta_max());
    }
    std::vector<double> cw = s.weights;
    prune_and_merge(cand, cw, 0.0, merge_distance);
    auto trial = optimize_support(disc, cand, cw, kInnerTol, kInnerMaxIter);
    if (trial.lower >= s.lower - 1e-13) {
      s = std::move(trial);
      return;
    }
  }
}

// Collapses adjacent pairs that share one ridge of i(theta) into a single
// point when that costs at most max_loss bits after re-optimization.
void merge_ridges(const DiscretizedChannel& disc, const GammaChannel& ch, double merge_distance,
                  double max_loss, Support& s) {
  for (std::size_t j = 0; j + 1 < s.points.size();) {
    const double mid = mid_log(s.points[j], s.points[j + 1]);
    if (s.lower - disc.info_density(mid, s.log_marginal) > kMergeDip) {
      ++j;
      continue;
    }
    std::vector<double> p = s.points;
    std::vector<double> w = s.weights;
    const double mass = w[j] + w[j + 1];
    p[j] = std::exp((w[j] * std::log(p[j]) + w[j + 1] * std::log(p[j + 1])) / mass);
    w[j] = mass;
    p.erase(p.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    auto trial = optimize_support(disc, std::move(p), std::move(w), kInnerTol, kInnerMaxIter);
    reposition(disc, ch, merge_distance, trial);
    if (trial.lower >= s.lower - max_loss) {
      s = std::move(trial);
      j = 0;
    } else {
      ++j;
    }
  }
}

}  // namespace

SolverConvergenceError::SolverConvergenceError(const std::string& what, CapacitySolution best)
    : ConvergenceError(what, best.lower_bound, best.upper_bound),
      best_(std::make_shared<const CapacitySolution>(std::move(best))) {}

std::vector<double> input_grid(const GammaChannel& channel, std::size_t n) {
  if (n < 2) throw ValidationError("input grid needs at least two points");
  const double lo = std::log(channel.theta_min());
  const double hi = std::log(channel.theta_max());
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.front() = channel.theta_min();
  g.back() = channel.theta_max();
  return g;
}

KKTReport kkt_verify(const CapacitySolution& solution, std::size_t probe_n, double slack_tol,
                     unsigned threads) {
  if (probe_n < 1001) throw ValidationError("kkt_verify: probe_n must be at least 1001");
  if (!(slack_tol > 0.0)) throw ValidationError("kkt_verify: slack_tol must be positive");
  const InfoDensity density(solution.ensemble, solution.model);
  KKTReport report;
  report.grid = input_grid(solution.model.gamma(), probe_n);
  report.info_density = density.evaluate(report.grid, threads);
  report.capacity_ref = solution.capacity_per_use;
  report.slack_tol = slack_tol;
  report.max_violation =
      *std::max_element(report.info_density.begin(), report.info_density.end()) -
      report.capacity_ref;
  const auto& ens = solution.ensemble;
  for (std::size_t i = 0; i < ens.size(); ++i) {
    if (ens.weights()[i] <= 0.0) continue;
    report.at_support_gap =
        std::max(report.at_support_gap, std::abs(density(ens.points()[i]) - report.capacity_ref));
  }
  report.passed = report.max_violation <= slack_tol && report.at_support_gap <= slack_tol;
  return report;
}

double capacity_bps(double capacity_per_use, const InputEnsemble& ensemble,
                    const ChannelModel& model) {
  if (model.coding() == Coding::kRate) return capacity_per_use / model.delta();
  return capacity_per_use / ensemble.mean_isi(model.gamma().kappa());
}

double capacity_bps(const CapacitySolution& solution) {
  return capacity_bps(solution.capacity_per_use, solution.ensemble, solution.model);
}

CapacitySolution grid_capacity(const ChannelModel& model, const GridOptions& options) {
  if (options.grid_n < 51) throw ValidationError("grid_capacity: grid_n must be at least 51");
  const DiscretizedChannel disc(model);
  const auto grid = input_grid(model.gamma(), options.grid_n);
  const auto rows = disc.rows(grid);
  const auto opt = optimize_input_weights(rows, grid.size(), disc.outputs(), {}, options.tol,
                                          options.max_iter, {}, options.max_relaxation);
  Support s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (opt.weights[i] > options.prune_threshold) {
      s.points.push_back(grid[i]);
      s.weights.push_back(opt.weights[i]);
    }
  }
  normalize(s.weights);
  s.lower = opt.lower;
  s.upper = opt.upper;
  if (!opt.converged) {
    std::ostringstream os;
    os.precision(12);
    os << "grid_capacity: no convergence after " << options.max_iter
       << " iterations; capacity in [" << opt.lower << ", " << opt.upper << "] bits";
    throw SolverConvergenceError(
        os.str(), finalize(model, s, options.probe_n, options.slack_tol, options.threads, "grid"));
  }
  return finalize(model, s, options.probe_n, options.slack_tol, options.threads, "grid");
}

CapacitySolution particle_capacity(const ChannelModel& model, const ParticleOptions& options,
                                   const std::optional<InputEnsemble>& init) {
  if (!(options.tol > 0.0)) throw ValidationError("particle_capacity: tol must be positive");
  if (options.seed_n < 2) throw ValidationError("particle_capacity: seed_n must be at least 2");
  const GammaChannel& ch = model.gamma();
  const DiscretizedChannel disc(model);
  const double merge_distance = options.merge_fraction * ch.omega_width();
  const auto probes = input_grid(ch, options.probe_n);

  std::vector<double> points;
  std::vector<double> weights;
  if (init) {
    init->check_within(ch);
    points = init->points();
    weights = init->weights();
  } else {
    points = input_grid(ch, options.seed_n);
    weights.assign(points.size(), 1.0 / static_cast<double>(points.size()));
  }
  if (points.size() > 8) {
    auto seed = optimize_support(disc, points, weights, kSeedTol, kSeedMaxIter);
    points = std::move(seed.points);
    weights = std::move(seed.weights);
    consolidate_runs(points, weights, kSeedPrune);
  }

  double internal_slack = 0.25 * options.tol;
  std::optional<CapacitySolution> best;
  Support s;
  for (std::size_t round = 0; round < options.max_rounds; ++round) {
    // (a) weights on the current support, then (b) prune and merge until stable.
    for (int pass = 0; pass < 8; ++pass) {
      s = optimize_support(disc, points, weights, kInnerTol, kInnerMaxIter);
      points = s.points;
      weights = s.weights;
      if (!prune_and_merge(points, weights, options.prune_threshold, merge_distance)) break;
    }

    // (c) move each mass point to the local maximum of i(theta) in its cell,
    // then fold pairs that straddle a single ridge.
    reposition(disc, ch, merge_distance, s);
    merge_ridges(disc, ch, merge_distance, std::max(1e-8, 1e-3 * options.tol), s);
    points = s.points;
    weights = s.weights;

    // (d) scan the optimality conditions on the probe grid.
    const auto sc = scan(disc, s, probes);
    if (sc.max_violation <= internal_slack && sc.support_gap <= internal_slack) {
      auto sol = finalize(model, s, options.probe_n, options.tol, options.threads, "particle");
      if (sol.certificate.passed) return sol;
      best = std::move(sol);
      internal_slack *= 0.25;
      if (internal_slack < 1e-9) break;
      continue;
    }

    // (e) seed new mass points at local maxima of i(theta) that violate the bound.
    for (std::size_t k = 0; k < sc.grid.size(); ++k) {
      const double v = sc.density[k];
      if (v - s.lower <= internal_slack) continue;
      if (k > 0 && sc.density[k - 1] > v) continue;
      if (k + 1 < sc.grid.size() && sc.density[k + 1] >= v) continue;
      const double lo = sc.grid[k > 0 ? k - 1 : 0];
      const double hi = sc.grid[std::min(k + 1, sc.grid.size() - 1)];
      const double at = golden_max(
          [&](double theta) { return disc.info_density(theta, s.log_marginal); }, lo, hi);
      const auto pos = std::lower_bound(points.begin(), points.end(), at) - points.begin();
      points.insert(points.begin() + pos, at);
      weights.insert(weights.begin() + pos, kInsertWeight);
    }
    normalize(weights);
    prune_and_merge(points, weights, 0.0, merge_distance);
  }

  CapacitySolution fallback =
      best ? *best : finalize(model, s, options.probe_n, options.tol, options.threads, "particle");
  std::ostringstream os;
  os.precision(6);
  os << "particle_capacity: certificate did not pass within " << options.max_rounds
     << " rounds (max violation " << fallback.certificate.max_violation << " bits)";
  throw SolverConvergenceError(os.str(), std::move(fallback));
}

}  // namespace neurocap
