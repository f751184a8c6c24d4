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
#include "neurocap/blahut_arimoto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "neurocap/error.hpp"

namespace neurocap {
namespace {

// Stand-in for log(0) when an output is unreachable under the current weights.
constexpr double kLogFloor = -745.0;
// Weights are kept above this so that an input can regain mass later.
constexpr double kWeightFloor = 1e-200;
// Inputs lighter than this are left out of the output marginal.
constexpr double kNegligibleWeight = 1e-150;

}  // namespace

WeightOptimization optimize_input_weights(std::span<const double> rows, std::size_t inputs,
                                          std::size_t outputs, std::vector<double> initial,
                                          double tol, std::size_t max_iter,
                                          const BlahutArimotoObserver& observer,
                                          double max_relaxation) {
  if (inputs == 0 || outputs == 0) throw ValidationError("blahut-arimoto: empty channel");
  if (rows.size() != inputs * outputs) {
    throw ValidationError("blahut-arimoto: matrix size does not match its shape");
  }
  if (!(tol > 0.0)) throw ValidationError("blahut-arimoto: tolerance must be positive");
  if (!(max_relaxation >= 1.0)) {
    throw ValidationError("blahut-arimoto: relaxation bound must be at least 1");
  }

  std::vector<double> w = std::move(initial);
  if (w.empty()) w.assign(inputs, 1.0 / static_cast<double>(inputs));
  if (w.size() != inputs) throw ValidationError("blahut-arimoto: initial weights size mismatch");
  double total = 0.0;
  for (double v : w) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("blahut-arimoto: initial weights must be finite and non-negative");
    }
    total += v;
  }
  if (!(total > 0.0)) throw ValidationError("blahut-arimoto: initial weights sum to zero");
  for (double& v : w) v /= total;

  // Negative conditional entropy of each row, nats.
  std::vector<double> neg_entropy(inputs, 0.0);
  for (std::size_t i = 0; i < inputs; ++i) {
    const double* row = rows.data() + i * outputs;
    double s = 0.0;
    for (std::size_t j = 0; j < outputs; ++j) {
      if (row[j] > 0.0) s += row[j] * std::log(row[j]);
    }
    neg_entropy[i] = s;
  }

  const double tol_nats = tol * std::numbers::ln2;
  std::vector<double> marginal(outputs);
  std::vector<double> log_marginal(outputs);
  std::vector<double> density(inputs);

  // Marginal, information densities and bounds at the current weights.
  auto evaluate = [&](double& lower, double& upper) {
    std::fill(marginal.begin(), marginal.end(), 0.0);
    for (std::size_t i = 0; i < inputs; ++i) {
      const double wi = w[i];
      if (wi < kNegligibleWeight) continue;
      const double* row = rows.data() + i * outputs;
      for (std::size_t j = 0; j < outputs; ++j) marginal[j] += wi * row[j];
    }
    for (std::size_t j = 0; j < outputs; ++j) {
      log_marginal[j] = marginal[j] > 0.0 ? std::log(marginal[j]) : kLogFloor;
    }
    lower = 0.0;
    upper = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inputs; ++i) {
      const double* row = rows.data() + i * outputs;
      double cross = 0.0;
      for (std::size_t j = 0; j < outputs; ++j) cross += row[j] * log_marginal[j];
      density[i] = neg_entropy[i] - cross;
      lower += w[i] * density[i];
      upper = std::max(upper, density[i]);
    }
    lower = std::max(lower, 0.0);
    upper = std::max(upper, lower);
  };

  WeightOptimization out;
  std::vector<double> accepted_w = w;
  std::vector<double> accepted_density(inputs);
  double accepted_upper = 0.0;
  double accepted_lower = -1.0;
  double relaxation = 1.0;
  std::size_t iter = 0;
  for (std::size_t evals = 0;; ++evals) {
    double lower = 0.0;
    double upper = 0.0;
    evaluate(lower, upper);
    if (lower < accepted_lower && relaxation > 1.0) {
      // Over-relaxed step went downhill: redo it with a shorter step.
      relaxation = std::max(1.0, 0.5 * relaxation);
      w = accepted_w;
      density = accepted_density;
      lower = accepted_lower;
      upper = accepted_upper;
    } else {
      if (observer) observer(iter, lower / std::numbers::ln2, upper / std::numbers::ln2);
      out.lower = lower / std::numbers::ln2;
      out.upper = upper / std::numbers::ln2;
      out.iterations = iter;
      if (upper - lower < tol_nats) {
        out.converged = true;
        break;
      }
      if (iter >= max_iter) break;
      ++iter;
      accepted_w = w;
      accepted_density = density;
      accepted_lower = lower;
      accepted_upper = upper;
      if (max_relaxation > 1.0) relaxation = std::min(max_relaxation, relaxation * 1.25);
    }
    if (evals > 4 * max_iter + 16) break;

    const double step = relaxation;
    double norm = 0.0;
    for (std::size_t i = 0; i < inputs; ++i) {
      w[i] *= std::exp(step * (density[i] - upper));
      norm += w[i];
    }
    for (double& v : w) v = std::max(v / norm, kWeightFloor);
  }

  out.info_density.resize(inputs);
  for (std::size_t i = 0; i < inputs; ++i) out.info_density[i] = density[i] / std::numbers::ln2;
  out.weights = std::move(w);
  return out;
}

BlahutArimotoResult blahut_arimoto(const ChannelMatrix& channel, double tol,
                                   std::size_t max_iter, const BlahutArimotoObserver& observer) {
  auto opt = optimize_input_weights(channel.data(), channel.inputs(), channel.outputs(), {}, tol,
                                    max_iter, observer);
  if (!opt.converged) {
    std::ostringstream os;
    os.precision(12);
    os << "blahut-arimoto: no convergence after " << max_iter << " iterations; capacity in ["
       << opt.lower << ", " << opt.upper << "] bits";
    throw ConvergenceError(os.str(), opt.lower, opt.upper);
  }
  BlahutArimotoResult result{
      .capacity = opt.lower,
      .upper_bound = opt.upper,
      .optimal_input = DiscretePMF(channel.input_labels(), std::move(opt.weights),
                                   Normalization::kRenormalize),
      .iterations = opt.iterations,
  };
  return result;
}

}  // namespace neurocap
