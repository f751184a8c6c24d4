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
#include "neurocap/information.hpp"

#include <cmath>

#include "neurocap/error.hpp"

namespace neurocap {
namespace {

double checked_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(std::string(what) + " must lie in [0, 1], got " + std::to_string(v));
  }
  return v;
}

}  // namespace

double entropy(const DiscretePMF& p) {
  double h = 0.0;
  for (double v : p.probs()) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

double conditional_entropy(const JointPMF& j) {
  double h = 0.0;
  for (std::size_t x = 0; x < j.rows(); ++x) {
    double px = 0.0;
    for (std::size_t y = 0; y < j.cols(); ++y) px += j(x, y);
    if (px <= 0.0) continue;
    for (std::size_t y = 0; y < j.cols(); ++y) {
      const double pxy = j(x, y);
      if (pxy > 0.0) h -= pxy * std::log2(pxy / px);
    }
  }
  return h;
}

double kl_divergence(const DiscretePMF& p, const DiscretePMF& q) {
  if (p.labels() != q.labels()) {
    throw ValidationError("kl: the two PMFs are defined over different alphabets");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return kInfiniteDivergence;
    d += p[i] * std::log2(p[i] / q[i]);
  }
  return d < 0.0 ? 0.0 : d;
}

double mutual_information(const JointPMF& j) {
  const auto px = j.marginal_x();
  const auto py = j.marginal_y();
  double mi = 0.0;
  for (std::size_t x = 0; x < j.rows(); ++x) {
    for (std::size_t y = 0; y < j.cols(); ++y) {
      const double pxy = j(x, y);
      if (pxy > 0.0) mi += pxy * std::log2(pxy / (px[x] * py[y]));
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double binary_entropy(double theta) {
  checked_probability(theta, "binary entropy argument");
  double h = 0.0;
  if (theta > 0.0) h -= theta * std::log2(theta);
  if (theta < 1.0) h -= (1.0 - theta) * std::log2(1.0 - theta);
  return h;
}

double bsc_capacity(double error_probability) {
  checked_probability(error_probability, "bsc error probability");
  return 1.0 - binary_entropy(error_probability);
}

double bsc_mutual_information(double q, double error_probability) {
  checked_probability(q, "bsc input probability");
  const double p = checked_probability(error_probability, "bsc error probability");
  const double output_one = q * (1.0 - p) + (1.0 - q) * p;
  const double mi = binary_entropy(output_one) - binary_entropy(p);
  return mi < 0.0 ? 0.0 : mi;
}

}  // namespace neurocap
