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
#include "neurocap/pmf.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "neurocap/error.hpp"

namespace neurocap {
namespace {

void check_unique(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw ValidationError(std::string(what) + ": duplicate label '" + label + "'");
    }
  }
}

// Validates non-negativity and total mass; rescales in place when allowed.
void check_mass(std::vector<double>& probs, Normalization mode, const char* what) {
  if (probs.empty()) throw ValidationError(std::string(what) + ": empty probability vector");
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!std::isfinite(probs[i]) || probs[i] < 0.0) {
      std::ostringstream os;
      os << what << ": probability at index " << i << " is " << probs[i];
      throw ValidationError(os.str());
    }
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (mode == Normalization::kRenormalize) {
    if (!(total > 0.0)) throw ValidationError(std::string(what) + ": zero total mass");
    for (double& p : probs) p /= total;
    return;
  }
  if (std::abs(total - 1.0) > kPmfTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": probabilities sum to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

DiscretePMF::DiscretePMF(std::vector<std::string> labels, std::vector<double> probs,
                         Normalization mode)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_.size() != probs_.size()) {
    throw ValidationError("pmf: " + std::to_string(labels_.size()) + " labels but " +
                          std::to_string(probs_.size()) + " probabilities");
  }
  check_unique(labels_, "pmf");
  check_mass(probs_, mode, "pmf");
}

DiscretePMF DiscretePMF::from_probs(std::vector<double> probs, Normalization mode) {
  auto labels = default_labels(probs.size());
  return DiscretePMF(std::move(labels), std::move(probs), mode);
}

DiscretePMF DiscretePMF::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("pmf: uniform over an empty alphabet");
  return from_probs(std::vector<double>(n, 1.0 / static_cast<double>(n)),
                    Normalization::kRenormalize);
}

JointPMF::JointPMF(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                   std::vector<std::vector<double>> probs, Normalization mode)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  if (probs.size() != row_labels_.size()) {
    throw ValidationError("joint: row count does not match row labels");
  }
  check_unique(row_labels_, "joint rows");
  check_unique(col_labels_, "joint columns");
  probs_.reserve(rows() * cols());
  for (const auto& row : probs) {
    if (row.size() != cols()) throw ValidationError("joint: ragged probability matrix");
    probs_.insert(probs_.end(), row.begin(), row.end());
  }
  check_mass(probs_, mode, "joint");
}

DiscretePMF JointPMF::marginal_x() const {
  std::vector<double> m(rows(), 0.0);
  for (std::size_t x = 0; x < rows(); ++x)
    for (std::size_t y = 0; y < cols(); ++y) m[x] += (*this)(x, y);
  return DiscretePMF(row_labels_, std::move(m), Normalization::kRenormalize);
}

DiscretePMF JointPMF::marginal_y() const {
  std::vector<double> m(cols(), 0.0);
  for (std::size_t x = 0; x < rows(); ++x)
    for (std::size_t y = 0; y < cols(); ++y) m[y] += (*this)(x, y);
  return DiscretePMF(col_labels_, std::move(m), Normalization::kRenormalize);
}

JointPMF JointPMF::transposed() const {
  JointPMF t;
  t.row_labels_ = col_labels_;
  t.col_labels_ = row_labels_;
  t.probs_.resize(probs_.size());
  for (std::size_t x = 0; x < rows(); ++x)
    for (std::size_t y = 0; y < cols(); ++y) t.probs_[y * rows() + x] = (*this)(x, y);
  return t;
}

JointPMF JointPMF::from_channel(const DiscretePMF& input, const ChannelMatrix& channel) {
  if (input.labels() != channel.input_labels()) {
    throw ValidationError("joint: input PMF labels do not match channel inputs");
  }
  std::vector<std::vector<double>> probs(channel.inputs());
  for (std::size_t x = 0; x < channel.inputs(); ++x) {
    const auto row = channel.row(x);
    probs[x].reserve(row.size());
    for (double p : row) probs[x].push_back(input[x] * p);
  }
  return JointPMF(channel.input_labels(), channel.output_labels(), std::move(probs),
                  Normalization::kRenormalize);
}

JointPMF JointPMF::independent(const DiscretePMF& x, const DiscretePMF& y) {
  std::vector<std::vector<double>> probs(x.size(), std::vector<double>(y.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) probs[i][j] = x[i] * y[j];
  return JointPMF(x.labels(), y.labels(), std::move(probs), Normalization::kRenormalize);
}

ChannelMatrix::ChannelMatrix(std::vector<std::string> input_labels,
                             std::vector<std::string> output_labels,
                             std::vector<std::vector<double>> rows, Normalization mode)
    : input_labels_(std::move(input_labels)), output_labels_(std::move(output_labels)) {
  if (rows.size() != input_labels_.size()) {
    throw ValidationError("channel: row count does not match input labels");
  }
  check_unique(input_labels_, "channel inputs");
  check_unique(output_labels_, "channel outputs");
  data_.reserve(inputs() * outputs());
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != outputs()) {
      throw ValidationError("channel: row " + std::to_string(x) + " has " +
                            std::to_string(rows[x].size()) + " entries, expected " +
                            std::to_string(outputs()));
    }
    const std::string what = "channel row " + std::to_string(x);
    check_mass(rows[x], mode, what.c_str());
    data_.insert(data_.end(), rows[x].begin(), rows[x].end());
  }
}

ChannelMatrix ChannelMatrix::from_rows(std::vector<std::vector<double>> rows,
                                       Normalization mode) {
  const std::size_t n_out = rows.empty() ? 0 : rows.front().size();
  auto in_labels = default_labels(rows.size());
  return ChannelMatrix(std::move(in_labels), default_labels(n_out), std::move(rows), mode);
}

ChannelMatrix ChannelMatrix::binary_symmetric(double error_probability) {
  if (!(error_probability >= 0.0 && error_probability <= 1.0)) {
    throw ValidationError("bsc: error probability must lie in [0, 1]");
  }
  const double p = error_probability;
  return from_rows({{1.0 - p, p}, {p, 1.0 - p}});
}

}  // namespace neurocap
