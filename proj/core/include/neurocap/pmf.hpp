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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace neurocap {

class ChannelMatrix;

// Absolute tolerance on the total mass of every probability vector.
inline constexpr double kPmfTolerance = 1e-12;

enum class Normalization {
  kStrict,       // reject vectors whose mass differs from 1 by more than kPmfTolerance
  kRenormalize,  // divide by the total (which must still be positive)
};

// Finite probability vector over a labeled alphabet.
class DiscretePMF {
 public:
  DiscretePMF(std::vector<std::string> labels, std::vector<double> probs,
              Normalization mode = Normalization::kStrict);

  // Labels default to "0", "1", ...
  static DiscretePMF from_probs(std::vector<double> probs,
                                Normalization mode = Normalization::kStrict);
  static DiscretePMF uniform(std::size_t n);

  std::size_t size() const { return probs_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> probs_;
};

// Joint law p(x, y) stored row-major: rows index X, columns index Y.
class JointPMF {
 public:
  JointPMF(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
           std::vector<std::vector<double>> probs,
           Normalization mode = Normalization::kStrict);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  double operator()(std::size_t x, std::size_t y) const { return probs_[x * cols() + y]; }

  DiscretePMF marginal_x() const;
  DiscretePMF marginal_y() const;
  JointPMF transposed() const;

  // Product of a source PMF with a channel: p(x, y) = p(x) p(y|x).
  static JointPMF from_channel(const DiscretePMF& input, const ChannelMatrix& channel);
  static JointPMF independent(const DiscretePMF& x, const DiscretePMF& y);

 private:
  JointPMF() = default;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<double> probs_;
};

// Discrete memoryless channel p(y|x); each row is a valid PMF over outputs.
class ChannelMatrix {
 public:
  ChannelMatrix(std::vector<std::string> input_labels, std::vector<std::string> output_labels,
                std::vector<std::vector<double>> rows,
                Normalization mode = Normalization::kStrict);

  // Default labels "0", "1", ... on both sides.
  static ChannelMatrix from_rows(std::vector<std::vector<double>> rows,
                                 Normalization mode = Normalization::kStrict);
  static ChannelMatrix binary_symmetric(double error_probability);

  std::size_t inputs() const { return input_labels_.size(); }
  std::size_t outputs() const { return output_labels_.size(); }
  const std::vector<std::string>& input_labels() const { return input_labels_; }
  const std::vector<std::string>& output_labels() const { return output_labels_; }
  std::span<const double> row(std::size_t x) const {
    return std::span<const double>(data_).subspan(x * outputs(), outputs());
  }
  // Contiguous row-major storage, inputs() * outputs() entries.
  std::span<const double> data() const { return data_; }

 private:
  std::vector<std::string> input_labels_;
  std::vector<std::string> output_labels_;
  std::vector<double> data_;
};

std::vector<std::string> default_labels(std::size_t n);

}  // namespace neurocap
