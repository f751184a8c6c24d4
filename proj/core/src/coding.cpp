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
#include "neurocap/coding.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "neurocap/error.hpp"

namespace neurocap {
namespace {

void check_bits(std::string_view block, std::size_t expected, const char* what) {
  if (block.size() != expected) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(expected) +
                          " bits, got '" + std::string(block) + "'");
  }
  if (!std::all_of(block.begin(), block.end(), [](char c) { return c == '0' || c == '1'; })) {
    throw ValidationError(std::string(what) + ": block '" + std::string(block) +
                          "' contains characters other than 0 and 1");
  }
}

}  // namespace

CodeLengthAssignment::CodeLengthAssignment(std::vector<std::string> labels,
                                           std::vector<int> lengths)
    : labels_(std::move(labels)), lengths_(std::move(lengths)) {
  if (labels_.size() != lengths_.size()) {
    throw ValidationError("code lengths: label and length counts differ");
  }
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (lengths_[i] <= 0) {
      throw ValidationError("code lengths: length of '" + labels_[i] + "' must be positive");
    }
  }
}

double CodeLengthAssignment::kraft_sum() const {
  double s = 0.0;
  for (int len : lengths_) s += std::ldexp(1.0, -len);
  return s;
}

double expected_code_length(const DiscretePMF& p, const CodeLengthAssignment& code) {
  if (p.labels() != code.labels()) {
    throw ValidationError("expected code length: PMF and code use different labels");
  }
  double bits = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) bits += p[i] * code.lengths()[i];
  return bits;
}

std::string parity_extend(std::string_view block) {
  check_bits(block, 2, "parity_extend");
  const int ones = static_cast<int>(std::count(block.begin(), block.end(), '1'));
  std::string out(block);
  out.push_back(ones % 2 == 0 ? '0' : '1');
  return out;
}

bool parity_detect(std::string_view block) {
  check_bits(block, 3, "parity_detect");
  return std::count(block.begin(), block.end(), '1') % 2 != 0;
}

}  // namespace neurocap
