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

#include <string>
#include <string_view>
#include <vector>

#include "neurocap/pmf.hpp"

namespace neurocap {

// Per-symbol code lengths in bits for a fixed-to-variable source code.
class CodeLengthAssignment {
 public:
  CodeLengthAssignment(std::vector<std::string> labels, std::vector<int> lengths);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& lengths() const { return lengths_; }

  // Sum of 2^-length; at most 1 for a prefix-free code.
  double kraft_sum() const;

 private:
  std::vector<std::string> labels_;
  std::vector<int> lengths_;
};

double expected_code_length(const DiscretePMF& p, const CodeLengthAssignment& code);

// K=2, N=3 even-parity block code: appends a bit making the count of ones even.
std::string parity_extend(std::string_view block);

// True iff the 3-bit block is not one of the four codewords.
bool parity_detect(std::string_view block);

}  // namespace neurocap
