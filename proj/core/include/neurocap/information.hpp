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

#include <limits>

#include "neurocap/pmf.hpp"

namespace neurocap {

// All quantities are in bits. Zero-probability terms are skipped (0 log 0 = 0).

// Returned by kl_divergence when p is not absolutely continuous w.r.t. q.
inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();

double entropy(const DiscretePMF& p);

// H(Y|X) with X indexing the rows of the joint. Use j.transposed() for H(X|Y).
double conditional_entropy(const JointPMF& j);

// D(p || q). Labels must match element-wise; throws ValidationError otherwise.
double kl_divergence(const DiscretePMF& p, const DiscretePMF& q);

// D(p(x,y) || p(x)p(y)).
double mutual_information(const JointPMF& j);

double binary_entropy(double theta);

// 1 - H(p).
double bsc_capacity(double error_probability);

// I(X;Y) for a BSC with P(X=1) = q: H(q(1-p) + (1-q)p) - H(p).
double bsc_mutual_information(double q, double error_probability);

}  // namespace neurocap
