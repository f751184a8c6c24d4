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

#include <functional>
#include <vector>

namespace neurocap {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // estimated
};

// Adaptive 15-point Gauss-Kronrod on [a, b]. Succeeds when the error estimate
// is at most max(abs_tol, rel_tol * L1), where L1 is the integral of |f|;
// otherwise throws QuadratureError carrying the achieved tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol = 0.0,
                                    unsigned max_depth = 25);

// Fixed composite Gauss-Legendre rule (10 points per panel) on [a, b] with
// panels no wider than max_panel_width.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

QuadratureRule composite_gauss_legendre(double a, double b, double max_panel_width);

}  // namespace neurocap
