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

namespace neurocap {

// Regularized incomplete gamma functions, P (lower) and Q = 1 - P (upper),
// for shape a > 0 and x >= 0. The log forms stay accurate deep in either
// tail, where the plain values underflow. Target relative accuracy is 1e-13.
double log_gamma_p(double a, double x);
double log_gamma_q(double a, double x);
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// log Gamma(x) for x > 0 without touching the global signgam.
double log_gamma(double x);

// log of the Gamma(shape, scale) density at t > 0.
double gamma_log_pdf(double t, double shape, double scale);

// Quantiles of Gamma(shape, 1): smallest s with P(shape, s) >= p, and the
// largest s with Q(shape, s) >= q. Used to bound integration ranges.
double gamma_lower_quantile(double shape, double p);
double gamma_upper_quantile(double shape, double q);

}  // namespace neurocap
