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
#include "neurocap/special_functions.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "neurocap/error.hpp"

namespace neurocap {
namespace {

constexpr int kMaxTerms = 1'000'000;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_args(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("incomplete gamma: shape must be positive and finite");
  }
  if (!(x >= 0.0)) throw DomainError("incomplete gamma: argument must be non-negative");
}

// lgamma(a + 1) - [(a + 1/2) log a - a + log(2 pi) / 2], the Stirling remainder.
double stirling_remainder(double a) {
  const double inv = 1.0 / a;
  const double inv2 = inv * inv;
  return inv * (1.0 / 12.0 -
                inv2 * (1.0 / 360.0 -
                        inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
}

// log(x^a e^-x / Gamma(a + 1)). For large a the leading terms are combined as
// a (log1p(d) - d) with d = x/a - 1 so they do not cancel catastrophically.
double log_lower_prefix(double a, double x) {
  if (a < 20.0) return a * std::log(x) - x - log_gamma(a + 1.0);
  const double d = (x - a) / a;
  const double core = (d > -0.5 && d < 1.0) ? a * (std::log1p(d) - d)
                                            : a * std::log(x / a) + a - x;
  return core - 0.5 * std::log(2.0 * std::numbers::pi * a) - stirling_remainder(a);
}

// sum_{n>=0} x^n / ((a+1)...(a+n)); P = prefix * series.
double lower_series(double a, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * kEps * 0.5) return sum;
  }
  std::ostringstream os;
  os << "incomplete gamma series did not converge for a=" << a << ", x=" << x;
  throw ConvergenceError(os.str(), sum, sum);
}

// Continued fraction for Q (modified Lentz); Q = a * prefix * cf.
double upper_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h;
  }
  std::ostringstream os;
  os << "incomplete gamma continued fraction did not converge for a=" << a << ", x=" << x;
  throw ConvergenceError(os.str(), h, h);
}

bool use_series(double a, double x) { return x < a + 1.0; }

}  // namespace

double log_gamma(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return boost::math::lgamma(x);
#endif
}

double log_gamma_p(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return kNegInf;
  if (std::isinf(x)) return 0.0;
  if (use_series(a, x)) return log_lower_prefix(a, x) + std::log(lower_series(a, x));
  const double log_q = log_lower_prefix(a, x) + std::log(a) + std::log(upper_fraction(a, x));
  return std::log1p(-std::exp(log_q));
}

double log_gamma_q(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return kNegInf;
  if (!use_series(a, x)) {
    return log_lower_prefix(a, x) + std::log(a) + std::log(upper_fraction(a, x));
  }
  const double log_p = log_lower_prefix(a, x) + std::log(lower_series(a, x));
  return std::log1p(-std::exp(log_p));
}

double gamma_p(double a, double x) { return std::exp(log_gamma_p(a, x)); }
double gamma_q(double a, double x) { return std::exp(log_gamma_q(a, x)); }

double gamma_log_pdf(double t, double shape, double scale) {
  if (!(t > 0.0) || !(shape > 0.0) || !(scale > 0.0)) {
    throw DomainError("gamma density: t, shape and scale must be positive");
  }
  return (shape - 1.0) * std::log(t) - t / scale - log_gamma(shape) - shape * std::log(scale);
}

double gamma_lower_quantile(double shape, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("gamma quantile: probability must lie in (0, 1)");
  return boost::math::gamma_p_inv(shape, p);
}

double gamma_upper_quantile(double shape, double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("gamma quantile: probability must lie in (0, 1)");
  return boost::math::gamma_q_inv(shape, q);
}

}  // namespace neurocap
