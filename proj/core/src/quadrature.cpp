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
#include "neurocap/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "neurocap/error.hpp"

namespace neurocap {

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, unsigned max_depth) {
  if (!(b > a)) throw ValidationError("quadrature: empty or reversed interval");
  if (!(abs_tol > 0.0 || rel_tol > 0.0)) {
    throw ValidationError("quadrature: need a positive absolute or relative tolerance");
  }
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
  // Boost stops splitting a piece once its error is below tol times the
  // piece's own estimate, so the total error stays under tol * L1. A single
  // non-adaptive pass estimates L1 and converts the requested target into that
  // form; near-zero integrals would otherwise recurse to max_depth everywhere.
  double error = 0.0;
  double l1 = 0.0;
  Rule::integrate(f, a, b, 0, 1.0, &error, &l1);
  const double wanted = std::max(abs_tol, rel_tol * l1);
  const double boost_tol = std::min(0.25 * wanted / std::max(l1, 1e-300), 1.0);
  const double value = Rule::integrate(f, a, b, max_depth, boost_tol, &error, &l1);
  const double target = std::max(abs_tol, rel_tol * l1);
  if (!std::isfinite(value) || error > target) {
    std::ostringstream os;
    os.precision(6);
    os << "quadrature on [" << a << ", " << b << "] reached error " << error
       << ", requested " << target;
    throw QuadratureError(os.str(), value, error);
  }
  return {value, error};
}

QuadratureRule composite_gauss_legendre(double a, double b, double max_panel_width) {
  if (!(b > a)) throw ValidationError("quadrature: empty or reversed interval");
  if (!(max_panel_width > 0.0)) throw ValidationError("quadrature: panel width must be positive");
  using Rule = boost::math::quadrature::gauss<double, 10>;
  const auto& abscissa = Rule::abscissa();
  const auto& weights = Rule::weights();

  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_panel_width));
  const double h = (b - a) / static_cast<double>(panels);
  QuadratureRule rule;
  rule.nodes.reserve(panels * 10);
  rule.weights.reserve(panels * 10);
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * h;
    const double half = 0.5 * h;
    // Boost stores the non-negative half of the symmetric rule.
    for (std::size_t k = abscissa.size(); k-- > 0;) {
      if (abscissa[k] == 0.0) continue;
      rule.nodes.push_back(mid - half * abscissa[k]);
      rule.weights.push_back(half * weights[k]);
    }
    for (std::size_t k = 0; k < abscissa.size(); ++k) {
      rule.nodes.push_back(mid + half * abscissa[k]);
      rule.weights.push_back(half * weights[k]);
    }
  }
  return rule;
}

}  // namespace neurocap
