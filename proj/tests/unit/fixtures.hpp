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

#include "neurocap/capacity.hpp"
#include "neurocap/ensemble.hpp"

namespace neurocap::testing {

inline ChannelModel temporal_model(double kappa, double a0 = kDefaultA0, double b0 = kDefaultB0) {
  return ChannelModel::temporal(GammaChannel(kappa, a0, b0));
}

inline ChannelModel rate_model(double kappa, double a0 = kDefaultA0, double b0 = kDefaultB0,
                               double delta = kDefaultDelta) {
  return ChannelModel::rate(CountChannelConfig(GammaChannel(kappa, a0, b0), delta));
}

inline ChannelModel model_for(Coding coding, double kappa) {
  return coding == Coding::kRate ? rate_model(kappa) : temporal_model(kappa);
}

inline InputEnsemble scaled(const InputEnsemble& e, double factor) {
  std::vector<double> pts = e.points();
  for (double& p : pts) p *= factor;
  return InputEnsemble(pts, e.weights());
}

}  // namespace neurocap::testing
