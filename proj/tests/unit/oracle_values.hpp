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

// Generated by tests/oracles/gen_oracles.py (mpmath, 50 digits). Do not edit.

namespace neurocap::oracle {

inline constexpr double kBinaryEntropy0p1 = 0.46899559358928122;
inline constexpr double kSourceEntropy = 5.7196684052230122;
struct GammaOracle { double a, x, log_p, log_q; };
inline constexpr GammaOracle kGammaOracles[] = {
    {0.5, 0.001, -3.3334286907475343, -0.036322332917113243},
    {1.0, 2.0, -0.14541345786885906, -2.0},
    {3.0, 5.0, -0.13313377966369797, -2.0822292679157209},
    {3.0, 0.01, -15.614768151150607, -0.0000001654216664896508},
    {20.0, 100.0, -0.00000000000000000000003764893576001475, -51.633737544676978},
    {150.0, 120.0, -5.389678268114548, -0.0045738855891200239},
    {300.0, 250.0, -6.7572739248572288, -0.0011630697345143963},
    {300.0, 350.0, -0.0028999733928857306, -5.8445033531850183},
    {1500.0, 1600.0, -0.0056333234413783437, -5.1818710411482661},
    {2.5, 40.0, -0.00000000000000083918251148316136, -34.714103456537936},
};
inline constexpr double kCountMeanKappa3X10 = 2.9999999671589508;
inline constexpr double kCountPmfKappa3X5R2 = 0.31594571044508832;
inline constexpr double kCountPmfKappaHalfX1R3 = 0.16335217787200481;
inline constexpr double kTwoPointLowDensity = 0.90681800955968439;
inline constexpr double kTwoPointHighDensity = 0.84441006724478543;
inline constexpr double kTwoPointMidDensity = 1.0200562673938738;
inline constexpr double kThreePointRateMi = 1.5217869939291902;

}  // namespace neurocap::oracle
