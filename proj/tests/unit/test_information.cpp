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
#include <cmath>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "neurocap/error.hpp"
#include "neurocap/information.hpp"
#include "oracle_values.hpp"

namespace neurocap {
namespace {

DiscretePMF source256() {
  std::vector<double> p(256);
  for (std::size_t i = 0; i < 256; ++i) p[i] = i < 15 ? 0.05 : 0.25 / 241.0;
  return DiscretePMF::from_probs(p);
}

// X uniform on the faces of a die, Y its parity.
JointPMF die_parity() {
  std::vector<std::vector<double>> m(6, std::vector<double>(2, 0.0));
  for (int face = 1; face <= 6; ++face) m[face - 1][face % 2] = 1.0 / 6.0;
  return JointPMF({"1", "2", "3", "4", "5", "6"}, {"even", "odd"}, m);
}

TEST(Entropy, FairCoinIsOneBit) { EXPECT_DOUBLE_EQ(entropy(DiscretePMF::uniform(2)), 1.0); }

TEST(Entropy, CertainOutcomeIsZero) {
  EXPECT_EQ(entropy(DiscretePMF::from_probs({1.0})), 0.0);
  EXPECT_EQ(entropy(DiscretePMF::from_probs({0.0, 1.0, 0.0})), 0.0);
}

TEST(Entropy, SourceOf256Messages) {
  EXPECT_NEAR(entropy(source256()), 5.72, 0.005);
  EXPECT_NEAR(entropy(source256()), oracle::kSourceEntropy, 1e-12);
}

TEST(ConditionalEntropy, DieGivenParity) {
  EXPECT_NEAR(conditional_entropy(die_parity().transposed()), std::log2(3.0), 1e-12);
}

TEST(ConditionalEntropy, DeterministicFunctionHasNone) {
  EXPECT_EQ(conditional_entropy(die_parity()), 0.0);
}

TEST(ConditionalEntropy, IndependenceGivesMarginalEntropy) {
  const auto x = DiscretePMF::from_probs({0.2, 0.8});
  const auto y = DiscretePMF::from_probs({0.1, 0.6, 0.3});
  EXPECT_NEAR(conditional_entropy(JointPMF::independent(x, y)), entropy(y), 1e-12);
}

TEST(KlDivergence, EqualLawsGiveZero) {
  const auto p = DiscretePMF::from_probs({0.3, 0.7});
  EXPECT_EQ(kl_divergence(p, p), 0.0);
}

TEST(KlDivergence, PointMassAgainstUniform) {
  EXPECT_DOUBLE_EQ(kl_divergence(DiscretePMF::from_probs({1.0, 0.0}), DiscretePMF::uniform(2)),
                   1.0);
}

TEST(KlDivergence, SupportViolationIsInfiniteNotAnError) {
  const double d =
      kl_divergence(DiscretePMF::uniform(2), DiscretePMF::from_probs({1.0, 0.0}));
  EXPECT_EQ(d, kInfiniteDivergence);
  EXPECT_TRUE(std::isinf(d));
}

TEST(KlDivergence, AlphabetMismatchThrows) {
  EXPECT_THROW(kl_divergence(DiscretePMF::uniform(2), DiscretePMF::uniform(3)), ValidationError);
  EXPECT_THROW(kl_divergence(DiscretePMF({"a", "b"}, {0.5, 0.5}),
                             DiscretePMF({"a", "c"}, {0.5, 0.5})),
               ValidationError);
}

TEST(MutualInformation, DieParityIsOneBit) {
  const auto j = die_parity();
  EXPECT_NEAR(mutual_information(j), 1.0, 1e-12);
  EXPECT_NEAR(entropy(j.marginal_x()) - conditional_entropy(j.transposed()),
              std::log2(6.0) - std::log2(3.0), 1e-12);
}

TEST(MutualInformation, IndependentJointIsZero) {
  const auto j = JointPMF::independent(DiscretePMF::from_probs({0.4, 0.6}),
                                       DiscretePMF::from_probs({0.5, 0.25, 0.25}));
  EXPECT_NEAR(mutual_information(j), 0.0, 1e-15);
}

TEST(MutualInformation, IdentityChannel) {
  JointPMF j({"0", "1"}, {"0", "1"}, {{0.5, 0.0}, {0.0, 0.5}});
  EXPECT_DOUBLE_EQ(mutual_information(j), 1.0);
}

TEST(BinaryEntropy, Values) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.1), oracle::kBinaryEntropy0p1, 1e-15);
  EXPECT_NEAR(binary_entropy(0.1), 0.4690, 1e-4);
}

TEST(BinaryEntropy, OutOfRangeThrows) {
  EXPECT_THROW(binary_entropy(-0.01), ValidationError);
  EXPECT_THROW(binary_entropy(1.01), ValidationError);
  EXPECT_THROW(binary_entropy(std::nan("")), ValidationError);
}

TEST(Bsc, Capacity) {
  EXPECT_NEAR(bsc_capacity(0.1), 0.531, 1e-3);
  EXPECT_DOUBLE_EQ(bsc_capacity(0.0), 1.0);
  EXPECT_EQ(bsc_capacity(0.5), 0.0);
  EXPECT_THROW(bsc_capacity(2.0), ValidationError);
}

TEST(Bsc, MutualInformation) {
  EXPECT_NEAR(bsc_mutual_information(0.5, 0.1), bsc_capacity(0.1), 1e-15);
  EXPECT_EQ(bsc_mutual_information(0.0, 0.3), 0.0);
  EXPECT_NEAR(bsc_mutual_information(1.0, 0.3), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(bsc_mutual_information(0.5, 0.0), 1.0);
  EXPECT_THROW(bsc_mutual_information(-0.5, 0.1), ValidationError);
}

TEST(Bsc, MaximizedAtHalfOnAFineGrid) {
  for (double p : {0.01, 0.1, 0.25, 0.4}) {
    double best_q = 0.0;
    double best = -1.0;
    for (int k = 0; k <= 10000; ++k) {
      const double q = k / 10000.0;
      const double v = bsc_mutual_information(q, p);
      if (v > best) {
        best = v;
        best_q = q;
      }
    }
    EXPECT_NEAR(best_q, 0.5, 1e-4);
    EXPECT_NEAR(best, bsc_capacity(p), 1e-12);
  }
}

TEST(BinaryEntropy, Symmetric) {
  testing::Gen g(7);
  for (int i = 0; i < 1000; ++i) {
    const double t = g.uniform();
    EXPECT_NEAR(binary_entropy(t), binary_entropy(1.0 - t), 1e-14);
  }
}

// Chain rule: I = H(X) - H(X|Y) = H(Y) - H(Y|X).
TEST(InformationProperty, ChainRuleOnRandomJoints) {
  testing::Gen g(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto j = g.joint(g.size(1, 7), g.size(1, 7));
    const double mi = mutual_information(j);
    EXPECT_NEAR(mi, entropy(j.marginal_x()) - conditional_entropy(j.transposed()), 1e-10);
    EXPECT_NEAR(mi, entropy(j.marginal_y()) - conditional_entropy(j), 1e-10);
    EXPECT_GE(mi, -1e-12);
  }
}

TEST(InformationProperty, SymmetricUnderTranspose) {
  testing::Gen g(12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto j = g.joint(g.size(1, 6), g.size(1, 6));
    EXPECT_NEAR(mutual_information(j), mutual_information(j.transposed()), 1e-12);
  }
}

TEST(InformationProperty, EntropyBounds) {
  testing::Gen g(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = g.size(1, 40);
    const double h = entropy(g.pmf(n));
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log2(static_cast<double>(n)) + 1e-12);
  }
}

TEST(InformationProperty, DivergenceNonNegativeAndZeroOnlyOnEquality) {
  testing::Gen g(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = g.size(2, 12);
    const auto p = g.pmf(n);
    const auto q = g.pmf(n);
    const double d = kl_divergence(p, q);
    EXPECT_GE(d, 0.0);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(p[i] - q[i]));
    if (diff > 1e-12) {
      EXPECT_GT(d, 0.0);
    }
    EXPECT_EQ(kl_divergence(p, p), 0.0);
  }
}

}  // namespace
}  // namespace neurocap
