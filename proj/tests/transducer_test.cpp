// Copyright 2026 The gcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcap/transducer.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "gcap/errors.hpp"
#include "oracles.hpp"

using namespace gcap;

TEST(Cooperativity, Definition) {
  EXPECT_EQ(cooperativity({0.0, 1e6, 2e6}), 0.0);
  // 4 g^2 = 0.1 kappa_o kappa_e
  const double ko = 2.0e7, ke = 5.0e6;
  const double g = std::sqrt(0.1 * ko * ke / 4.0);
  EXPECT_NEAR(cooperativity({g, ko, ke}), 0.1, 1e-15);
}

TEST(Cooperativity, UnstableOrInvalid) {
  EXPECT_THROW(cooperativity({1.0, 2.0, 2.0}), InvalidArgument);  // C_g = 1
  EXPECT_THROW(cooperativity({2.0, 2.0, 2.0}), InvalidArgument);
  EXPECT_THROW(cooperativity({0.1, 0.0, 2.0}), InvalidArgument);
  EXPECT_THROW(cooperativity({0.1, 1.0, -2.0}), InvalidArgument);
}

TEST(GainFromCooperativity, Examples) {
  EXPECT_EQ(gain_from_cooperativity(0.0), 1.0);
  // (1.1 / 0.9)^2
  EXPECT_NEAR(gain_from_cooperativity(0.1), 1.493827160493827, 1e-12);
  EXPECT_GT(gain_from_cooperativity(1.0 - 1e-9), 1e18);
  EXPECT_THROW(gain_from_cooperativity(1.0), InvalidArgument);
  EXPECT_THROW(gain_from_cooperativity(-0.01), InvalidArgument);
}

TEST(GainFromCooperativity, IncreasingAndInvertible) {
  double prev = 0.0;
  for (double c = 0.0; c < 0.999; c += 1e-3) {
    const double g = gain_from_cooperativity(c);
    EXPECT_GT(g, prev);
    prev = g;
    EXPECT_NEAR(cooperativity_from_gain(g), c, 1e-12);
  }
}

TEST(TransductionQlb, ThresholdAtOptimalGprime) {
  const double G = gain_from_cooperativity(0.1);
  // n_e = 0 at the optimum so positivity needs tau > 1/2.
  const double threshold = 1.0 + 0.5 / (G - 1.0);
  EXPECT_NEAR(threshold, 2.0125, 1e-12);
  for (double gpp : {threshold + 1e-3, 2.2, 2.8}) {
    const auto best = optimal_gprime(G, gpp);
    EXPECT_GT(transduction_qlb(0.1, best.g_prime, gpp), 0.0);
  }
  for (double gpp : {1.5, threshold - 1e-3}) {
    const auto best = optimal_gprime(G, gpp);
    EXPECT_EQ(transduction_qlb(0.1, best.g_prime, gpp), 0.0);
  }
}

TEST(TransductionQlb, NoActivationWithoutSqueezers) {
  EXPECT_EQ(transduction_qlb(0.1, 1.0, 1.0), 0.0);
}

TEST(TransductionQlb, MatchesChannelPath) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const double c = oracle::uniform(rng, 0.01, 0.9);
    const double gp = oracle::uniform(rng, 1.0, 30.0);
    const double gpp = oracle::uniform(rng, 1.0, 4.0);
    const double direct =
        q_lower_bound(eac_channel({gain_from_cooperativity(c), gp, gpp}));
    EXPECT_EQ(transduction_qlb(c, gp, gpp), direct);
  }
}

TEST(TransductionQlb, LargerCooperativityWidensSmallSqueezingRegion) {
  // Positive cells on a fixed small-squeezing window G', G'' in [1, 3].
  // Counts from an independent scan: 0, 205, 1792, 1798.
  std::size_t prev = 0;
  for (double c : {0.05, 0.1, 0.2, 0.4}) {
    std::size_t positive = 0;
    for (int i = 0; i < 60; ++i) {
      for (int j = 0; j < 60; ++j) {
        const double gp = 1.0 + 2.0 * i / 59.0;
        const double gpp = 1.0 + 2.0 * j / 59.0;
        if (transduction_qlb(c, gp, gpp) > 0.0) ++positive;
      }
    }
    EXPECT_GE(positive, prev) << "C_g = " << c;
    prev = positive;
  }
  EXPECT_GT(prev, 0u);
}

TEST(TransductionQlb, ActivationThresholdFallsWithCooperativity) {
  // At the optimal G' the bound is positive iff tau > 1/2, i.e.
  // G'' > 1 + 1 / (2 (G - 1)).
  double prev = 1e300;
  for (double c : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    const double G = gain_from_cooperativity(c);
    const double threshold = 1.0 + 0.5 / (G - 1.0);
    EXPECT_LT(threshold, prev);
    prev = threshold;
    const double above = threshold * (1.0 + 1e-3);
    if (std::abs((G - 1.0) * (above - 1.0) - 1.0) > 1e-6) {
      EXPECT_GT(transduction_qlb(c, optimal_gprime(G, above).g_prime, above),
                0.0);
    }
  }
}

TEST(TransductionQlb, RejectsOutOfRangeCooperativity) {
  EXPECT_THROW(transduction_qlb(0.0, 2.0, 2.0), InvalidArgument);
  EXPECT_THROW(transduction_qlb(1.0, 2.0, 2.0), InvalidArgument);
}
