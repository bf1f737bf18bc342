// Copyright 2026 The Anchor Energy Authors.
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


#include <gtest/gtest.h>

#include "test_support.hpp"

namespace anchor {
namespace {

AnchorFamily copies(double v, std::size_t count) {
  return AnchorFamily::uniform(
      std::vector<Distribution>(count, Distribution::uniform(std::vector<double>{v})));
}

AnchorFamily degree_family(bool barabasi, std::size_t count, std::size_t n, std::uint64_t seed) {
  std::vector<Distribution> d;
  for (std::size_t k = 0; k < count; ++k) {
    const Graph g = barabasi ? ba_generate(n, 2, seed * 1000 + k) : er_generate(n, 0.05, seed * 1000 + k);
    d.push_back(graph_feature(g, GraphFeature::Degree));
  }
  return AnchorFamily::uniform(std::move(d));
}

TEST(EnergyStatistic, IdenticalFamilies) {
  std::mt19937_64 rng(1);
  auto f = testing::random_family(6, 8, rng);
  f = AnchorFamily::uniform(f.anchors());
  EXPECT_NEAR(energy_statistic(f, f), 0.0, 1e-9);
}

TEST(EnergyStatistic, Singletons) { EXPECT_DOUBLE_EQ(energy_statistic(copies(0, 1), copies(2, 1)), 4.0); }

TEST(EnergyStatistic, ErdosRenyiVersusBarabasiAlbert) {
  const auto er = degree_family(false, 20, 100, 3);
  const auto ba = degree_family(true, 20, 100, 3);
  const double stat = energy_statistic(er, ba);
  EXPECT_GT(stat, 0.0);
  EXPECT_LE(testing::relative_gap(stat, family_energy(er, ba, 1, EnergyMethod::Naive)), 1e-9);
  EXPECT_NEAR(stat, energy_statistic(ba, er), 1e-9);
}

TEST(PermutationTest, IdenticalCopies) {
  const auto r = permutation_test(copies(1.5, 5), copies(1.5, 5), 99, 0.05, 7);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.p_value, 1.0);
  EXPECT_FALSE(r.reject);
  EXPECT_EQ(r.permutations, 99);
}

TEST(PermutationTest, ExtremeSeparation) {
  const auto r = permutation_test(copies(0, 10), copies(100, 10), 199, 0.05, 11);
  EXPECT_GT(r.statistic, 0.0);
  // Only the identity split and its swap reach the observed value.
  EXPECT_LE(r.p_value, 2.0 / 200.0);
  EXPECT_GE(r.p_value, 1.0 / 200.0);
  EXPECT_TRUE(r.reject);
}

TEST(PermutationTest, InvalidParams) {
  try {
    permutation_test(copies(0, 3), copies(1, 3), 0, 0.05, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParams);
  }
  const AnchorFamily skewed({0.9, 0.1}, copies(0, 2).anchors());
  EXPECT_THROW(permutation_test(skewed, copies(1, 2), 9, 0.05, 1), Error);
}

TEST(PermutationTest, DeterministicAcrossThreadCounts) {
  const auto er = degree_family(false, 8, 60, 5);
  const auto ba = degree_family(true, 8, 60, 5);
  const auto one = permutation_test(er, ba, 49, 0.05, 123, 1);
  EXPECT_EQ(one, permutation_test(er, ba, 49, 0.05, 123, 1));
  EXPECT_EQ(one, permutation_test(er, ba, 49, 0.05, 123, 4));
  EXPECT_EQ(one.reject, one.p_value <= one.alpha);
  EXPECT_GE(one.p_value, 1.0 / 50.0);
}

TEST(PermutationTest, NullRejectionRateIsModerate) {
  // Reduced-scale calibration; the full run lives in the acceptance suite.
  int rejections = 0;
  const int runs = 40;
  for (int r = 0; r < runs; ++r) {
    std::vector<Distribution> a, b;
    for (int k = 0; k < 10; ++k) {
      a.push_back(graph_feature(er_generate(60, 0.1, 100000 + r * 100 + k), GraphFeature::Degree));
      b.push_back(graph_feature(er_generate(60, 0.1, 200000 + r * 100 + k), GraphFeature::Degree));
    }
    const auto rep = permutation_test(AnchorFamily::uniform(a), AnchorFamily::uniform(b), 99, 0.05,
                                      static_cast<std::uint64_t>(r));
    rejections += rep.reject ? 1 : 0;
  }
  EXPECT_LE(rejections, 8);
}

}  // namespace
}  // namespace anchor
