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

using testing::random_family;
using testing::relative_gap;

MMSet two_point(double d) { return validate_mmset(std::vector<double>{0.5, 0.5}, Matrix{{0, d}, {d, 0}}); }

AnchorFamily singleton(double v) {
  return AnchorFamily::uniform({Distribution::uniform(std::vector<double>{v})});
}

TEST(PrefixAccumulator, SpreadMatchesDirectSum) {
  PrefixAccumulator acc({0.0, 0.25, 0.5, 1.0});
  acc.add(acc.slot_of(0.25), 0.3);
  acc.add(acc.slot_of(1.0), 0.5);
  acc.add(acc.slot_of(0.0), 0.2);
  EXPECT_NEAR(acc.total_weight(), 1.0, 1e-15);
  for (double c : {0.0, 0.25, 0.5, 1.0}) {
    const double direct = 0.3 * std::abs(c - 0.25) + 0.5 * std::abs(c - 1.0) + 0.2 * std::abs(c);
    EXPECT_NEAR(acc.spread(c), direct, 1e-15) << c;
  }
  // Moving mass keeps the totals consistent.
  acc.add(acc.slot_of(0.25), -0.3);
  acc.add(acc.slot_of(0.5), 0.3);
  EXPECT_NEAR(acc.weight_below(acc.slot_of(0.5)), 0.2, 1e-15);
  EXPECT_NEAR(acc.moment_below(acc.slot_of(1.0)), 0.15, 1e-15);
}

TEST(PrefixAccumulator, RejectsUnknownLevel) {
  PrefixAccumulator acc({0.0, 1.0});
  EXPECT_THROW(acc.slot_of(0.5), Error);
  EXPECT_THROW(PrefixAccumulator({1.0, 0.0}), Error);
}

TEST(CrossSum, SingleAnchorIdentical) {
  EXPECT_EQ(cross_sum_naive(singleton(0), singleton(0), 1), 0.0);
  EXPECT_EQ(cross_sum_sweep(singleton(0), singleton(0)), 0.0);
}

TEST(CrossSum, TwoPointExample) {
  const auto f1 = anchor_family(two_point(1));
  const auto f2 = anchor_family(two_point(2));
  EXPECT_DOUBLE_EQ(cross_sum_naive(f1, f2, 1), 0.5);
  EXPECT_DOUBLE_EQ(cross_sum_sweep(f1, f2), 0.5);
}

TEST(CrossSum, SharedDistributionIsZero) {
  const auto d = Distribution::uniform(std::vector<double>{0.5, 2, 3});
  const auto f = AnchorFamily::uniform({d, d, d});
  EXPECT_EQ(cross_sum_naive(f, f, 1), 0.0);
  EXPECT_NEAR(cross_sum_sweep(f, f), 0.0, 1e-15);
}

TEST(CrossSum, SingletonSegment) {
  EXPECT_DOUBLE_EQ(cross_sum_sweep(singleton(0), singleton(7.25)), 7.25);
  EXPECT_DOUBLE_EQ(cross_sum_naive(singleton(0), singleton(7.25), 1), 7.25);
}

TEST(CrossSum, SweepMatchesNaiveOnRandomTiedFamilies) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> size(1, 32);
  for (int t = 0; t < 500; ++t) {
    const auto f1 = random_family(size(rng), 32, rng);
    const auto f2 = random_family(size(rng), 32, rng);
    const double naive = cross_sum_naive(f1, f2, 1);
    ASSERT_LE(relative_gap(cross_sum_sweep(f1, f2), naive), 1e-9) << "trial " << t;
  }
}

TEST(CrossSum, TieOrderAndSymmetry) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto f1 = random_family(1 + t % 12, 12, rng);
    const auto f2 = random_family(1 + (t * 7) % 12, 12, rng);
    const SweepResult base = cross_sum_sweep_traced(f1, f2);
    EXPECT_GE(base.min_variation, -1e-9);
    EXPECT_EQ(base.events, f1.total_atoms() + f2.total_atoms());
    for (std::uint64_t s = 1; s <= 3; ++s) {
      SweepOptions opt;
      opt.tie_shuffle_seed = s;
      const SweepResult shuffled = cross_sum_sweep_traced(f1, f2, opt);
      EXPECT_NEAR(shuffled.value, base.value, 1e-9);
      EXPECT_GE(shuffled.min_variation, -1e-9);
    }
    EXPECT_NEAR(cross_sum_sweep(f2, f1), base.value, 1e-9);
  }
}

// Large enough that the event sort takes the radix path; signed values,
// signed zeros and many ties.
TEST(CrossSum, LargeFamiliesWithSignedValues) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> grid(-40, 40);
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  auto make = [&](std::size_t anchors, std::size_t atoms) {
    std::vector<Distribution> out;
    for (std::size_t i = 0; i < anchors; ++i) {
      std::vector<double> values(atoms), weights(atoms);
      double total = 0.0;
      for (std::size_t k = 0; k < atoms; ++k) {
        const int g = grid(rng);
        values[k] = g == 0 && k % 2 ? -0.0 : g * 0.37;
        weights[k] = unit(rng);
        total += weights[k];
      }
      for (auto& w : weights) w /= total;
      out.push_back(Distribution::from_values(values, weights));
    }
    return AnchorFamily::uniform(std::move(out));
  };
  const auto f1 = make(70, 70);
  const auto f2 = make(60, 90);
  ASSERT_GE(f1.total_atoms(), 4096u);
  EXPECT_LE(relative_gap(cross_sum_sweep(f1, f2), cross_sum_naive(f1, f2, 1)), 1e-9);
  EXPECT_LE(relative_gap(family_energy(f1, f2, 1, EnergyMethod::Sweep),
                         family_energy(f1, f2, 1, EnergyMethod::Naive)),
            1e-9);
  SweepOptions opt;
  opt.tie_shuffle_seed = 5;
  EXPECT_NEAR(cross_sum_sweep_traced(f1, f2, opt).value, cross_sum_sweep(f1, f2), 1e-9);
}

TEST(CrossSum, FrequentRefreshAgrees) {
  std::mt19937_64 rng(21);
  const auto f1 = random_family(20, 20, rng);
  const auto f2 = random_family(25, 20, rng);
  SweepOptions opt;
  opt.refresh_interval = 7;
  EXPECT_NEAR(cross_sum_sweep_traced(f1, f2, opt).value, cross_sum_sweep(f1, f2), 1e-10);
}

TEST(AnchorEnergy, TwoPointExample) {
  EXPECT_DOUBLE_EQ(anchor_energy(two_point(1), two_point(2), 1, EnergyMethod::Sweep), 1.0);
  EXPECT_DOUBLE_EQ(anchor_energy(two_point(1), two_point(2), 1, EnergyMethod::Naive), 1.0);
}

TEST(AnchorEnergy, SelfDistanceIsZero) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const MMSet s = testing::random_mmset(1 + t % 12, rng, t % 2 == 0);
    EXPECT_NEAR(anchor_energy(s, s, 1, EnergyMethod::Sweep), 0.0, 1e-9);
    EXPECT_NEAR(anchor_energy(s, s, 2, EnergyMethod::Naive), 0.0, 1e-9);
  }
}

TEST(AnchorEnergy, RankedScaleCopiesCoincide) {
  std::mt19937_64 rng(6);
  const Matrix c = testing::random_costs(9, rng, false);
  const MMSet a = validate_mmset({}, rank_transform(c));
  const MMSet b = validate_mmset({}, rank_transform(5.0 * c));
  EXPECT_EQ(anchor_energy(a, b, 1, EnergyMethod::Sweep), 0.0);
}

TEST(AnchorEnergy, NonnegativeAndSymmetric) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const MMSet a = testing::random_mmset(1 + t % 12, rng, true);
    const MMSet b = testing::random_mmset(1 + (t * 5) % 12, rng, false);
    for (int p : {1, 2}) {
      const double ab = anchor_energy(a, b, p, EnergyMethod::Naive);
      EXPECT_GE(ab, -1e-9);
      EXPECT_NEAR(ab, anchor_energy(b, a, p, EnergyMethod::Naive), 1e-9);
    }
    EXPECT_LE(relative_gap(anchor_energy(a, b, 1, EnergyMethod::Sweep),
                           anchor_energy(a, b, 1, EnergyMethod::Naive)),
              1e-9);
  }
}

TEST(AnchorEnergy, SquareRootSatisfiesTriangle) {
  // AE itself is a squared distance; its square root is the metric.
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const MMSet a = testing::random_mmset(2 + t % 11, rng);
    const MMSet b = testing::random_mmset(2 + (t * 3) % 11, rng);
    const MMSet c = testing::random_mmset(2 + (t * 7) % 11, rng);
    for (int p : {1, 2}) {
      auto d = [p](const MMSet& x, const MMSet& y) {
        return std::sqrt(std::max(0.0, anchor_energy(x, y, p, EnergyMethod::Naive)));
      };
      EXPECT_LE(d(a, c), d(a, b) + d(b, c) + 1e-8);
    }
  }
}

TEST(AnchorEnergy, TriangleCounterexampleForUnrootedValue) {
  // Three one-point-anchor families on a line: AE behaves like 2|x - y|
  // between singletons, but mixtures break additivity.
  const auto at = [](std::vector<double> values) {
    std::vector<Distribution> d;
    for (double v : values) d.push_back(Distribution::uniform(std::vector<double>{v}));
    return AnchorFamily::uniform(std::move(d));
  };
  const auto x = at({0.0});
  const auto y = at({0.0, 1.0});
  const auto z = at({1.0});
  const double xz = family_energy(x, z, 1, EnergyMethod::Naive);
  const double xy = family_energy(x, y, 1, EnergyMethod::Naive);
  const double yz = family_energy(y, z, 1, EnergyMethod::Naive);
  EXPECT_DOUBLE_EQ(xz, 2.0);
  EXPECT_DOUBLE_EQ(xy, 0.5);
  EXPECT_DOUBLE_EQ(yz, 0.5);
  EXPECT_GT(xz, xy + yz);
  EXPECT_LE(std::sqrt(xz), std::sqrt(xy) + std::sqrt(yz));
}

TEST(AnchorEnergy, MethodExponentMismatch) {
  try {
    anchor_energy(two_point(1), two_point(2), 2, EnergyMethod::Sweep);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MethodExponentMismatch);
  }
  EXPECT_EQ(parse_energy_method("sweep"), EnergyMethod::Sweep);
  EXPECT_EQ(parse_energy_method("naive"), EnergyMethod::Naive);
  EXPECT_FALSE(parse_energy_method("fast"));
}

}  // namespace
}  // namespace anchor
