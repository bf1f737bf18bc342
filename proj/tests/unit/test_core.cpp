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

#include <map>
#include <numeric>

#include "test_support.hpp"

namespace anchor {
namespace {

using testing::random_costs;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an anchor::Error";
  return ErrorCode::IoError;
}

// ---- validate_mmset

TEST(ValidateMMSet, AbsentWeightsBecomeUniform) {
  const MMSet s = validate_mmset({}, Matrix{{0, 1}, {1, 0}});
  EXPECT_EQ(s.weights(), (std::vector<double>{0.5, 0.5}));
}

TEST(ValidateMMSet, ExplicitWeightsKept) {
  const MMSet s = validate_mmset(std::vector<double>{0.5, 0.5}, Matrix{{0, 1}, {1, 0}});
  EXPECT_EQ(s.weights(), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(s.costs(), (Matrix{{0, 1}, {1, 0}}));
}

TEST(ValidateMMSet, RejectsNonSquare) {
  EXPECT_EQ(code_of([] { validate_mmset({}, Matrix{{0, 1, 2}, {1, 0, 1}}); }), ErrorCode::NonSquare);
}

TEST(ValidateMMSet, RejectsNonFinite) {
  Matrix c{{0, 1}, {1, 0}};
  c(0, 1) = std::nan("");
  EXPECT_EQ(code_of([&] { validate_mmset({}, c); }), ErrorCode::NonFinite);
  c(0, 1) = INFINITY;
  EXPECT_EQ(code_of([&] { validate_mmset({}, c); }), ErrorCode::NonFinite);
}

TEST(ValidateMMSet, RejectsNegativeWeight) {
  EXPECT_EQ(code_of([] { validate_mmset(std::vector<double>{1.5, -0.5}, Matrix{{0, 1}, {1, 0}}); }),
            ErrorCode::NegativeWeight);
}

TEST(ValidateMMSet, WeightSumTolerance) {
  // Drift below 1e-9 is renormalized, larger drift rejected.
  const MMSet s = validate_mmset(std::vector<double>{0.5, 0.5 + 4e-10}, Matrix{{0, 1}, {1, 0}});
  EXPECT_NEAR(s.weights()[0] + s.weights()[1], 1.0, 1e-15);
  EXPECT_EQ(code_of([] { validate_mmset(std::vector<double>{0.5, 0.51}, Matrix{{0, 1}, {1, 0}}); }),
            ErrorCode::WeightSumOutOfTolerance);
}

TEST(ValidateMMSet, RejectsWrongWeightLength) {
  EXPECT_EQ(code_of([] { validate_mmset(std::vector<double>{1.0}, Matrix{{0, 1}, {1, 0}}); }),
            ErrorCode::DimensionMismatch);
}

TEST(ValidateMMSet, RejectsEmpty) {
  EXPECT_THROW(validate_mmset({}, Matrix(0, 0)), Error);
}

// ---- anchor_family

TEST(AnchorFamily, TwoPointUniform) {
  const auto f = anchor_family(validate_mmset(std::vector<double>{0.5, 0.5}, Matrix{{0, 1}, {1, 0}}));
  ASSERT_EQ(f.size(), 2u);
  for (const auto& d : f.anchors()) {
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d.atoms()[0].value, 0.0);
    EXPECT_EQ(d.atoms()[0].weight, 0.5);
    EXPECT_EQ(d.atoms()[1].value, 1.0);
    EXPECT_EQ(d.atoms()[1].weight, 0.5);
  }
  // The second row [1, 0] is resorted.
  EXPECT_EQ(f.anchors()[1].atoms()[0].index, 1u);
}

TEST(AnchorFamily, SinglePoint) {
  const auto f = anchor_family(validate_mmset({}, Matrix{{0}}));
  ASSERT_EQ(f.size(), 1u);
  ASSERT_EQ(f.anchors()[0].size(), 1u);
  EXPECT_EQ(f.anchors()[0].atoms()[0].value, 0.0);
  EXPECT_EQ(f.anchors()[0].atoms()[0].weight, 1.0);
}

TEST(AnchorFamily, WeightsAttachToColumns) {
  const auto f = anchor_family(validate_mmset(std::vector<double>{0.75, 0.25}, Matrix{{0, 4}, {4, 0}}));
  const auto a0 = f.anchors()[0].atoms();
  const auto a1 = f.anchors()[1].atoms();
  EXPECT_EQ(a0[0].value, 0.0);
  EXPECT_EQ(a0[0].weight, 0.75);
  EXPECT_EQ(a0[1].value, 4.0);
  EXPECT_EQ(a0[1].weight, 0.25);
  EXPECT_EQ(a1[0].value, 0.0);
  EXPECT_EQ(a1[0].weight, 0.25);
  EXPECT_EQ(a1[1].value, 4.0);
  EXPECT_EQ(a1[1].weight, 0.75);
  EXPECT_EQ(f.weights(), (std::vector<double>{0.75, 0.25}));
}

TEST(AnchorFamily, StableTieOrder) {
  const auto d = Distribution::uniform(std::vector<double>{2, 1, 2, 1});
  std::vector<std::size_t> order;
  for (const auto& a : d.atoms()) order.push_back(a.index);
  EXPECT_EQ(order, (std::vector<std::size_t>{1, 3, 0, 2}));
}

TEST(AnchorFamily, MassPreserved) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const auto f = anchor_family(testing::random_mmset(1 + t % 17, rng, t % 2 == 0));
    for (const auto& d : f.anchors()) {
      double total = 0.0;
      double prev = -INFINITY;
      for (const auto& a : d.atoms()) {
        total += a.weight;
        EXPECT_GE(a.value, prev);
        prev = a.value;
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

// ---- ot1d

// Uniform midpoint Riemann sum of |Q_mu(u) - Q_nu(u)|^p. With weights that
// are multiples of 1/denominator and a grid that refines that lattice, no
// midpoint falls on a quantile jump, so the sum is exact up to roundoff.
double quantile_riemann(const Distribution& mu, const Distribution& nu, int p, std::size_t cells) {
  auto quantile = [](const Distribution& d, double u) {
    double cum = 0.0;
    for (const auto& a : d.atoms()) {
      cum += a.weight;
      if (u < cum) return a.value;
    }
    return d.atoms().back().value;
  };
  double total = 0.0;
  for (std::size_t k = 0; k < cells; ++k) {
    const double u = (static_cast<double>(k) + 0.5) / static_cast<double>(cells);
    total += std::pow(std::abs(quantile(mu, u) - quantile(nu, u)), p);
  }
  return total / static_cast<double>(cells);
}

Distribution lattice_distribution(std::size_t k, int denominator, std::mt19937_64& rng) {
  // k atoms with weights c_i / denominator, c_i >= 1.
  std::vector<int> counts(k, 1);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (int r = static_cast<int>(k); r < denominator; ++r) ++counts[pick(rng)];
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> values(k), weights(k);
  for (std::size_t i = 0; i < k; ++i) {
    values[i] = std::round(u(rng) * 4.0) / 4.0;
    weights[i] = counts[i] / static_cast<double>(denominator);
  }
  double s = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= s;
  return Distribution::from_values(values, weights);
}

TEST(Ot1d, PointMasses) {
  EXPECT_EQ(ot1d(Distribution::uniform(std::vector<double>{0}), Distribution::uniform(std::vector<double>{5}), 1), 5.0);
  EXPECT_EQ(ot1d(Distribution::uniform(std::vector<double>{0}), Distribution::uniform(std::vector<double>{5}), 2), 25.0);
}

TEST(Ot1d, UniformPairs) {
  EXPECT_DOUBLE_EQ(ot1d(Distribution::uniform(std::vector<double>{0, 1}),
                        Distribution::uniform(std::vector<double>{0, 2}), 1),
                   0.5);
}

TEST(Ot1d, UnequalWeightsAgainstRiemannSum) {
  const auto mu = Distribution::from_values(std::vector<double>{0, 4}, std::vector<double>{0.75, 0.25});
  const auto nu = Distribution::from_values(std::vector<double>{0, 2}, std::vector<double>{0.5, 0.5});
  const double oracle = quantile_riemann(mu, nu, 1, 4000);
  EXPECT_NEAR(oracle, 1.0, 1e-12);
  EXPECT_NEAR(ot1d(mu, nu, 1), oracle, 1e-12);
}

TEST(Ot1d, RejectsBadExponent) {
  const auto d = Distribution::uniform(std::vector<double>{0});
  try {
    ot1d(d, d, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidExponent);
  }
}

TEST(Ot1d, MatchesRiemannOracle) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> k(1, 16);
  for (int t = 0; t < 200; ++t) {
    const auto mu = lattice_distribution(k(rng), 48, rng);
    const auto nu = lattice_distribution(k(rng), 48, rng);
    for (int p : {1, 2}) {
      const double oracle = quantile_riemann(mu, nu, p, 48 * 25);
      EXPECT_LE(testing::relative_gap(ot1d(mu, nu, p), oracle), 1e-6) << "trial " << t << " p " << p;
    }
  }
}

TEST(Ot1d, IdentitySymmetryTriangle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const auto f = testing::random_family(3, 16, rng);
    const auto& a = f.anchors()[0];
    const auto& b = f.anchors()[1];
    const auto& c = f.anchors()[2];
    for (int p : {1, 2}) {
      EXPECT_EQ(ot1d(a, a, p), 0.0);
      EXPECT_NEAR(ot1d(a, b, p), ot1d(b, a, p), 1e-12);
    }
    EXPECT_LE(ot1d(a, c, 1), ot1d(a, b, 1) + ot1d(b, c, 1) + 1e-9);
  }
}

// ---- rank_transform

TEST(RankTransform, WorkedExampleUsesStrictCounts) {
  const Matrix c{{0, 4.5, 4.1, 4.3}, {4.5, 0, 0.5, 0.4}, {4.1, 0.5, 0, 0.5}, {4.3, 0.4, 0.5, 0}};
  const Matrix r = rank_transform(c);
  const std::map<double, double> expected{{0.0, 0.0},          {0.4, 4.0 / 16},   {0.5, 6.0 / 16},
                                          {4.1, 10.0 / 16},    {4.3, 12.0 / 16},  {4.5, 14.0 / 16}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(r(i, j), expected.at(c(i, j))) << i << "," << j;
  }
}

TEST(RankTransform, SingleEntry) { EXPECT_EQ(rank_transform(Matrix{{0}}), Matrix{{0}}); }

TEST(RankTransform, ScaleAndMonotoneInvariance) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const Matrix c = random_costs(2 + t % 9, rng, t % 2 == 0);
    const Matrix r = rank_transform(c);
    EXPECT_EQ(r, rank_transform(3.0 * c));
    Matrix g = c;
    for (auto& v : g.data()) v = std::exp(v) + v * v * v;
    EXPECT_EQ(r, rank_transform(g));
    for (double v : r.data()) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 1.0);
    }
  }
}

TEST(RankTransform, MatchesBruteForce) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + t % 8;
    const Matrix c = random_costs(n, rng, true);
    const Matrix r = rank_transform(c);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t below = 0;
        for (double v : c.data()) below += v < c(i, j) ? 1 : 0;
        EXPECT_EQ(r(i, j), static_cast<double>(below) / static_cast<double>(n * n));
      }
    }
  }
}

TEST(RankTransform, RejectsInvalid) {
  EXPECT_EQ(code_of([] { rank_transform(Matrix(2, 3)); }), ErrorCode::NonSquare);
  Matrix c(2, 2);
  c(1, 1) = NAN;
  EXPECT_EQ(code_of([&] { rank_transform(c); }), ErrorCode::NonFinite);
}

// ---- Fenwick tree

TEST(Fenwick, PrefixAndRange) {
  FenwickTree<double> t(10);
  std::vector<double> ref(10, 0.0);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> idx(0, 9);
  for (int step = 0; step < 500; ++step) {
    const std::size_t i = idx(rng);
    const double d = static_cast<double>(static_cast<int>(idx(rng)) - 4);
    t.add(i, d);
    ref[i] += d;
    const std::size_t a = idx(rng), b = idx(rng);
    const auto lo = std::min(a, b), hi = std::max(a, b) + 1;
    EXPECT_EQ(t.range(lo, hi), std::accumulate(ref.begin() + lo, ref.begin() + hi, 0.0));
  }
  t.clear();
  EXPECT_EQ(t.prefix(10), 0.0);
}

}  // namespace
}  // namespace anchor
