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


#pragma once

// Random instance generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "anchor/anchor.hpp"

namespace anchor::testing {

inline std::vector<double> random_simplex(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = u(rng));
  for (auto& x : w) x /= total;
  return w;
}

/// Symmetric cost matrix with zero diagonal. Values are drawn from a small
/// grid when `ties` is set so that repeated entries are common.
inline Matrix random_costs(std::size_t n, std::mt19937_64& rng, bool ties) {
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::uniform_int_distribution<int> grid(0, 6);
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      c(i, j) = c(j, i) = ties ? 0.5 * grid(rng) : u(rng);
    }
  }
  return c;
}

inline MMSet random_mmset(std::size_t n, std::mt19937_64& rng, bool ties = false,
                          bool uniform = false) {
  std::optional<std::vector<double>> w;
  if (!uniform) w = random_simplex(n, rng);
  return validate_mmset(std::move(w), random_costs(n, rng, ties));
}

/// Costs from points in the plane: a genuine metric.
inline Matrix euclidean_costs(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng)};
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c(i, j) = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    }
  }
  return c;
}

/// Family of distributions with random atoms; some values are duplicated on
/// purpose so that sweep events tie.
inline AnchorFamily random_family(std::size_t anchors, std::size_t max_atoms,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(1, max_atoms);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::bernoulli_distribution dup(0.3);
  std::vector<Distribution> dists;
  std::vector<double> pool{0.0, 1.0, 2.5};
  for (std::size_t a = 0; a < anchors; ++a) {
    const std::size_t k = count(rng);
    std::vector<double> values(k);
    for (auto& v : values) {
      if (dup(rng)) {
        v = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      } else {
        v = u(rng);
        pool.push_back(v);
      }
    }
    dists.push_back(Distribution::from_values(values, random_simplex(k, rng)));
  }
  return AnchorFamily(random_simplex(anchors, rng), std::move(dists));
}

inline double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace anchor::testing
