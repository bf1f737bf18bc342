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

#include "anchor/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "anchor/error.hpp"
#include "anchor/parallel.hpp"
#include "anchor/sweep.hpp"

namespace anchor {
namespace {

// Permuted statistics within this distance of the observed one count as
// ties; identical partitions can differ by summation order only.
constexpr double kTieTolerance = 1e-9;

void require_uniform(const AnchorFamily& family) {
  const double expected = 1.0 / static_cast<double>(family.size());
  for (double w : family.weights()) {
    if (std::abs(w - expected) > kSimplexTolerance) {
      throw Error(ErrorCode::InvalidParams, "permutation test needs uniform family weights");
    }
  }
}

}  // namespace

double energy_statistic(const AnchorFamily& first, const AnchorFamily& second) {
  return family_energy(first, second, 1, EnergyMethod::Sweep);
}

TestReport permutation_test(const AnchorFamily& first, const AnchorFamily& second,
                            int permutations, double alpha, std::uint64_t seed,
                            std::size_t threads) {
  if (permutations < 1) throw Error(ErrorCode::InvalidParams, "need at least one permutation");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw Error(ErrorCode::InvalidParams, "alpha must lie in (0, 1)");
  }
  require_uniform(first);
  require_uniform(second);

  std::vector<Distribution> pooled(first.anchors());
  pooled.insert(pooled.end(), second.anchors().begin(), second.anchors().end());
  const std::size_t s1 = first.size();

  const double observed = energy_statistic(first, second);
  std::vector<double> replicas(static_cast<std::size_t>(permutations));
  parallel_for(replicas.size(), threads, [&](std::size_t r) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<std::size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Distribution> a, b;
    a.reserve(s1);
    b.reserve(pooled.size() - s1);
    for (std::size_t k = 0; k < order.size(); ++k) {
      (k < s1 ? a : b).push_back(pooled[order[k]]);
    }
    replicas[r] = energy_statistic(AnchorFamily::uniform(std::move(a)),
                                   AnchorFamily::uniform(std::move(b)));
  });

  const double threshold = observed - kTieTolerance * std::max(1.0, std::abs(observed));
  const auto exceed = std::count_if(replicas.begin(), replicas.end(),
                                    [&](double v) { return v >= threshold; });
  TestReport report;
  report.statistic = observed;
  report.permutations = permutations;
  report.alpha = alpha;
  report.p_value = static_cast<double>(1 + exceed) / static_cast<double>(1 + permutations);
  report.reject = report.p_value <= alpha;
  return report;
}

}  // namespace anchor
