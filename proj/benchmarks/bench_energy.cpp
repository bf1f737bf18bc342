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


#include <benchmark/benchmark.h>

#include <array>
#include <cmath>
#include <random>

#include "anchor/anchor.hpp"

namespace {

// Uniform MMSet over n random points in the unit cube, Euclidean costs.
anchor::MMSet cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::array<double, 3>> pts(n);
  for (auto& p : pts)
    for (auto& c : p) c = unit(rng);
  anchor::Matrix costs(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      costs(i, j) = std::sqrt(s);
    }
  }
  return anchor::validate_mmset({}, std::move(costs));
}

void energy(benchmark::State& state, anchor::EnergyMethod method) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cloud(n, 1);
  const auto b = cloud(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(anchor::anchor_energy(a, b, 1, method));
  state.SetComplexityN(state.range(0));
}

void BM_EnergySweep(benchmark::State& state) { energy(state, anchor::EnergyMethod::Sweep); }
void BM_EnergyNaive(benchmark::State& state) { energy(state, anchor::EnergyMethod::Naive); }

void BM_CrossSumSweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f1 = anchor::anchor_family(cloud(n, 3));
  const auto f2 = anchor::anchor_family(cloud(n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(anchor::cross_sum_sweep(f1, f2));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * n));
}

void BM_AnchorWasserstein(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = cloud(n, 5);
  const auto b = cloud(n, 6);
  anchor::SolverConfig cfg;
  cfg.epsilon = 1e-3;
  for (auto _ : state) benchmark::DoNotOptimize(anchor::anchor_wasserstein(a, b, 1, cfg).distance_cost);
}

void BM_RankTransform(benchmark::State& state) {
  const auto costs = cloud(static_cast<std::size_t>(state.range(0)), 7).costs();
  for (auto _ : state) benchmark::DoNotOptimize(anchor::rank_transform(costs));
}

}  // namespace

BENCHMARK(BM_EnergySweep)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_EnergyNaive)->RangeMultiplier(2)->Range(64, 256)->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_CrossSumSweep)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnchorWasserstein)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankTransform)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
