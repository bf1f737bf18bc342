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

#include <cstdint>

#include "anchor/distribution.hpp"

namespace anchor {

struct TestReport {
  double statistic = 0.0;
  /// Add-one permutation p-value, in [1 / (permutations + 1), 1].
  double p_value = 1.0;
  int permutations = 0;
  double alpha = 0.05;
  /// p_value <= alpha.
  bool reject = false;

  friend bool operator==(const TestReport&, const TestReport&) = default;
};

/// Energy distance between two families of 1D distributions with the raw
/// 1-Wasserstein distance as ground distance, evaluated by the sweep.
double energy_statistic(const AnchorFamily& first, const AnchorFamily& second);

/// Permutation two-sample test on the energy statistic. Families must carry
/// uniform weights (one unit per sample). Replica r draws its permutation
/// from a generator seeded with (seed, r), so the report does not depend on
/// the worker count.
TestReport permutation_test(const AnchorFamily& first, const AnchorFamily& second,
                            int permutations, double alpha, std::uint64_t seed,
                            std::size_t threads = 1);

}  // namespace anchor
