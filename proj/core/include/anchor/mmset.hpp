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

#include <optional>
#include <span>
#include <vector>

#include "anchor/matrix.hpp"

namespace anchor {

/// Tolerance under which weight vectors are considered to be on the simplex.
inline constexpr double kSimplexTolerance = 1e-12;
/// Largest drift from unit mass that ingestion silently renormalizes.
inline constexpr double kRenormalizeTolerance = 1e-9;

/// A measured metric set: a probability vector over n points together with
/// an n x n pairwise cost matrix. Immutable once built.
class MMSet {
 public:
  const std::vector<double>& weights() const noexcept { return weights_; }
  const Matrix& costs() const noexcept { return costs_; }
  std::size_t size() const noexcept { return weights_.size(); }

  friend MMSet validate_mmset(std::optional<std::vector<double>> weights, Matrix costs);

 private:
  MMSet(std::vector<double> weights, Matrix costs)
      : weights_(std::move(weights)), costs_(std::move(costs)) {}

  std::vector<double> weights_;
  Matrix costs_;
};

/// Checks and normalizes raw input into an MMSet. Absent weights become
/// uniform; a weight vector whose mass is within kRenormalizeTolerance of
/// one is rescaled, anything further off is rejected.
MMSet validate_mmset(std::optional<std::vector<double>> weights, Matrix costs);

/// Validates a standalone weight vector of the given length with the same
/// rules as validate_mmset.
std::vector<double> validate_weights(std::vector<double> weights, std::size_t expected);

std::vector<double> uniform_weights(std::size_t n);

}  // namespace anchor
