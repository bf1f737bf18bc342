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

#include "anchor/mmset.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "anchor/error.hpp"
#include "exact_sum.hpp"

namespace anchor {

std::vector<double> uniform_weights(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

std::vector<double> validate_weights(std::vector<double> weights, std::size_t expected) {
  if (weights.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch, "weight vector has length " +
                                                  std::to_string(weights.size()) + ", expected " +
                                                  std::to_string(expected));
  }
  // Correctly rounded, so the total does not depend on point order.
  detail::ExactSum sum;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i])) {
      throw Error(ErrorCode::NonFinite, "weight " + std::to_string(i) + " is not finite");
    }
    if (weights[i] < 0.0) {
      throw Error(ErrorCode::NegativeWeight, "weight " + std::to_string(i) + " is negative");
    }
    sum.add(weights[i]);
  }
  const double total = sum.value();
  const double drift = std::abs(total - 1.0);
  if (drift > kRenormalizeTolerance) {
    throw Error(ErrorCode::WeightSumOutOfTolerance,
                "weights sum to " + std::to_string(total) + ", not 1");
  }
  if (drift > 0.0) {
    for (double& w : weights) w /= total;
  }
  return weights;
}

MMSet validate_mmset(std::optional<std::vector<double>> weights, Matrix costs) {
  if (!costs.square()) {
    throw Error(ErrorCode::NonSquare, "cost matrix is " + std::to_string(costs.rows()) + "x" +
                                          std::to_string(costs.cols()));
  }
  if (costs.rows() == 0) {
    throw Error(ErrorCode::InvalidParams, "an MMSet needs at least one point");
  }
  if (!costs.all_finite()) {
    throw Error(ErrorCode::NonFinite, "cost matrix contains NaN or infinity");
  }
  const std::size_t n = costs.rows();
  std::vector<double> w =
      weights ? validate_weights(std::move(*weights), n) : uniform_weights(n);
  return MMSet(std::move(w), std::move(costs));
}

}  // namespace anchor
