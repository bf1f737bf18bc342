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

#include "anchor/rank.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "anchor/error.hpp"

namespace anchor {

Matrix rank_transform(const Matrix& costs) {
  if (!costs.square()) throw Error(ErrorCode::NonSquare, "rank transform needs a square matrix");
  if (!costs.all_finite()) throw Error(ErrorCode::NonFinite, "cost matrix contains NaN or infinity");

  const auto values = costs.data();
  std::vector<std::uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t x, std::uint32_t y) { return values[x] < values[y]; });

  const double total = static_cast<double>(values.size());
  Matrix ranked(costs.rows(), costs.cols());
  auto out = ranked.data();
  std::size_t group_start = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (pos > 0 && values[order[pos]] != values[order[pos - 1]]) group_start = pos;
    out[order[pos]] = static_cast<double>(group_start) / total;
  }
  return ranked;
}

}  // namespace anchor
