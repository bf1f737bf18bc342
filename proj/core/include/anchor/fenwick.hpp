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

#include <cassert>
#include <cstddef>
#include <vector>

namespace anchor {

/// Binary indexed tree over a fixed number of slots.
///
/// add(i, x) adds x to slot i; prefix(k) returns the sum of slots [0, k).
/// Both run in O(log n).
template <typename T>
class FenwickTree {
 public:
  FenwickTree() = default;
  explicit FenwickTree(std::size_t n) : tree_(n + 1, T{}) {}

  std::size_t size() const noexcept { return tree_.empty() ? 0 : tree_.size() - 1; }

  void add(std::size_t index, T delta) noexcept {
    assert(index < size());
    for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  T prefix(std::size_t count) const noexcept {
    assert(count <= size());
    T sum{};
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) sum += tree_[i];
    return sum;
  }

  /// Sum of slots [first, last).
  T range(std::size_t first, std::size_t last) const noexcept {
    return prefix(last) - prefix(first);
  }

  void clear() noexcept {
    for (auto& v : tree_) v = T{};
  }

 private:
  std::vector<T> tree_;
};

}  // namespace anchor
