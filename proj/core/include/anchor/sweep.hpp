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
#include <optional>
#include <string_view>
#include <vector>

#include "anchor/distribution.hpp"
#include "anchor/fenwick.hpp"
#include "anchor/mmset.hpp"

namespace anchor {

/// Registry of anchors keyed by their current CDF level, over a fixed table
/// of attainable levels. Answers "total weight" and "total weight x level"
/// over all anchors whose level lies strictly below a given one.
class PrefixAccumulator {
 public:
  /// `levels` must be sorted ascending without duplicates.
  explicit PrefixAccumulator(std::vector<double> levels);

  std::size_t size() const noexcept { return levels_.size(); }
  double level(std::size_t slot) const noexcept { return levels_[slot]; }
  /// Slot holding exactly `value`; throws InvalidParams if absent.
  std::size_t slot_of(double value) const;

  void add(std::size_t slot, double weight) noexcept {
    const Mass delta{weight, weight * levels_[slot]};
    tree_.add(slot, delta);
    total_ += delta;
  }

  double weight_below(std::size_t slot) const noexcept { return tree_.prefix(slot).weight; }
  double moment_below(std::size_t slot) const noexcept { return tree_.prefix(slot).moment; }
  double total_weight() const noexcept { return total_.weight; }
  double total_moment() const noexcept { return total_.moment; }

  /// Number of table levels strictly below `value`.
  std::size_t boundary(double value) const noexcept;

  /// sum over registered anchors x of weight_x * |value - level_x|, where
  /// `below` is boundary(value).
  double spread(double value, std::size_t below) const noexcept {
    const Mass lo = tree_.prefix(below);
    const double w_hi = total_.weight - lo.weight;
    const double m_hi = total_.moment - lo.moment;
    return (lo.weight * value - lo.moment) + (m_hi - w_hi * value);
  }
  double spread(double value) const noexcept { return spread(value, boundary(value)); }

 private:
  struct Mass {
    double weight = 0.0;
    double moment = 0.0;
    Mass& operator+=(const Mass& o) noexcept {
      weight += o.weight;
      moment += o.moment;
      return *this;
    }
    friend Mass operator-(Mass a, const Mass& b) noexcept { return {a.weight - b.weight, a.moment - b.moment}; }
  };

  std::vector<double> levels_;
  FenwickTree<Mass> tree_;
  Mass total_;
};

struct SweepOptions {
  /// When set, events with equal value are processed in a random order
  /// across anchors (order within one anchor is preserved). Test hook.
  std::optional<std::uint64_t> tie_shuffle_seed;
  /// Events between exact recomputations of the running variation.
  std::size_t refresh_interval = std::size_t{1} << 16;
};

struct SweepResult {
  double value = 0.0;
  /// Smallest running total variation observed at an accumulation step.
  double min_variation = 0.0;
  std::size_t events = 0;
};

/// sum_ij w1_i w2_j OT_p^p(anchor1_i, anchor2_j) by direct evaluation of
/// every pair. Cubic; the reference for the sweep.
double cross_sum_naive(const AnchorFamily& first, const AnchorFamily& second, int p);

/// The same cross sum for p = 1, by sweeping the real line over all CDF
/// change points and maintaining the total CDF variation incrementally.
/// O(L log L) for L = total atom count of both families.
double cross_sum_sweep(const AnchorFamily& first, const AnchorFamily& second);

SweepResult cross_sum_sweep_traced(const AnchorFamily& first, const AnchorFamily& second,
                                   const SweepOptions& options = {});

enum class EnergyMethod { Naive, Sweep };

std::optional<EnergyMethod> parse_energy_method(std::string_view name);

/// Energy distance 2 E[OT(h, g)] - E[OT(h, h')] - E[OT(g, g')] between two
/// anchor families.
double family_energy(const AnchorFamily& first, const AnchorFamily& second, int p,
                     EnergyMethod method);

/// Anchor Energy between two MMSets. The sweep method only supports p = 1.
double anchor_energy(const MMSet& first, const MMSet& second, int p, EnergyMethod method);

}  // namespace anchor
