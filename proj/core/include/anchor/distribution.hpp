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

#include <cstddef>
#include <span>
#include <vector>

#include "anchor/mmset.hpp"

namespace anchor {

struct Atom {
  double value;
  double weight;
  /// Position of the atom in the unsorted input (the column index for
  /// anchor features).
  std::size_t index;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Weighted empirical distribution on the real line. Atoms are kept sorted
/// by value with ties ordered by original index, so every consumer sees the
/// same deterministic order.
class Distribution {
 public:
  Distribution() = default;

  /// Builds from parallel value/weight arrays. Weights must be nonnegative
  /// and sum to one within kSimplexTolerance.
  static Distribution from_values(std::span<const double> values,
                                  std::span<const double> weights);
  /// Uniform weights.
  static Distribution uniform(std::span<const double> values);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<Atom> atoms_;
};

/// A weighted family of 1D distributions: the anchor feature representation
/// of an MMSet, or any collection of per-sample feature distributions.
class AnchorFamily {
 public:
  AnchorFamily(std::vector<double> weights, std::vector<Distribution> anchors);

  /// Uniform family weights.
  static AnchorFamily uniform(std::vector<Distribution> anchors);

  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Distribution>& anchors() const noexcept { return anchors_; }
  std::size_t size() const noexcept { return anchors_.size(); }
  /// Sum of atom counts over all anchors.
  std::size_t total_atoms() const noexcept;

 private:
  std::vector<double> weights_;
  std::vector<Distribution> anchors_;
};

/// Anchor i holds the atoms {(C_ij, a_j)}; the family weights are a.
AnchorFamily anchor_family(const MMSet& set);

/// OT_p^p between two 1D distributions, by an exact merge of the quantile
/// functions. Linear in the total number of atoms.
double ot1d(const Distribution& mu, const Distribution& nu, int p);

/// Throws InvalidExponent unless p is 1 or 2.
void require_supported_exponent(int p);

}  // namespace anchor
