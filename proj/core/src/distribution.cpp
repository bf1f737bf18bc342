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

#include "anchor/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "anchor/error.hpp"

namespace anchor {
namespace {

void check_simplex(std::span<const double> weights, const char* what) {
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w)) throw Error(ErrorCode::NonFinite, std::string(what) + " weight");
    if (w < 0.0) throw Error(ErrorCode::NegativeWeight, std::string(what) + " weight");
    total += w;
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    throw Error(ErrorCode::WeightSumOutOfTolerance,
                std::string(what) + " weights sum to " + std::to_string(total));
  }
}

double power(double x, int p) {
  switch (p) {
    case 1: return x;
    case 2: return x * x;
    default: {
      double r = 1.0;
      for (int k = 0; k < p; ++k) r *= x;
      return r;
    }
  }
}

}  // namespace

Distribution Distribution::from_values(std::span<const double> values,
                                       std::span<const double> weights) {
  if (values.size() != weights.size()) {
    throw Error(ErrorCode::DimensionMismatch, "values and weights differ in length");
  }
  if (values.empty()) throw Error(ErrorCode::InvalidParams, "empty distribution");
  check_simplex(weights, "atom");
  Distribution d;
  d.atoms_.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) throw Error(ErrorCode::NonFinite, "atom value");
    d.atoms_.push_back({values[i], weights[i], i});
  }
  std::sort(d.atoms_.begin(), d.atoms_.end(), [](const Atom& x, const Atom& y) {
    return x.value < y.value || (x.value == y.value && x.index < y.index);
  });
  return d;
}

Distribution Distribution::uniform(std::span<const double> values) {
  const std::vector<double> w = uniform_weights(values.size());
  return from_values(values, w);
}

AnchorFamily::AnchorFamily(std::vector<double> weights, std::vector<Distribution> anchors)
    : weights_(std::move(weights)), anchors_(std::move(anchors)) {
  if (weights_.size() != anchors_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "family weights and anchors differ in length");
  }
  if (anchors_.empty()) throw Error(ErrorCode::InvalidParams, "empty anchor family");
  check_simplex(weights_, "family");
  for (const auto& a : anchors_) {
    if (a.size() == 0) throw Error(ErrorCode::InvalidParams, "empty anchor distribution");
  }
}

AnchorFamily AnchorFamily::uniform(std::vector<Distribution> anchors) {
  std::vector<double> w = uniform_weights(anchors.size());
  return AnchorFamily(std::move(w), std::move(anchors));
}

std::size_t AnchorFamily::total_atoms() const noexcept {
  std::size_t total = 0;
  for (const auto& a : anchors_) total += a.size();
  return total;
}

AnchorFamily anchor_family(const MMSet& set) {
  const std::size_t n = set.size();
  std::vector<Distribution> anchors;
  anchors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    anchors.push_back(Distribution::from_values(set.costs().row(i), set.weights()));
  }
  return AnchorFamily(set.weights(), std::move(anchors));
}

void require_supported_exponent(int p) {
  if (p != 1 && p != 2) {
    throw Error(ErrorCode::InvalidExponent, "exponent must be 1 or 2, got " + std::to_string(p));
  }
}

double ot1d(const Distribution& mu, const Distribution& nu, int p) {
  if (p < 1) throw Error(ErrorCode::InvalidExponent, "exponent must be >= 1");
  const auto a = mu.atoms();
  const auto b = nu.atoms();
  // Walk both quantile functions at once; each step covers the quantile
  // interval up to the next breakpoint of either CDF.
  std::size_t i = 0, j = 0;
  double cum_a = a[0].weight, cum_b = b[0].weight;
  double level = 0.0;
  double total = 0.0;
  while (true) {
    const double next = std::min(cum_a, cum_b);
    const double mass = next - level;
    if (mass > 0.0) total += mass * power(std::abs(a[i].value - b[j].value), p);
    level = next;
    const bool step_a = cum_a <= cum_b;
    const bool step_b = cum_b <= cum_a;
    if (step_a) {
      if (++i == a.size()) break;
      cum_a += a[i].weight;
    }
    if (step_b) {
      if (++j == b.size()) break;
      cum_b += b[j].weight;
    }
  }
  return total;
}

}  // namespace anchor
