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

#include "anchor/sweep.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "anchor/error.hpp"

namespace anchor {

PrefixAccumulator::PrefixAccumulator(std::vector<double> levels)
    : levels_(std::move(levels)), tree_(levels_.size()) {
  if (!std::is_sorted(levels_.begin(), levels_.end()) ||
      std::adjacent_find(levels_.begin(), levels_.end()) != levels_.end()) {
    throw Error(ErrorCode::InvalidParams, "accumulator levels must be strictly increasing");
  }
}

std::size_t PrefixAccumulator::slot_of(double value) const {
  const auto it = std::lower_bound(levels_.begin(), levels_.end(), value);
  if (it == levels_.end() || *it != value) {
    throw Error(ErrorCode::InvalidParams, "level is not in the coordinate table");
  }
  return static_cast<std::size_t>(it - levels_.begin());
}

std::size_t PrefixAccumulator::boundary(double value) const noexcept {
  return static_cast<std::size_t>(std::lower_bound(levels_.begin(), levels_.end(), value) -
                                  levels_.begin());
}

double cross_sum_naive(const AnchorFamily& first, const AnchorFamily& second, int p) {
  if (p < 1) throw Error(ErrorCode::InvalidExponent, "exponent must be >= 1");
  double total = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < second.size(); ++j) {
      row += second.weights()[j] * ot1d(first.anchors()[i], second.anchors()[j], p);
    }
    total += first.weights()[i] * row;
  }
  return total;
}

namespace {

// One CDF change point of an anchor: the atom value and the slot, in the
// family's level table, of the CDF value reached after it.
struct Event {
  double value;
  std::uint32_t anchor;
  std::uint32_t slot;
};

// Order-preserving map of a double onto unsigned integers (-0 folds onto +0).
std::uint64_t sort_key(double v) noexcept {
  const auto bits = std::bit_cast<std::uint64_t>(v + 0.0);
  return (bits >> 63) ? ~bits : bits | (std::uint64_t{1} << 63);
}

// Stable sort by value. Small inputs go through the library sort; large ones
// through an LSD radix sort on 11-bit digits, skipping constant digits.
void stable_sort_by_value(std::vector<Event>& events) {
  if (events.size() < 4096) {
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& x, const Event& y) { return x.value < y.value; });
    return;
  }
  constexpr int kBits = 11;
  constexpr int kPasses = 6;
  constexpr std::size_t kBuckets = std::size_t{1} << kBits;
  std::vector<std::array<std::size_t, kBuckets>> counts(kPasses);
  for (auto& c : counts) c.fill(0);
  for (const auto& e : events) {
    const auto k = sort_key(e.value);
    for (int p = 0; p < kPasses; ++p) ++counts[p][(k >> (p * kBits)) & (kBuckets - 1)];
  }
  std::vector<Event> buffer(events.size());
  for (int p = 0; p < kPasses; ++p) {
    auto& c = counts[p];
    if (std::find(c.begin(), c.end(), events.size()) != c.end()) continue;
    std::size_t offset = 0;
    for (auto& v : c) offset += std::exchange(v, offset);
    for (const auto& e : events) buffer[c[(sort_key(e.value) >> (p * kBits)) & (kBuckets - 1)]++] = e;
    events.swap(buffer);
  }
}

// First position at or after `from` whose level is >= value, by galloping.
std::size_t gallop(const std::vector<double>& levels, std::size_t from, double value) noexcept {
  std::size_t step = 1;
  std::size_t hi = from;
  while (hi < levels.size() && levels[hi] < value) {
    from = hi + 1;
    hi += step;
    step *= 2;
  }
  hi = std::min(hi, levels.size());
  return static_cast<std::size_t>(std::lower_bound(levels.begin() + from, levels.begin() + hi, value) -
                                  levels.begin());
}

// Per-family sweep input: the table of attainable CDF values and the events
// sorted by (value, anchor priority, atom order).
struct Prepared {
  const AnchorFamily* family;
  std::vector<double> levels;
  std::vector<Event> events;
};

// `priority` ranks the family's anchors for tie breaking.
Prepared prepare(const AnchorFamily& family, std::span<const std::uint32_t> priority) {
  Prepared out{&family, {}, {}};
  const std::size_t n = family.size();

  // CDF values per anchor are nondecreasing, so the table is a union of
  // sorted runs.
  std::vector<std::vector<double>> runs(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& run = runs[i];
    run.reserve(family.anchors()[i].size() + 1);
    run.push_back(0.0);
    double cum = 0.0;
    for (const auto& atom : family.anchors()[i].atoms()) {
      cum += atom.weight;
      run.push_back(cum);
    }
    run.erase(std::unique(run.begin(), run.end()), run.end());
  }
  std::vector<double> merged;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t i = 0; i + width < n; i += 2 * width) {
      merged.clear();
      std::set_union(runs[i].begin(), runs[i].end(), runs[i + width].begin(), runs[i + width].end(),
                     std::back_inserter(merged));
      runs[i].swap(merged);
      std::vector<double>().swap(runs[i + width]);
    }
  }
  out.levels = std::move(runs[0]);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return priority[x] < priority[y]; });
  out.events.reserve(family.total_atoms());
  for (const std::uint32_t i : order) {
    double cum = 0.0;
    std::size_t slot = 0;
    for (const auto& atom : family.anchors()[i].atoms()) {
      cum += atom.weight;
      slot = gallop(out.levels, slot, cum);
      out.events.push_back({atom.value, i, static_cast<std::uint32_t>(slot)});
    }
  }
  stable_sort_by_value(out.events);
  return out;
}

// For each level of `own`, the number of levels of `other` strictly below it.
std::vector<std::uint32_t> cross_boundaries(const std::vector<double>& own, const std::vector<double>& other) {
  std::vector<std::uint32_t> out(own.size());
  std::size_t j = 0;
  for (std::size_t k = 0; k < own.size(); ++k) {
    while (j < other.size() && other[j] < own[k]) ++j;
    out[k] = static_cast<std::uint32_t>(j);
  }
  return out;
}

struct Side {
  const Prepared* input;
  PrefixAccumulator acc;
  std::vector<std::uint32_t> cross;  // own slot -> boundary in the other table
  std::vector<std::uint32_t> slot;   // current slot per anchor
  std::span<const std::uint32_t> priority;
};

// `priority` spans both families, first then second.
SweepResult sweep(const Prepared& first, const Prepared& second, std::span<const std::uint32_t> priority,
                  std::size_t refresh_interval) {
  const std::size_t n1 = first.family->size();
  std::array<Side, 2> sides{
      Side{&first, PrefixAccumulator(first.levels), cross_boundaries(first.levels, second.levels),
           std::vector<std::uint32_t>(n1, 0), priority.subspan(0, n1)},
      Side{&second, PrefixAccumulator(second.levels), cross_boundaries(second.levels, first.levels),
           std::vector<std::uint32_t>(second.family->size(), 0), priority.subspan(n1)}};
  // Every anchor starts registered at level 0, the first table entry.
  for (auto& side : sides) {
    for (const double w : side.input->family->weights()) side.acc.add(0, w);
  }

  auto exact_variation = [&]() {
    const auto& a = sides[0];
    const auto& b = sides[1];
    const auto& w = first.family->weights();
    double f = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
      const auto s = a.slot[i];
      f += w[i] * b.acc.spread(a.acc.level(s), a.cross[s]);
    }
    return f;
  };

  const auto& ev1 = first.events;
  const auto& ev2 = second.events;
  const std::size_t count = ev1.size() + ev2.size();
  SweepResult result;
  result.events = count;
  result.min_variation = count > 1 ? std::numeric_limits<double>::infinity() : 0.0;

  // Merge the two sorted streams; equal values go by global priority.
  std::size_t i = 0, j = 0;
  auto take_first = [&]() {
    if (j == ev2.size()) return true;
    if (i == ev1.size()) return false;
    if (ev1[i].value != ev2[j].value) return ev1[i].value < ev2[j].value;
    return sides[0].priority[ev1[i].anchor] < sides[1].priority[ev2[j].anchor];
  };

  const std::size_t refresh = std::max<std::size_t>(refresh_interval, 1);
  double f = 0.0;
  double total = 0.0;
  for (std::size_t l = 0; l + 1 < count; ++l) {
    const bool from_first = take_first();
    const Event& ev = from_first ? ev1[i++] : ev2[j++];
    auto& own = sides[from_first ? 0 : 1];
    const auto& other = sides[from_first ? 1 : 0];
    const double w = own.input->family->weights()[ev.anchor];

    const std::uint32_t old_slot = own.slot[ev.anchor];
    const double before = own.acc.level(old_slot);
    const double after = own.acc.level(ev.slot);
    f += w * (other.acc.spread(after, own.cross[ev.slot]) - other.acc.spread(before, own.cross[old_slot]));
    own.acc.add(old_slot, -w);
    own.acc.add(ev.slot, w);
    own.slot[ev.anchor] = ev.slot;

    if ((l + 1) % refresh == 0) f = exact_variation();

    result.min_variation = std::min(result.min_variation, f);
    const double next = take_first() ? ev1[i].value : ev2[j].value;
    total += (next - ev.value) * f;
  }
  result.value = total;
  return result;
}

std::vector<std::uint32_t> identity_priority(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

void check_anchor_count(std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidParams, "too many anchors");
  }
}

}  // namespace

SweepResult cross_sum_sweep_traced(const AnchorFamily& first, const AnchorFamily& second,
                                   const SweepOptions& options) {
  const std::size_t n1 = first.size();
  check_anchor_count(n1 + second.size());
  std::vector<std::uint32_t> priority = identity_priority(n1 + second.size());
  if (options.tie_shuffle_seed) {
    std::mt19937_64 rng(*options.tie_shuffle_seed);
    std::shuffle(priority.begin(), priority.end(), rng);
  }
  const std::span<const std::uint32_t> all(priority);
  const Prepared a = prepare(first, all.subspan(0, n1));
  const Prepared b = prepare(second, all.subspan(n1));
  return sweep(a, b, all, options.refresh_interval);
}

double cross_sum_sweep(const AnchorFamily& first, const AnchorFamily& second) {
  return cross_sum_sweep_traced(first, second).value;
}

std::optional<EnergyMethod> parse_energy_method(std::string_view name) {
  if (name == "naive") return EnergyMethod::Naive;
  if (name == "sweep") return EnergyMethod::Sweep;
  return std::nullopt;
}

double family_energy(const AnchorFamily& first, const AnchorFamily& second, int p,
                     EnergyMethod method) {
  require_supported_exponent(p);
  if (method == EnergyMethod::Sweep) {
    if (p != 1) {
      throw Error(ErrorCode::MethodExponentMismatch, "the sweep evaluator only supports p = 1");
    }
    // Each family is prepared once and shared by the three cross sums.
    check_anchor_count(first.size() + second.size());
    const auto p1 = identity_priority(first.size());
    const auto p2 = identity_priority(second.size());
    const Prepared a = prepare(first, p1);
    const Prepared b = prepare(second, p2);
    const std::size_t refresh = SweepOptions{}.refresh_interval;
    const auto joint = [](std::size_t n, std::size_t m) { return identity_priority(n + m); };
    return 2.0 * sweep(a, b, joint(first.size(), second.size()), refresh).value -
           sweep(a, a, joint(first.size(), first.size()), refresh).value -
           sweep(b, b, joint(second.size(), second.size()), refresh).value;
  }
  return 2.0 * cross_sum_naive(first, second, p) - cross_sum_naive(first, first, p) -
         cross_sum_naive(second, second, p);
}

double anchor_energy(const MMSet& first, const MMSet& second, int p, EnergyMethod method) {
  if (method == EnergyMethod::Sweep && p != 1) {
    throw Error(ErrorCode::MethodExponentMismatch, "the sweep evaluator only supports p = 1");
  }
  return family_energy(anchor_family(first), anchor_family(second), p, method);
}

}  // namespace anchor
