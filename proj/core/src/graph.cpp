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

#include "anchor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

#include "anchor/error.hpp"

namespace anchor {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges) : node_count_(node_count) {
  edges_.reserve(edges.size());
  for (const auto& e : edges) add_edge(e.u, e.v, e.weight);
}

namespace {

std::uint64_t pair_key(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

}  // namespace

bool Graph::has_edge(std::size_t u, std::size_t v) const { return pairs_.count(pair_key(u, v)) > 0; }

void Graph::add_edge(std::size_t u, std::size_t v, double weight) {
  if (u >= node_count_ || v >= node_count_) {
    throw Error(ErrorCode::InvalidParams, "edge (" + std::to_string(u) + ", " +
                                              std::to_string(v) + ") out of range");
  }
  if (node_count_ > 0xffffffffu) throw Error(ErrorCode::InvalidParams, "graph too large");
  if (u == v) throw Error(ErrorCode::InvalidParams, "self-loop at node " + std::to_string(u));
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw Error(ErrorCode::InvalidParams, "edge weights must be positive and finite");
  }
  if (has_edge(u, v)) {
    throw Error(ErrorCode::InvalidParams, "duplicate edge (" + std::to_string(u) + ", " +
                                              std::to_string(v) + ")");
  }
  pairs_.insert(pair_key(u, v));
  edges_.push_back({u, v, weight});
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(node_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(node_count_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

bool Graph::unit_weights() const noexcept {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1.0; });
}

std::size_t component_count(const Graph& graph) {
  const auto adj = graph.adjacency();
  std::vector<bool> seen(graph.node_count(), false);
  std::size_t components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < graph.node_count(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u]) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

Matrix geodesic_cost(const Graph& graph) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw Error(ErrorCode::InvalidParams, "empty graph");
  const std::size_t components = component_count(graph);
  if (components != 1) {
    throw Error(ErrorCode::Disconnected,
                "graph has " + std::to_string(components) + " connected components");
  }

  Matrix dist(n, n, std::numeric_limits<double>::infinity());
  if (graph.unit_weights()) {
    const auto adj = graph.adjacency();
    std::vector<std::size_t> queue(n);
    for (std::size_t s = 0; s < n; ++s) {
      auto row = dist.row(s);
      row[s] = 0.0;
      std::size_t head = 0, tail = 0;
      queue[tail++] = s;
      while (head < tail) {
        const std::size_t u = queue[head++];
        for (std::size_t v : adj[u]) {
          if (std::isinf(row[v])) {
            row[v] = row[u] + 1.0;
            queue[tail++] = v;
          }
        }
      }
    }
    return dist;
  }

  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const auto& e : graph.edges()) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  using Item = std::pair<double, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    auto row = dist.row(s);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[s] = 0.0;
    heap.emplace(0.0, s);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > row[u]) continue;
      for (const auto& [v, w] : adj[u]) {
        if (d + w < row[v]) {
          row[v] = d + w;
          heap.emplace(row[v], v);
        }
      }
    }
  }
  // Round-off in Dijkstra can leave the matrix slightly asymmetric.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::min(dist(i, j), dist(j, i));
      dist(i, j) = dist(j, i) = d;
    }
  }
  return dist;
}

Graph ba_generate(std::size_t n, std::size_t attach, std::uint64_t seed) {
  if (attach < 1 || n <= attach) {
    throw Error(ErrorCode::InvalidParams, "Barabasi-Albert needs n > attach >= 1");
  }
  Graph g(n);
  // Every edge endpoint appears once, so uniform draws are degree-weighted.
  std::vector<std::size_t> endpoints;
  endpoints.reserve(2 * attach * n);
  for (std::size_t k = 1; k <= attach; ++k) {
    g.add_edge(0, k);
    endpoints.push_back(0);
    endpoints.push_back(k);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t v = attach + 1; v < n; ++v) {
    std::set<std::size_t> targets;
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < attach) targets.insert(endpoints[pick(rng)]);
    for (std::size_t t : targets) {
      g.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return g;
}

Graph er_generate(std::size_t n, double p_edge, std::uint64_t seed) {
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw Error(ErrorCode::InvalidParams, "edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng) < p_edge) edges.push_back({u, v, 1.0});
    }
  }
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

std::optional<GraphFeature> parse_graph_feature(std::string_view name) {
  if (name == "degree") return GraphFeature::Degree;
  if (name == "clustering") return GraphFeature::Clustering;
  return std::nullopt;
}

Distribution graph_feature(const Graph& graph, GraphFeature kind) {
  const std::size_t n = graph.node_count();
  if (n == 0) throw Error(ErrorCode::InvalidParams, "empty graph");
  std::vector<double> values(n, 0.0);
  const auto adj = graph.adjacency();
  if (kind == GraphFeature::Degree) {
    for (std::size_t v = 0; v < n; ++v) values[v] = static_cast<double>(adj[v].size());
  } else {
    for (std::size_t v = 0; v < n; ++v) {
      const auto& nb = adj[v];
      const std::size_t d = nb.size();
      if (d < 2) continue;
      std::size_t triangles = 0;
      for (std::size_t x = 0; x < d; ++x) {
        const auto& other = adj[nb[x]];
        // Count neighbors of nb[x] that are also neighbors of v and come later.
        auto it = other.begin();
        for (std::size_t y = x + 1; y < d; ++y) {
          it = std::lower_bound(it, other.end(), nb[y]);
          if (it == other.end()) break;
          if (*it == nb[y]) ++triangles;
        }
      }
      values[v] = static_cast<double>(triangles) / (static_cast<double>(d * (d - 1)) / 2.0);
    }
  }
  return Distribution::uniform(values);
}

Matching extract_matching(const TransportPlan& plan) {
  const auto& p = plan.matrix;
  Matching match;
  match.assignment.resize(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < p.cols(); ++j) {
      if (p(i, j) > p(i, best)) best = j;
    }
    match.assignment[i] = best;
  }
  return match;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::InvalidParams, "correlation needs two samples of equal length >= 2");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::DegenerateVariance, "constant sample has no correlation");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double order_correlation(const Matching& match, std::span<const double> row_order,
                         std::span<const double> col_order) {
  const std::size_t n = match.assignment.size();
  if (row_order.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "row order length differs from the matching");
  }
  std::vector<double> matched(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (match.assignment[i] >= col_order.size()) {
      throw Error(ErrorCode::DimensionMismatch, "matched index outside the column order");
    }
    matched[i] = col_order[match.assignment[i]];
  }
  return pearson(row_order, matched);
}

double order_correlation(const Matching& match) {
  const std::size_t n = match.assignment.size();
  std::vector<double> rows(n);
  std::iota(rows.begin(), rows.end(), 0.0);
  const std::size_t cols =
      n == 0 ? 0 : *std::max_element(match.assignment.begin(), match.assignment.end()) + 1;
  std::vector<double> col_order(cols);
  std::iota(col_order.begin(), col_order.end(), 0.0);
  return order_correlation(match, rows, col_order);
}

}  // namespace anchor
