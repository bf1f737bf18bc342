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
#include <unordered_set>
#include <vector>

#include "anchor/distribution.hpp"
#include "anchor/matrix.hpp"
#include "anchor/transport.hpp"

namespace anchor {

struct Edge {
  std::size_t u;
  std::size_t v;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with positive edge weights. Each unordered pair
/// is stored once; self-loops are rejected.
class Graph {
 public:
  explicit Graph(std::size_t node_count) : node_count_(node_count) {}
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Throws InvalidParams on out-of-range endpoints, self-loops, repeated
  /// pairs or non-positive weights.
  void add_edge(std::size_t u, std::size_t v, double weight = 1.0);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::vector<std::size_t> degrees() const;
  /// Neighbor lists, each sorted ascending.
  std::vector<std::vector<std::size_t>> adjacency() const;
  bool unit_weights() const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t node_count_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> pairs_;
};

/// All-pairs shortest-path distances: BFS per source on unit weights,
/// Dijkstra otherwise. Throws Disconnected with the component count.
Matrix geodesic_cost(const Graph& graph);

std::size_t component_count(const Graph& graph);

/// Barabasi-Albert preferential attachment grown from a star on
/// attach + 1 nodes. Node index equals arrival order; the result has
/// attach * (n - attach - 1) + attach edges.
Graph ba_generate(std::size_t n, std::size_t attach, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph er_generate(std::size_t n, double p_edge, std::uint64_t seed);

enum class GraphFeature { Degree, Clustering };

std::optional<GraphFeature> parse_graph_feature(std::string_view name);

/// Uniform-weight distribution of per-node degree or local clustering
/// coefficient.
Distribution graph_feature(const Graph& graph, GraphFeature kind);

/// Assignment of each row point to a column point.
struct Matching {
  std::vector<std::size_t> assignment;
};

/// Row-wise argmax of a plan; ties go to the smaller column index.
Matching extract_matching(const TransportPlan& plan);

/// Pearson correlation between point indices 0..n-1 and their matched
/// indices. Throws DegenerateVariance when the assignment is constant.
double order_correlation(const Matching& match);

/// Same, with explicit latent orders for rows and columns.
double order_correlation(const Matching& match, std::span<const double> row_order,
                         std::span<const double> col_order);

/// Pearson correlation of two equally long samples.
double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace anchor
