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

#include "anchor/distribution.hpp"
#include "anchor/matrix.hpp"
#include "anchor/mmset.hpp"

namespace anchor {

/// Nonnegative coupling together with the marginals it was built for.
struct TransportPlan {
  Matrix matrix;
  std::vector<double> row_marginal;
  std::vector<double> col_marginal;

  /// Largest absolute deviation of any row or column sum from its marginal.
  double max_marginal_residual() const;
};

struct SolverConfig {
  double epsilon = 1.0;
  /// Tolerance on the relative plan change and the column residual.
  double rel_tol = 1e-6;
  int max_iter = 10000;
  /// Outer linearization rounds (Gromov-Wasserstein only).
  int outer_max_iter = 200;

  /// Throws InvalidParams on a non-positive epsilon, tolerance or budget.
  void validate() const;
};

/// Dual potentials of the entropic problem, used to warm-start a solve.
struct Potentials {
  std::vector<double> row;
  std::vector<double> col;
};

struct SinkhornResult {
  TransportPlan plan;
  /// <P, M>.
  double transport_cost = 0.0;
  /// <P, M> - epsilon * H(P), with H(P) = -sum P (log P - 1).
  double regularized_objective = 0.0;
  /// Sweeps spent at the requested epsilon.
  int iterations = 0;
  /// False when max_iter ran out first; the plan is still the last iterate.
  bool converged = false;
  Potentials potentials;
};

/// Entropic optimal transport by Sinkhorn iterations on the dual potentials,
/// with every reduction done as a log-sum-exp. The returned plan is rounded
/// onto the transport polytope so its marginals hold to rounding error.
///
/// Stops once the L1 plan change between sweeps is below rel_tol times the
/// plan mass and the column sums are within rel_tol (L1) of b. Without a
/// warm start, or when the warm-started solve runs out of iterations,
/// epsilon is first walked down geometrically from the cost range; this only
/// changes the starting point of the final solve.
SinkhornResult sinkhorn_log(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, const SolverConfig& config,
                            const Potentials* warm_start = nullptr);

/// H(P) = -sum_ij P_ij (log P_ij - 1), with 0 log 0 = 0.
double plan_entropy(const Matrix& plan);

/// M_ij = OT_p^p(anchor1_i, anchor2_j) for every anchor pair.
Matrix anchor_cost_matrix(const AnchorFamily& first, const AnchorFamily& second, int p,
                          std::size_t threads = 1);

struct AnchorWassersteinResult {
  /// Unregularized <P, M>; this is the value used for comparisons.
  double distance_cost = 0.0;
  double regularized_objective = 0.0;
  TransportPlan plan;
  int iterations = 0;
  bool converged = false;
};

AnchorWassersteinResult anchor_wasserstein(const MMSet& first, const MMSet& second, int p,
                                           const SolverConfig& config, std::size_t threads = 1);

/// Anchor Energy Plan: the a1_i a2_j weighted average over all anchor pairs
/// of the monotone coupling between their sorted cost distributions,
/// scattered back to point indices. Lies in U(a1, a2).
TransportPlan anchor_energy_plan(const MMSet& first, const MMSet& second, int p);

struct GromovWassersteinResult {
  /// sum_ijkl P_ik P_jl (C1_ij - C2_kl)^2 at the returned plan.
  double objective = 0.0;
  TransportPlan plan;
  int outer_iterations = 0;
  bool converged = false;
};

/// Squared-loss GW objective of a given coupling, in O(n^2 m + n m^2).
double gw_objective(const MMSet& first, const MMSet& second, const Matrix& plan);

/// Entropic Gromov-Wasserstein by repeated linearization: each round solves
/// an entropic OT problem on the gradient cost at the current plan, starting
/// from the product coupling and warm-starting the inner potentials.
GromovWassersteinResult entropic_gw(const MMSet& first, const MMSet& second,
                                    const SolverConfig& config);

}  // namespace anchor
