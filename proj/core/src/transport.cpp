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

#include "anchor/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anchor/error.hpp"
#include "anchor/parallel.hpp"
#include "exact_sum.hpp"

namespace anchor {

Matrix anchor_cost_matrix(const AnchorFamily& first, const AnchorFamily& second, int p,
                          std::size_t threads) {
  require_supported_exponent(p);
  Matrix m(first.size(), second.size());
  parallel_for(first.size(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      m(i, j) = ot1d(first.anchors()[i], second.anchors()[j], p);
    }
  });
  return m;
}

AnchorWassersteinResult anchor_wasserstein(const MMSet& first, const MMSet& second, int p,
                                           const SolverConfig& config, std::size_t threads) {
  require_supported_exponent(p);
  config.validate();
  const Matrix cost = anchor_cost_matrix(anchor_family(first), anchor_family(second), p, threads);
  SinkhornResult solved = sinkhorn_log(cost, first.weights(), second.weights(), config);
  return {solved.transport_cost, solved.regularized_objective, std::move(solved.plan),
          solved.iterations, solved.converged};
}

TransportPlan anchor_energy_plan(const MMSet& first, const MMSet& second, int p) {
  require_supported_exponent(p);
  const AnchorFamily f1 = anchor_family(first);
  const AnchorFamily f2 = anchor_family(second);
  const std::size_t n = first.size(), m = second.size();

  // The monotone coupling is optimal for every convex ground cost, so p
  // does not change the local plans.
  std::vector<detail::ExactSum> cells(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = f1.anchors()[i].atoms();
    for (std::size_t j = 0; j < m; ++j) {
      const auto y = f2.anchors()[j].atoms();
      const double pair_weight = f1.weights()[i] * f2.weights()[j];
      if (pair_weight == 0.0) continue;
      std::size_t u = 0, v = 0;
      double cum_x = x[0].weight, cum_y = y[0].weight, level = 0.0;
      while (true) {
        const double next = std::min(cum_x, cum_y);
        const double mass = next - level;
        if (mass > 0.0) cells[x[u].index * m + y[v].index].add(pair_weight * mass);
        level = next;
        const bool step_x = cum_x <= cum_y;
        const bool step_y = cum_y <= cum_x;
        if (step_x) {
          if (++u == x.size()) break;
          cum_x += x[u].weight;
        }
        if (step_y) {
          if (++v == y.size()) break;
          cum_y += y[v].weight;
        }
      }
    }
  }

  Matrix plan(n, m);
  for (std::size_t k = 0; k < n * m; ++k) plan.data()[k] = cells[k].value();
  return TransportPlan{std::move(plan), first.weights(), second.weights()};
}

namespace {

// constC_ik = sum_j C1_ij^2 a_j + sum_l C2_kl^2 b_l.
Matrix gw_constant(const MMSet& first, const MMSet& second) {
  const auto& c1 = first.costs();
  const auto& c2 = second.costs();
  const std::size_t n = first.size(), m = second.size();
  std::vector<double> r(n, 0.0), s(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i] += c1(i, j) * c1(i, j) * first.weights()[j];
  }
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t l = 0; l < m; ++l) s[k] += c2(k, l) * c2(k, l) * second.weights()[l];
  }
  Matrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) out(i, k) = r[i] + s[k];
  }
  return out;
}

// C1 P C2^T.
Matrix gw_cross(const MMSet& first, const MMSet& second, const Matrix& plan) {
  const auto& c1 = first.costs();
  const auto& c2 = second.costs();
  const std::size_t n = first.size(), m = second.size();
  Matrix left(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = left.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double c = c1(i, j);
      if (c == 0.0) continue;
      const auto pr = plan.row(j);
      for (std::size_t l = 0; l < m; ++l) out[l] += c * pr[l];
    }
  }
  Matrix cross(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    const auto lr = left.row(i);
    for (std::size_t k = 0; k < m; ++k) {
      const auto cr = c2.row(k);
      double s = 0.0;
      for (std::size_t l = 0; l < m; ++l) s += lr[l] * cr[l];
      cross(i, k) = s;
    }
  }
  return cross;
}

double objective_with(const Matrix& constant, const Matrix& cross, const Matrix& plan) {
  double total = 0.0;
  const auto c = constant.data();
  const auto x = cross.data();
  const auto p = plan.data();
  for (std::size_t k = 0; k < p.size(); ++k) total += p[k] * (c[k] - 2.0 * x[k]);
  return total;
}

double relative_change(const Matrix& current, const Matrix& previous) {
  double change = 0.0, mass = 0.0;
  for (std::size_t k = 0; k < current.size(); ++k) {
    change += std::abs(current.data()[k] - previous.data()[k]);
    mass += std::abs(previous.data()[k]);
  }
  return mass > 0.0 ? change / mass : change;
}

}  // namespace

double gw_objective(const MMSet& first, const MMSet& second, const Matrix& plan) {
  if (plan.rows() != first.size() || plan.cols() != second.size()) {
    throw Error(ErrorCode::DimensionMismatch, "plan shape does not match the inputs");
  }
  return objective_with(gw_constant(first, second), gw_cross(first, second, plan), plan);
}

GromovWassersteinResult entropic_gw(const MMSet& first, const MMSet& second,
                                    const SolverConfig& config) {
  config.validate();
  const std::size_t n = first.size(), m = second.size();
  const Matrix constant = gw_constant(first, second);

  Matrix plan(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) plan(i, k) = first.weights()[i] * second.weights()[k];
  }
  Matrix cross = gw_cross(first, second, plan);
  double objective = objective_with(constant, cross, plan);

  GromovWassersteinResult best{objective,
                               TransportPlan{plan, first.weights(), second.weights()}, 0, false};
  Potentials warm;
  bool inner_converged = true;
  for (int outer = 1; outer <= config.outer_max_iter; ++outer) {
    Matrix linearized(n, m);
    for (std::size_t k = 0; k < linearized.size(); ++k) {
      linearized.data()[k] = constant.data()[k] - 2.0 * cross.data()[k];
    }
    SinkhornResult inner = sinkhorn_log(linearized, first.weights(), second.weights(), config,
                                        outer > 1 ? &warm : nullptr);
    inner_converged = inner.converged;
    warm = std::move(inner.potentials);

    Matrix next = std::move(inner.plan.matrix);
    Matrix next_cross = gw_cross(first, second, next);
    const double next_objective = objective_with(constant, next_cross, next);
    const double plan_change = relative_change(next, plan);
    const double objective_change =
        std::abs(next_objective - objective) /
        std::max(std::abs(objective), std::numeric_limits<double>::min());

    plan = std::move(next);
    cross = std::move(next_cross);
    objective = next_objective;
    best.outer_iterations = outer;
    if (objective <= best.objective || outer == 1) {
      best.objective = objective;
      best.plan.matrix = plan;
    }
    if (plan_change < config.rel_tol || objective_change < config.rel_tol) {
      best.converged = inner_converged;
      // A converged run reports its final iterate.
      best.objective = objective;
      best.plan.matrix = plan;
      break;
    }
  }
  return best;
}

}  // namespace anchor
