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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "anchor/error.hpp"
#include "anchor/transport.hpp"

namespace anchor {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// Ratio between successive epsilons of the cold-start schedule.
constexpr double kAnnealFactor = 4.0;

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

// Moves a near-feasible positive plan onto U(a, b): shrink overfull rows and
// columns, then hand the missing mass out as a rank-one correction.
void round_to_polytope(Matrix& plan, std::span<const double> a, std::span<const double> b) {
  const std::size_t n = plan.rows(), m = plan.cols();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : plan.row(i)) s += v;
    if (s > a[i]) {
      const double scale = a[i] / s;
      for (double& v : plan.row(i)) v *= scale;
    }
  }
  std::vector<double> col(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) col[j] += plan(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (col[j] > b[j]) {
      const double scale = b[j] / col[j];
      for (std::size_t i = 0; i < n; ++i) plan(i, j) *= scale;
    }
  }
  std::vector<double> row_gap(n), col_gap(m, 0.0);
  double gap_mass = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : plan.row(i)) s += v;
    row_gap[i] = std::max(a[i] - s, 0.0);
    gap_mass += row_gap[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) col_gap[j] += plan(i, j);
  }
  for (std::size_t j = 0; j < m; ++j) col_gap[j] = std::max(b[j] - col_gap[j], 0.0);
  if (gap_mass <= 0.0) return;
  for (std::size_t i = 0; i < n; ++i) {
    if (row_gap[i] == 0.0) continue;
    const double r = row_gap[i] / gap_mass;
    for (std::size_t j = 0; j < m; ++j) plan(i, j) += r * col_gap[j];
  }
}

}  // namespace

void SolverConfig::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::InvalidParams, "epsilon must be positive");
  }
  if (!(rel_tol > 0.0)) throw Error(ErrorCode::InvalidParams, "relative tolerance must be positive");
  if (max_iter < 1 || outer_max_iter < 1) {
    throw Error(ErrorCode::InvalidParams, "iteration budgets must be positive");
  }
}

double TransportPlan::max_marginal_residual() const {
  double worst = 0.0;
  std::vector<double> col(matrix.cols(), 0.0);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      s += matrix(i, j);
      col[j] += matrix(i, j);
    }
    worst = std::max(worst, std::abs(s - row_marginal[i]));
  }
  for (std::size_t j = 0; j < col.size(); ++j) {
    worst = std::max(worst, std::abs(col[j] - col_marginal[j]));
  }
  return worst;
}

double plan_entropy(const Matrix& plan) {
  double h = 0.0;
  for (double p : plan.data()) {
    if (p > 0.0) h -= p * (std::log(p) - 1.0);
  }
  return h;
}

namespace {

struct StageOutcome {
  int iterations = 0;
  bool converged = false;
};

// Alternating log-domain updates at one epsilon. `plan` receives the iterate
// formed during the last row update (rows exact, columns approximate).
StageOutcome run_stage(const Matrix& cost, std::span<const double> a, std::span<const double> b,
                       std::span<const double> log_a, std::span<const double> log_b, double eps,
                       double rel_tol, int max_iter, std::vector<double>& f, std::vector<double>& g,
                       Matrix& plan) {
  const std::size_t n = cost.rows(), m = cost.cols();
  Matrix previous(n, m);
  std::vector<double> z(m), col_max(m), col_sum(m);
  StageOutcome out;
  for (int it = 1; it <= max_iter; ++it) {
    // Column update: g_j = eps log b_j - eps LSE_i (f_i - M_ij) / eps.
    std::fill(col_max.begin(), col_max.end(), kNegInf);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        col_max[j] = std::max(col_max[j], (f[i] - cost(i, j)) / eps);
      }
    }
    std::fill(col_sum.begin(), col_sum.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (col_max[j] > kNegInf) col_sum[j] += std::exp((f[i] - cost(i, j)) / eps - col_max[j]);
      }
    }
    for (std::size_t j = 0; j < m; ++j) {
      g[j] = col_max[j] > kNegInf ? eps * (log_b[j] - col_max[j] - std::log(col_sum[j])) : kNegInf;
    }

    // Row update, reusing the exponentials to form the plan.
    std::swap(plan, previous);
    std::fill(col_sum.begin(), col_sum.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double mx = kNegInf;
      for (std::size_t j = 0; j < m; ++j) {
        z[j] = (g[j] - cost(i, j)) / eps;
        mx = std::max(mx, z[j]);
      }
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        z[j] = mx > kNegInf ? std::exp(z[j] - mx) : 0.0;
        s += z[j];
      }
      f[i] = (mx > kNegInf && s > 0.0) ? eps * (log_a[i] - mx - std::log(s)) : kNegInf;
      for (std::size_t j = 0; j < m; ++j) {
        plan(i, j) = s > 0.0 ? a[i] * z[j] / s : 0.0;
        col_sum[j] += plan(i, j);
      }
    }

    out.iterations = it;
    if (it > 1) {
      double change = 0.0, mass = 0.0;
      const auto cur = plan.data();
      const auto prev = previous.data();
      for (std::size_t k = 0; k < cur.size(); ++k) {
        change += std::abs(cur[k] - prev[k]);
        mass += std::abs(prev[k]);
      }
      // A plan that stops moving while its columns are still off is a
      // small-epsilon stall, not a fixed point.
      double residual = 0.0;
      for (std::size_t j = 0; j < m; ++j) residual += std::abs(col_sum[j] - b[j]);
      if (change <= rel_tol * mass && residual <= rel_tol) {
        out.converged = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

SinkhornResult sinkhorn_log(const Matrix& cost, std::span<const double> a,
                            std::span<const double> b, const SolverConfig& config,
                            const Potentials* warm_start) {
  config.validate();
  const std::size_t n = cost.rows(), m = cost.cols();
  if (a.size() != n || b.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "marginals do not match the cost matrix");
  }
  if (!cost.all_finite()) throw Error(ErrorCode::NonFinite, "cost matrix contains NaN or infinity");

  const double eps = config.epsilon;
  std::vector<double> log_a(n), log_b(m);
  for (std::size_t i = 0; i < n; ++i) log_a[i] = safe_log(a[i]);
  for (std::size_t j = 0; j < m; ++j) log_b[j] = safe_log(b[j]);

  std::vector<double> f(n, 0.0), g(m, 0.0);
  Matrix plan(n, m);
  // Cold start: walk epsilon down from the cost range so the target stage
  // begins near its fixed point.
  auto anneal = [&] {
    if (n == 0 || m == 0) return;
    const auto [lo, hi] = std::minmax_element(cost.data().begin(), cost.data().end());
    for (double stage = (*hi - *lo) / kAnnealFactor; stage > eps * kAnnealFactor; stage /= kAnnealFactor) {
      run_stage(cost, a, b, log_a, log_b, stage, config.rel_tol, config.max_iter, f, g, plan);
    }
  };

  StageOutcome final_stage;
  const bool warm = warm_start && warm_start->row.size() == n && warm_start->col.size() == m;
  if (warm) {
    f = warm_start->row;
    g = warm_start->col;
    final_stage = run_stage(cost, a, b, log_a, log_b, eps, config.rel_tol, config.max_iter, f, g, plan);
  }
  if (!warm || !final_stage.converged) {
    // Potentials from a different cost can stall at small epsilon; retry
    // through the schedule, keeping them as the starting point.
    anneal();
    final_stage = run_stage(cost, a, b, log_a, log_b, eps, config.rel_tol, config.max_iter, f, g, plan);
  }
  SinkhornResult result;
  result.iterations = final_stage.iterations;
  result.converged = final_stage.converged;

  for (double v : f) {
    if (std::isnan(v)) throw Error(ErrorCode::NonFinite, "Sinkhorn potentials diverged");
  }
  round_to_polytope(plan, a, b);

  double transport = 0.0;
  const auto p = plan.data();
  const auto c = cost.data();
  for (std::size_t k = 0; k < p.size(); ++k) transport += p[k] * c[k];

  result.transport_cost = transport;
  result.regularized_objective = transport - eps * plan_entropy(plan);
  result.plan = TransportPlan{std::move(plan), std::vector<double>(a.begin(), a.end()),
                              std::vector<double>(b.begin(), b.end())};
  result.potentials = Potentials{std::move(f), std::move(g)};
  return result;
}

}  // namespace anchor
