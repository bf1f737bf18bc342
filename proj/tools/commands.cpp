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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "anchor/anchor.hpp"
#include "json.hpp"

namespace anchor::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kDefaultAwEpsilon = 1e-5;
constexpr double kDefaultGwEpsilon = 10.0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

json run_record(const std::string& command, json parameters, double seconds, json result) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", std::move(parameters)},
              {"seconds", seconds},
              {"result", std::move(result)}};
}

// Options shared by every command that reads a pair of MMSets.
struct PairInputs {
  std::string cost1, cost2;
  std::string weights1, weights2;
  bool rank = false;
  bool graph = false;

  void attach(CLI::App& cmd) {
    cmd.add_option("cost1", cost1, "First cost matrix (CSV or AEM1 binary)")->required();
    cmd.add_option("cost2", cost2, "Second cost matrix")->required();
    cmd.add_option("--w1", weights1, "Weights of the first set (default uniform)");
    cmd.add_option("--w2", weights2, "Weights of the second set (default uniform)");
    cmd.add_flag("--rank", rank, "Replace costs by their normalized ranks");
    cmd.add_flag("--graph", graph, "Inputs are edge lists; costs are geodesic distances");
  }

  std::pair<MMSet, MMSet> load() const {
    const auto source = graph ? CostSource::EdgeList : CostSource::Matrix;
    auto opt = [](const std::string& s) -> std::optional<fs::path> {
      if (s.empty()) return std::nullopt;
      return fs::path(s);
    };
    return {load_mmset(cost1, opt(weights1), rank, source),
            load_mmset(cost2, opt(weights2), rank, source)};
  }

  json to_json() const {
    return json{{"cost1", cost1}, {"cost2", cost2}, {"w1", weights1},
                {"w2", weights2}, {"rank", rank},   {"graph", graph}};
  }
};

// One evaluated distance; `value2` carries the regularized objective for aw.
struct Evaluation {
  double value = 0.0;
  std::optional<double> regularized;
  bool converged = true;
};

Evaluation evaluate_metric(const std::string& metric, const MMSet& a, const MMSet& b, int p,
                           double epsilon, std::size_t threads) {
  if (metric == "ae") {
    // Only p = 1 has a sweep evaluator.
    return {anchor_energy(a, b, p, p == 1 ? EnergyMethod::Sweep : EnergyMethod::Naive), {}, true};
  }
  if (metric == "ae-naive") return {anchor_energy(a, b, p, EnergyMethod::Naive), {}, true};
  SolverConfig cfg;
  cfg.epsilon = epsilon;
  if (metric == "aw") {
    const auto r = anchor_wasserstein(a, b, p, cfg, threads);
    return {r.distance_cost, r.regularized_objective, r.converged};
  }
  if (metric == "gw") {
    const auto r = entropic_gw(a, b, cfg);
    return {r.objective, {}, r.converged};
  }
  throw Error(ErrorCode::InvalidParams, "unknown metric " + metric);
}

double default_epsilon(const std::string& metric) {
  return metric == "gw" ? kDefaultGwEpsilon : kDefaultAwEpsilon;
}

const std::vector<std::string> kMetrics{"ae", "ae-naive", "aw", "gw"};

// ---------------------------------------------------------------- dist

struct DistCommand {
  PairInputs inputs;
  std::string metric = "ae";
  int p = 1;
  std::optional<double> epsilon;
  bool json_out = false;
  std::size_t threads = 1;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("dist", "Distance between two MMSets");
    inputs.attach(*cmd);
    cmd->add_option("--metric", metric, "ae | ae-naive | aw | gw")
        ->check(CLI::IsMember(kMetrics))
        ->capture_default_str();
    cmd->add_option("--p", p, "Ground exponent (1 or 2)")->check(CLI::IsMember({1, 2}))->capture_default_str();
    cmd->add_option("--eps", epsilon, "Entropic regularization (required for aw and gw)");
    cmd->add_flag("--json", json_out, "Print a JSON run record");
    cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream& err) const {
    if ((metric == "aw" || metric == "gw") && !epsilon) {
      err << "dist: --eps is required for metric " << metric << "\n";
      return kExitInputError;
    }
    const auto [a, b] = inputs.load();
    const auto start = Clock::now();
    const Evaluation e = evaluate_metric(metric, a, b, p, epsilon.value_or(1.0), threads);
    const double seconds = seconds_since(start);
    if (json_out) {
      json params = inputs.to_json();
      params["metric"] = metric;
      params["p"] = p;
      params["eps"] = epsilon ? json(*epsilon) : json(nullptr);
      json result{{"value", e.value}, {"converged", e.converged}};
      if (e.regularized) result["regularized_objective"] = *e.regularized;
      out << run_record("dist", params, seconds, result).dump() << "\n";
    } else {
      out << format_value(e.value);
      if (e.regularized) out << " " << format_value(*e.regularized);
      out << "\n";
    }
    if (!e.converged) {
      err << "dist: solver did not converge; value is the last iterate\n";
      return kExitNotConverged;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- plan

std::vector<double> read_order(const std::string& path, std::size_t n) {
  if (path.empty()) {
    std::vector<double> v(n);
    std::iota(v.begin(), v.end(), 0.0);
    return v;
  }
  auto v = read_weights(path);
  if (v.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, path + " lists " + std::to_string(v.size()) +
                                                  " orders, expected " + std::to_string(n));
  }
  return v;
}

struct PlanCommand {
  PairInputs inputs;
  std::string kind = "aep";
  std::string out_path;
  std::string match_path;
  std::string order1, order2;
  bool correlate = false;
  int p = 1;
  std::optional<double> epsilon;
  bool json_out = false;
  std::size_t threads = 1;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("plan", "Transport plan between two MMSets");
    inputs.attach(*cmd);
    cmd->add_option("--kind", kind, "aep | aw | gw")
        ->check(CLI::IsMember({"aep", "aw", "gw"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "CSV file receiving the n x m plan")->required();
    cmd->add_option("--match", match_path, "Write the row-argmax matching here");
    cmd->add_flag("--correlate", correlate, "Print the order correlation of the matching");
    cmd->add_option("--order1", order1, "Latent order of each point of the first set");
    cmd->add_option("--order2", order2, "Latent order of each point of the second set");
    cmd->add_option("--p", p, "Ground exponent (1 or 2)")->check(CLI::IsMember({1, 2}))->capture_default_str();
    cmd->add_option("--eps", epsilon, "Entropic regularization (defaults: aw 1e-5, gw 10)");
    cmd->add_flag("--json", json_out, "Print a JSON run record");
    cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream& err) const {
    const auto [a, b] = inputs.load();
    const auto start = Clock::now();
    TransportPlan plan;
    bool converged = true;
    SolverConfig cfg;
    cfg.epsilon = epsilon.value_or(default_epsilon(kind));
    if (kind == "aep") {
      plan = anchor_energy_plan(a, b, p);
    } else if (kind == "aw") {
      auto r = anchor_wasserstein(a, b, p, cfg, threads);
      plan = std::move(r.plan);
      converged = r.converged;
    } else {
      auto r = entropic_gw(a, b, cfg);
      plan = std::move(r.plan);
      converged = r.converged;
    }
    const double seconds = seconds_since(start);
    write_matrix(out_path, plan.matrix, MatrixFormat::Csv);

    json result{{"rows", plan.matrix.rows()},
                {"cols", plan.matrix.cols()},
                {"converged", converged},
                {"max_marginal_residual", plan.max_marginal_residual()}};
    const bool want_match = !match_path.empty() || correlate || !order1.empty() || !order2.empty();
    if (want_match) {
      const Matching match = extract_matching(plan);
      if (!match_path.empty()) {
        std::string text;
        for (std::size_t j : match.assignment) text += std::to_string(j) + "\n";
        write_file(match_path, text);
      }
      if (correlate || !order1.empty() || !order2.empty()) {
        const double r = order_correlation(match, read_order(order1, a.size()),
                                           read_order(order2, b.size()));
        result["order_correlation"] = r;
        if (!json_out) out << format_value(r) << "\n";
      }
    }
    if (json_out) {
      json params = inputs.to_json();
      params["kind"] = kind;
      params["p"] = p;
      params["eps"] = cfg.epsilon;
      params["out"] = out_path;
      out << run_record("plan", params, seconds, result).dump() << "\n";
    }
    if (!converged) {
      err << "plan: solver did not converge; plan is the last iterate\n";
      return kExitNotConverged;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- bench

Matrix synthetic_costs(std::size_t n, std::mt19937_64& rng) {
  // Euclidean distances between uniform points in the unit cube.
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::array<double, 3>> pts(n);
  for (auto& p : pts) p = {u(rng), u(rng), u(rng)};
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1], pts[i][2] - pts[j][2]);
      c(i, j) = c(j, i) = d;
    }
  }
  return c;
}

Matrix subsample(const Matrix& source, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> idx(source.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::shuffle(idx.begin(), idx.end(), rng);
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c(i, j) = source(idx[i], idx[j]);
  }
  return c;
}

struct BenchCommand {
  std::vector<std::size_t> sizes{32, 64, 128, 256};
  int repeats = 1;
  std::string out_path;
  std::string cost1, cost2;
  std::vector<std::string> methods{"ae-naive", "ae", "aw", "gw"};
  std::size_t cubic_max = 512;
  std::uint64_t seed = 0;
  double eps_aw = kDefaultAwEpsilon;
  double eps_gw = kDefaultGwEpsilon;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("bench", "Time the distances over growing sizes");
    cmd->add_option("--sizes", sizes, "Point counts (each >= 32)")->delimiter(',')->capture_default_str();
    cmd->add_option("--repeats", repeats, "Timed runs per size and method")->capture_default_str();
    cmd->add_option("--out", out_path, "CSV output (method,n,seconds)")->required();
    cmd->add_option("--cost1", cost1, "Source matrix to subsample for the first set");
    cmd->add_option("--cost2", cost2, "Source matrix to subsample for the second set");
    cmd->add_option("--methods", methods, "Subset of ae-naive,ae,aw,gw")
        ->delimiter(',')
        ->check(CLI::IsMember(kMetrics))
        ->capture_default_str();
    cmd->add_option("--cubic-max", cubic_max, "Largest n for the cubic methods (ae-naive, aw, gw)")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Sampling seed")->capture_default_str();
    cmd->add_option("--eps-aw", eps_aw, "AW regularization")->capture_default_str();
    cmd->add_option("--eps-gw", eps_gw, "GW regularization")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream& err) const {
    if (repeats < 1) throw Error(ErrorCode::InvalidParams, "--repeats must be positive");
    for (auto n : sizes) {
      if (n < 32) throw Error(ErrorCode::InvalidParams, "bench sizes must be >= 32");
    }
    std::optional<Matrix> src1, src2;
    if (!cost1.empty()) src1 = read_matrix(cost1);
    if (!cost2.empty()) src2 = read_matrix(cost2);
    else if (src1) src2 = src1;

    std::mt19937_64 rng(seed);
    std::string csv = "method,n,seconds\n";
    bool all_converged = true;
    for (std::size_t n : sizes) {
      auto make = [&](const std::optional<Matrix>& src) {
        if (!src) return synthetic_costs(n, rng);
        if (n > src->rows()) {
          throw Error(ErrorCode::InvalidParams, "size " + std::to_string(n) +
                                                    " exceeds the source matrix");
        }
        return subsample(*src, n, rng);
      };
      // Sampling happens before the clock starts.
      const MMSet a = validate_mmset({}, make(src1));
      const MMSet b = validate_mmset({}, make(src2));
      for (const auto& method : methods) {
        if (method != "ae" && n > cubic_max) continue;
        double total = 0.0;
        for (int r = 0; r < repeats; ++r) {
          const auto start = Clock::now();
          const auto e = evaluate_metric(method, a, b, 1, method == "gw" ? eps_gw : eps_aw, 1);
          total += seconds_since(start);
          all_converged = all_converged && e.converged;
        }
        const double mean = total / repeats;
        csv += method + "," + std::to_string(n) + "," + format_value(mean) + "\n";
        out << method << " n=" << n << " seconds=" << format_value(mean) << "\n";
      }
    }
    write_file(out_path, csv);
    if (!all_converged) err << "bench: some solver runs hit their iteration limit\n";
    return kExitOk;
  }
};

// ---------------------------------------------------------------- test2

AnchorFamily load_graph_family(const fs::path& source, GraphFeature feature) {
  const auto files = list_family(source);
  if (files.size() < 2) {
    throw Error(ErrorCode::InvalidParams, source.string() + " must hold at least two graphs");
  }
  std::vector<Distribution> dists;
  dists.reserve(files.size());
  for (const auto& f : files) dists.push_back(graph_feature(read_edge_list(f), feature));
  return AnchorFamily::uniform(std::move(dists));
}

struct Test2Command {
  std::string dir1, dir2;
  std::string feature = "degree";
  int permutations = 199;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::size_t threads = 1;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("test2", "Energy-distance permutation test between graph families");
    cmd->add_option("dir1", dir1, "Directory of edge lists, or a manifest file")->required();
    cmd->add_option("dir2", dir2, "Directory of edge lists, or a manifest file")->required();
    cmd->add_option("--feature", feature, "degree | clustering")
        ->check(CLI::IsMember({"degree", "clustering"}))
        ->capture_default_str();
    cmd->add_option("--perm", permutations, "Number of permutations")->capture_default_str();
    cmd->add_option("--alpha", alpha, "Test level")->capture_default_str();
    cmd->add_option("--seed", seed, "Permutation seed")->capture_default_str();
    cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream&) const {
    if (permutations < 1) throw Error(ErrorCode::InvalidParams, "--perm must be at least 1");
    const auto kind = *parse_graph_feature(feature);
    const AnchorFamily f1 = load_graph_family(dir1, kind);
    const AnchorFamily f2 = load_graph_family(dir2, kind);
    const auto start = Clock::now();
    const TestReport report = permutation_test(f1, f2, permutations, alpha, seed, threads);
    const double seconds = seconds_since(start);
    json params{{"dir1", dir1}, {"dir2", dir2},   {"feature", feature}, {"perm", permutations},
                {"alpha", alpha}, {"seed", seed}, {"samples1", f1.size()}, {"samples2", f2.size()}};
    json result{{"statistic", report.statistic},
                {"p_value", report.p_value},
                {"permutations", report.permutations},
                {"alpha", report.alpha},
                {"reject", report.reject}};
    out << run_record("test2", params, seconds, result).dump() << "\n";
    return kExitOk;
  }
};

// ---------------------------------------------------------------- knn

struct KnnCommand {
  std::string corpus;
  std::string labels_path;
  std::string metric = "ae";
  int p = 1;
  std::optional<double> epsilon;
  bool rank = false;
  bool graph = false;
  std::string pairs_out;
  std::size_t threads = default_thread_count();

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("knn", "Leave-one-out nearest-neighbor retrieval");
    cmd->add_option("corpus", corpus, "Directory holding the corpus files")->required();
    cmd->add_option("--labels", labels_path, "Lines of '<file name> <label>'")->required();
    cmd->add_option("--metric", metric, "ae | ae-naive | aw | gw")
        ->check(CLI::IsMember(kMetrics))
        ->capture_default_str();
    cmd->add_option("--p", p, "Ground exponent (1 or 2)")->check(CLI::IsMember({1, 2}))->capture_default_str();
    cmd->add_option("--eps", epsilon, "Entropic regularization (defaults: aw 1e-5, gw 10)");
    cmd->add_flag("--rank", rank, "Replace costs by their normalized ranks");
    cmd->add_flag("--graph", graph, "Corpus files are edge lists");
    cmd->add_option("--pairs-out", pairs_out, "CSV of (i,j,distance,seconds)");
    cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
  }

  int run(std::ostream& out, std::ostream& err) const {
    std::vector<std::string> names, labels;
    {
      std::istringstream in(read_file(labels_path));
      std::string line;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name, label;
        if (!(ls >> name) || name.front() == '#') continue;
        if (!(ls >> label)) throw Error(ErrorCode::ParseError, "label missing for " + name);
        names.push_back(name);
        labels.push_back(label);
      }
    }
    if (names.size() < 2) throw Error(ErrorCode::InvalidParams, "knn needs at least two corpus items");

    const auto source = graph ? CostSource::EdgeList : CostSource::Matrix;
    std::vector<MMSet> items;
    items.reserve(names.size());
    for (const auto& name : names) items.push_back(load_mmset(fs::path(corpus) / name, {}, rank, source));

    const std::size_t n = items.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<Evaluation> evals(pairs.size());
    std::vector<double> secs(pairs.size());
    const double eps = epsilon.value_or(default_epsilon(metric));
    const auto start = Clock::now();
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
      const auto t0 = Clock::now();
      evals[k] = evaluate_metric(metric, items[pairs[k].first], items[pairs[k].second], p, eps, 1);
      secs[k] = seconds_since(t0);
    });
    const double total_seconds = seconds_since(start);

    Matrix dist(n, n);
    std::size_t not_converged = 0;
    std::string csv = "i,j,distance,seconds\n";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      dist(i, j) = dist(j, i) = evals[k].value;
      not_converged += evals[k].converged ? 0 : 1;
      csv += std::to_string(i) + "," + std::to_string(j) + "," + format_value(evals[k].value) + "," +
             format_value(secs[k]) + "\n";
    }
    if (!pairs_out.empty()) write_file(pairs_out, csv);

    std::map<int, std::size_t> hits{{1, 0}, {3, 0}, {5, 0}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> others;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) others.push_back(j);
      }
      std::stable_sort(others.begin(), others.end(),
                       [&](std::size_t x, std::size_t y) { return dist(i, x) < dist(i, y); });
      for (auto& [k, count] : hits) {
        const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(k), others.size());
        for (std::size_t r = 0; r < limit; ++r) {
          if (labels[others[r]] == labels[i]) {
            ++count;
            break;
          }
        }
      }
    }
    const double denom = static_cast<double>(n);
    json params{{"corpus", corpus}, {"labels", labels_path}, {"metric", metric}, {"p", p},
                {"eps", eps},       {"rank", rank},          {"graph", graph},   {"threads", threads}};
    json result{{"items", n},
                {"pairs", pairs.size()},
                {"accuracy", hits[1] / denom},
                {"top3_accuracy", hits[3] / denom},
                {"top5_accuracy", hits[5] / denom},
                {"evaluator", metric == "ae" && p != 1 ? "naive" : (metric == "ae" ? "sweep" : metric)},
                {"not_converged", not_converged}};
    out << run_record("knn", params, total_seconds, result).dump() << "\n";
    if (not_converged > 0) {
      err << "knn: " << not_converged << " pair(s) did not converge\n";
      return kExitNotConverged;
    }
    return kExitOk;
  }
};

// ---------------------------------------------------------------- helpers

struct GenCommand {
  std::string model;
  std::size_t n = 100;
  std::size_t attach_count = 2;
  double p_edge = 0.1;
  std::uint64_t seed = 0;
  std::string out_path;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen", "Generate a random graph as an edge list");
    cmd->add_option("model", model, "ba | er")->required()->check(CLI::IsMember({"ba", "er"}));
    cmd->add_option("--n", n, "Node count")->capture_default_str();
    cmd->add_option("--m", attach_count, "Attachments per node (ba)")->capture_default_str();
    cmd->add_option("--p", p_edge, "Edge probability (er)")->capture_default_str();
    cmd->add_option("--seed", seed, "Seed")->capture_default_str();
    cmd->add_option("--out", out_path, "Output edge list")->required();
  }

  int run(std::ostream&, std::ostream&) const {
    const Graph g = model == "ba" ? ba_generate(n, attach_count, seed) : er_generate(n, p_edge, seed);
    write_edge_list(out_path, g);
    return kExitOk;
  }
};

struct ConvertCommand {
  std::string in_path, out_path;
  std::string format = "binary";
  bool graph = false;
  bool rank = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("convert", "Convert between matrix formats");
    cmd->add_option("input", in_path, "Matrix file (or edge list with --graph)")->required();
    cmd->add_option("output", out_path, "Destination")->required();
    cmd->add_option("--format", format, "csv | binary")
        ->check(CLI::IsMember({"csv", "binary"}))
        ->capture_default_str();
    cmd->add_flag("--graph", graph, "Input is an edge list; write its geodesic distances");
    cmd->add_flag("--rank", rank, "Write the rank-transformed matrix");
  }

  int run(std::ostream&, std::ostream&) const {
    Matrix m = graph ? geodesic_cost(read_edge_list(in_path)) : read_matrix(in_path);
    if (rank) m = rank_transform(m);
    write_matrix(out_path, m, format == "csv" ? MatrixFormat::Csv : MatrixFormat::Binary);
    return kExitOk;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anchor Energy / Anchor Wasserstein distances between measured metric sets"};
  app.name("anchor");
  app.require_subcommand(1);

  DistCommand dist;
  PlanCommand plan;
  BenchCommand bench;
  Test2Command test2;
  KnnCommand knn;
  GenCommand gen;
  ConvertCommand convert;
  dist.attach(app);
  plan.attach(app);
  bench.attach(app);
  test2.attach(app);
  knn.attach(app);
  gen.attach(app);
  convert.attach(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "anchor: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (app.got_subcommand("dist")) return dist.run(out, err);
    if (app.got_subcommand("plan")) return plan.run(out, err);
    if (app.got_subcommand("bench")) return bench.run(out, err);
    if (app.got_subcommand("test2")) return test2.run(out, err);
    if (app.got_subcommand("knn")) return knn.run(out, err);
    if (app.got_subcommand("gen")) return gen.run(out, err);
    if (app.got_subcommand("convert")) return convert.run(out, err);
  } catch (const Error& e) {
    err << "anchor: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "anchor: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace anchor::cli
