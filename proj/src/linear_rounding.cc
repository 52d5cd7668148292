// Copyright 2026 The Authors.
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

#include "qosd/linear_rounding.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "qosd/error.h"
#include "qosd/shortest_path.h"
#include "qosd/simplex.h"
#include "qosd/solver.h"

namespace qosd {
namespace {

void RequireLinear(const QosdInstance& instance) {
  if (!instance.AllLinear()) {
    throw QosdError(ErrorKind::kNonlinearWeights,
                    "lr needs affine weight functions on every edge");
  }
}

std::string FormatReal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// Shortest path of pair i under beta x' + alpha, if shorter than `limit`.
std::optional<Path> FractionalShortestPath(const QosdInstance& instance,
                                           const std::vector<double>& x,
                                           int pair_index, double limit) {
  const Graph& g = instance.graph();
  const NodePair& pair = instance.pair(pair_index);
  constexpr double kUnreached = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.node_count(), kUnreached);
  std::vector<EdgeIndex> pred(g.node_count(), -1);
  std::vector<char> settled(g.node_count(), 0);
  using Entry = std::pair<double, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[pair.source] = 0.0;
  heap.emplace(0.0, pair.source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    if (d >= limit) break;
    settled[u] = 1;
    if (u == pair.sink) break;
    for (const Arc& arc : g.out_arcs(u)) {
      const NodeId v = arc.neighbor;
      if (settled[v]) continue;
      const LinearCoeffs& lin = *instance.weight(arc.edge).affine();
      const double nd = d + static_cast<double>(lin.beta) * x[arc.edge] +
                        static_cast<double>(lin.alpha);
      if (nd >= limit) continue;
      if (nd < dist[v]) {
        dist[v] = nd;
        pred[v] = arc.edge;
        heap.emplace(nd, v);
      } else if (nd == dist[v] && arc.edge < pred[v]) {
        pred[v] = arc.edge;
      }
    }
  }
  if (!(dist[pair.sink] < limit)) return std::nullopt;
  std::vector<EdgeIndex> edges;
  for (NodeId v = pair.sink; v != pair.source; v = g.edge(pred[v]).src) {
    edges.push_back(pred[v]);
  }
  std::reverse(edges.begin(), edges.end());
  return MakePath(instance, std::move(edges), pair_index);
}

double Snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= kIntegralSnap ? r : v;
}

}  // namespace

LpSolution SolveLp(const QosdInstance& instance, const CandidateSet& paths) {
  RequireLinear(instance);
  const Weight threshold = instance.threshold();
  LpSolution solution;
  solution.fractional.assign(instance.edge_count(), 0.0);
  solution.constraint_paths = paths;
  solution.rounds = 1;

  // Paths already at T are vacuous.
  std::vector<int> active;
  std::vector<double> demand;
  std::vector<int> row_of(instance.edge_count(), -1);
  std::vector<EdgeIndex> support;
  for (int i = 0; i < paths.size(); ++i) {
    Weight slack = threshold;
    for (EdgeIndex e : paths[i].edges) {
      slack -= instance.weight(e).affine()->alpha;
    }
    if (slack <= 0) continue;
    active.push_back(i);
    demand.push_back(static_cast<double>(slack));
    for (EdgeIndex e : paths[i].edges) {
      if (row_of[e] < 0) {
        row_of[e] = 0;
        support.push_back(e);
      }
    }
  }
  if (active.empty()) return solution;
  std::sort(support.begin(), support.end());
  for (int r = 0; r < static_cast<int>(support.size()); ++r) {
    row_of[support[r]] = r;
  }

  // Dual of the covering LP: one row per support edge, one column per path
  // followed by one per box bound. Row prices are the primal x'.
  SimplexProblem dual;
  dual.rows = static_cast<int>(support.size());
  const int path_cols = static_cast<int>(active.size());
  dual.cols = path_cols + dual.rows;
  dual.a.assign(static_cast<size_t>(dual.rows) * dual.cols, 0.0);
  dual.b.assign(dual.rows, 1.0);
  dual.c.assign(dual.cols, 0.0);
  for (int j = 0; j < path_cols; ++j) {
    dual.c[j] = demand[j];
    for (EdgeIndex e : paths[active[j]].edges) {
      dual.a[static_cast<size_t>(row_of[e]) * dual.cols + j] =
          static_cast<double>(instance.weight(e).affine()->beta);
    }
  }
  for (int r = 0; r < dual.rows; ++r) {
    dual.a[static_cast<size_t>(r) * dual.cols + path_cols + r] = -1.0;
    dual.c[path_cols + r] = -static_cast<double>(instance.box(support[r]));
  }
  const SimplexResult lp = SolveSimplex(dual);
  solution.pivots = lp.pivots;
  for (int r = 0; r < dual.rows; ++r) {
    const EdgeIndex e = support[r];
    solution.fractional[e] =
        std::clamp(lp.dual[r], 0.0, static_cast<double>(instance.box(e)));
    solution.objective += solution.fractional[e];
  }
  return solution;
}

LpSolution ConstraintGeneration(const QosdInstance& instance,
                                const ConstraintOptions& options,
                                const ExecContext& ctx) {
  RequireLinear(instance);
  const int64_t max_rounds =
      options.max_rounds > 0
          ? options.max_rounds
          : 10LL * instance.pair_count() * instance.hop_bound();
  const double limit = static_cast<double>(instance.threshold()) *
                       (1.0 - kLpFeasibilityTolerance);
  CandidateSet paths;
  LpSolution solution = SolveLp(instance, paths);
  int64_t pivots = solution.pivots;
  for (int64_t round = 1;; ++round) {
    ctx.deadline.Check("constraint generation");
    std::vector<std::optional<Path>> found(instance.pair_count());
    ParallelFor(instance.pair_count(), ctx, [&](int64_t i) {
      found[i] = FractionalShortestPath(instance, solution.fractional,
                                        static_cast<int>(i), limit);
    });
    bool violated = false;
    bool added = false;
    for (auto& p : found) {
      if (!p) continue;
      violated = true;
      added |= paths.Insert(std::move(*p));
    }
    if (!violated) {
      solution.rounds = round;
      solution.pivots = pivots;
      return solution;
    }
    if (!added) {
      throw QosdError(ErrorKind::kStall,
                      "violated path is already an LP constraint");
    }
    if (round >= max_rounds) {
      throw QosdError(ErrorKind::kIterationCap,
                      "constraint generation exceeded " +
                          std::to_string(max_rounds) + " rounds");
    }
    solution = SolveLp(instance, paths);
    pivots += solution.pivots;
  }
}

double Eta(int node_count, int hop_bound, double beta_max, double delta) {
  const double prefactor = beta_max / -std::expm1(-beta_max);
  return prefactor * (hop_bound * std::log(static_cast<double>(node_count)) -
                      std::log(delta) + 1.0);
}

BudgetVector RoundSolution(const QosdInstance& instance,
                           const std::vector<double>& fractional, double eta,
                           Rng& rng) {
  BudgetVector x(instance.edge_count());
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    const double v = Snap(fractional[e]);
    const double lo = std::floor(v);
    int32_t value = static_cast<int32_t>(lo);
    if (v != lo) {
      const double p = eta * (v - lo);
      if (p >= 1.0 || rng.Bernoulli(p)) ++value;
    }
    x.Set(e, std::min(value, instance.box(e)));
  }
  return x;
}

BudgetVector CeilSolution(const QosdInstance& instance,
                          const std::vector<double>& fractional) {
  BudgetVector x(instance.edge_count());
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    const auto value = static_cast<int32_t>(std::ceil(Snap(fractional[e])));
    x.Set(e, std::min(value, instance.box(e)));
  }
  return x;
}

RunReport RunLr(const QosdInstance& instance, const LrConfig& config,
                const ExecContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  RequireLinear(instance);
  if (!(config.delta > 0.0 && config.delta < 1.0)) {
    throw QosdError(ErrorKind::kInvalidInstance, "delta must be in (0, 1)");
  }
  const LpSolution lp = ConstraintGeneration(instance, config.constraints, ctx);
  Weight beta_max = 1;
  for (const WeightFunction& w : instance.weights()) {
    beta_max = std::max(beta_max, w.affine()->beta);
  }
  const double eta = config.eta_override.value_or(
      Eta(instance.node_count(), instance.hop_bound(),
          static_cast<double>(beta_max), config.delta));

  BudgetVector x;
  bool found = false;
  bool first_ok = false;
  int attempts = 0;
  while (!found && attempts <= config.max_retries) {
    ctx.deadline.Check("rounding");
    Rng rng(MixSeed({config.seed, static_cast<uint64_t>(attempts)}));
    x = RoundSolution(instance, lp.fractional, eta, rng);
    found = IsFeasibleSolution(instance, x, ctx);
    if (attempts == 0) first_ok = found;
    ++attempts;
  }
  const bool fallback = !found;
  if (fallback) x = CeilSolution(instance, lp.fractional);

  RunReport report;
  report.algorithm = "lr";
  report.budget = std::move(x);
  report.outer_iterations = lp.rounds;
  report.inner_iterations = lp.pivots;
  report.seed = config.seed;
  report.extras["eta"] = FormatReal(eta);
  report.extras["lp_objective"] = FormatReal(lp.objective);
  report.extras["constraint_paths"] =
      std::to_string(lp.constraint_paths.size());
  report.extras["retries"] = std::to_string(attempts - 1);
  report.extras["first_attempt_feasible"] = first_ok ? "1" : "0";
  report.extras["fallback"] = fallback ? "1" : "0";
  CertifyReport(instance, report, start, ctx);
  return report;
}

}  // namespace qosd
