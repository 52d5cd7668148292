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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails. Set QOSD_GNUTELLA to a SNAP edge list to run
// the performance check on the real graph instead of the surrogate.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qosd/adaptive.h"
#include "qosd/baselines.h"
#include "qosd/budget.h"
#include "qosd/error.h"
#include "qosd/framework.h"
#include "qosd/greedy.h"
#include "qosd/harness.h"
#include "qosd/linear_rounding.h"
#include "qosd/path.h"
#include "qosd/rational.h"
#include "qosd/rng.h"
#include "qosd/sampling.h"
#include "qosd/solver.h"
#include "test_support.h"

namespace qosd {
namespace {

using testing::RandomInstance;
using testing::RandomSpec;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, a);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

// Separation check that shares nothing with the solvers: every simple path
// of every pair is enumerated on small graphs.
bool Separates(const QosdInstance& inst, const BudgetVector& x) {
  if (inst.node_count() <= 10) {
    for (int i = 0; i < inst.pair_count(); ++i) {
      for (const Path& p : testing::AllSimplePaths(inst, i)) {
        if (PathLength(inst, p, x) < inst.threshold()) return false;
      }
    }
    return true;
  }
  return PotentialPaths(inst, x).empty();
}

constexpr Algorithm kSolvers[] = {Algorithm::kIg, Algorithm::kAt,
                                  Algorithm::kSa, Algorithm::kLr,
                                  Algorithm::kCc};

Outcome FeasibilityMatrix() {
  struct Cell {
    int nodes;
    double rho;
    Weight threshold;
    int pairs;
    int seeds;
  };
  const Cell cells[] = {{8, 0.3, 3, 2, 8},
                        {8, 0.3, 5, 3, 8},
                        {60, 0.1, 4, 5, 6},
                        {240, 0.05, 4, 5, 4}};
  const WeightRecipe recipes[] = {
      WeightRecipe::kLinear, WeightRecipe::kConvex, WeightRecipe::kConcave,
      WeightRecipe::kCutting, WeightRecipe::kHeterogeneous};
  int runs = 0;
  int failures = 0;
  int skipped = 0;
  int nonzero = 0;
  std::string first_failure;
  for (const Cell& cell : cells) {
    for (WeightRecipe recipe : recipes) {
      for (int s = 0; s < cell.seeds; ++s) {
        RandomSpec spec{cell.nodes,     cell.rho,   recipe,
                        cell.threshold, cell.pairs, {}};
        const QosdInstance inst =
            RandomInstance(spec, MixSeed({101, static_cast<uint64_t>(s),
                                          static_cast<uint64_t>(cell.nodes),
                                          static_cast<uint64_t>(recipe)}));
        std::vector<Algorithm> algorithms(std::begin(kSolvers),
                                          std::end(kSolvers));
        if (cell.nodes == 8) algorithms.push_back(Algorithm::kOracle);
        for (Algorithm a : algorithms) {
          if (a == Algorithm::kLr && !inst.AllLinear()) {
            ++skipped;
            continue;
          }
          ++runs;
          std::string problem;
          try {
            const RunReport r = Solve(inst, a, SolverParams{}, 7 + s);
            if (r.norm > 0) ++nonzero;
            if (!r.budget.WithinBox(inst)) problem = "outside box";
            if (!Separates(inst, r.budget)) problem = "not separating";
            if (!r.feasible) problem = "certified infeasible";
          } catch (const QosdError& e) {
            problem = e.what();
          }
          if (!problem.empty()) {
            ++failures;
            if (first_failure.empty()) {
              first_failure = std::string(AlgorithmName(a)) +
                              " n=" + std::to_string(cell.nodes) + ": " +
                              problem;
            }
          }
        }
      }
    }
  }
  Outcome out;
  out.pass = runs >= 500 && failures == 0;
  out.detail = "runs=" + std::to_string(runs) +
               " nonzero_norm=" + std::to_string(nonzero) +
               " failures=" + std::to_string(failures) +
               " lr_skipped_nonaffine=" + std::to_string(skipped);
  if (!first_failure.empty()) out.detail += " first=" + first_failure;
  return out;
}

Outcome OracleGap() {
  RandomSpec spec{8, 0.3, WeightRecipe::kLinear, 3, 2, {}};
  std::map<std::string, double> ratio_sum;
  int ratio_count = 0;
  int violations = 0;
  int bound_violations = 0;
  for (int i = 0; i < 50; ++i) {
    const QosdInstance inst = RandomInstance(spec, MixSeed({202, (uint64_t)i}));
    const int64_t opt = OracleOpt(inst).opt_norm;
    for (Algorithm a : kSolvers) {
      const RunReport r = Solve(inst, a, SolverParams{}, 31 + i);
      if (r.norm < opt || !r.feasible) ++violations;
      if (opt > 0)
        ratio_sum[std::string(AlgorithmName(a))] +=
            static_cast<double>(r.norm) / static_cast<double>(opt);
    }
    if (opt > 0) ++ratio_count;

    int max_chunk = 0;
    const IterativeResult at =
        RunIterative(inst, [&](const QosdInstance& in, const CandidateSet& p,
                               const ExecContext& c) {
          std::vector<ChunkIncrement> trace;
          BlockResult b = BlockAdaptive(in, p, c, &trace);
          for (const ChunkIncrement& ch : trace) {
            max_chunk = std::max(max_chunk, ch.amount);
          }
          return b;
        });
    const int size = at.candidates.size();
    const double bound =
        size == 0 ? 0.0
                  : std::ceil(static_cast<double>(opt) *
                              std::log(static_cast<double>(size) *
                                       static_cast<double>(inst.threshold()))) +
                        max_chunk;
    if (static_cast<double>(at.x.norm()) > bound) ++bound_violations;
  }
  Outcome out;
  out.pass = violations == 0 && bound_violations == 0;
  out.detail = "below_opt=" + std::to_string(violations) +
               " at_bound_violations=" + std::to_string(bound_violations);
  for (const auto& [name, sum] : ratio_sum) {
    out.detail += " mean_" + name + "/opt=" + Fmt("%.3f", sum / ratio_count);
  }
  return out;
}

Outcome GreedyEqualsAdaptive() {
  int mismatches = 0;
  int compared = 0;
  for (int i = 0; i < 30; ++i) {
    RandomSpec spec{20, 0.2, WeightRecipe::kLinear, Weight{3 + i % 2}, 3, {}};
    if (i % 2 == 1) {
      spec.recipe = WeightRecipe::kConcave;
      spec.threshold = 5;
    }
    const QosdInstance inst = RandomInstance(spec, MixSeed({303, (uint64_t)i}));
    if (inst.concave_ratio() != Rational(1)) {
      ++mismatches;
      continue;
    }
    const RunReport ig = RunIg(inst);
    const RunReport at = RunAt(inst);
    if (!(ig.budget == at.budget)) ++mismatches;
    CandidateSet all;
    for (Path& p : EnumerateFeasiblePaths(inst)) all.Insert(std::move(p));
    const IterativeResult harvested = RunIterative(
        inst, [](const QosdInstance& in, const CandidateSet& p,
                 const ExecContext& c) { return BlockGreedy(in, p, c); });
    const CandidateSet* sets[] = {&all, &harvested.candidates};
    for (const CandidateSet* set : sets) {
      ++compared;
      if (!(BlockGreedy(inst, *set).x == BlockAdaptive(inst, *set).x)) {
        ++mismatches;
      }
    }
  }
  Outcome out;
  out.pass = mismatches == 0;
  out.detail = "instances=30 candidate_sets=" + std::to_string(compared) +
               " mismatches=" + std::to_string(mismatches);
  return out;
}

// Random monotone table reaching T. With min_step 0 flat steps are common
// and gamma is usually 0; with min_step 1 it lands strictly inside (0, 1].
WeightFunction RandomTable(Weight threshold, Weight min_step, Rng& rng) {
  const int cap = 1 + static_cast<int>(rng.Below(4));
  std::vector<Weight> table{1};
  for (int i = 1; i <= cap; ++i) {
    table.push_back(table.back() + min_step +
                    static_cast<Weight>(rng.Below(4)));
  }
  table.back() = std::max(table.back(), threshold);
  return WeightFunction(std::move(table));
}

Outcome ConcaveRatioInequalities() {
  Rng rng(404);
  int tuples = 0;
  int violations = 0;
  int nontrivial_gamma = 0;
  while (tuples < 10000) {
    const int nodes = 5 + static_cast<int>(rng.Below(4));
    const Weight threshold = 3 + static_cast<Weight>(rng.Below(4));
    Graph g = GenerateErdosRenyi(nodes, 0.4, rng.Below(1u << 30));
    const Weight min_step = static_cast<Weight>(rng.Below(2));
    std::vector<WeightFunction> weights;
    for (int e = 0; e < g.edge_count(); ++e) {
      weights.push_back(RandomTable(threshold, min_step, rng));
    }
    std::vector<NodePair> pairs =
        SamplePairs(g, 1 + static_cast<int>(rng.Below(3)), rng.Below(1u << 30));
    if (pairs.empty()) continue;
    const QosdInstance inst(std::move(g), std::move(weights), std::move(pairs),
                            threshold);
    const std::vector<Path> feasible = EnumerateFeasiblePaths(inst);
    if (feasible.empty()) continue;
    const Rational gamma = inst.concave_ratio();
    if (gamma > Rational(0) && gamma < Rational(1)) ++nontrivial_gamma;
    for (int t = 0; t < 50 && tuples < 10000; ++t) {
      std::vector<Path> subset;
      for (const Path& p : feasible) {
        if (rng.Bernoulli(0.6)) subset.push_back(p);
      }
      if (subset.empty()) subset.push_back(feasible.front());
      BudgetVector x(inst.edge_count());
      BudgetVector y(inst.edge_count());
      BudgetVector z(inst.edge_count());
      for (EdgeIndex e = 0; e < inst.edge_count(); ++e) {
        const int ye = static_cast<int>(rng.Below(inst.box(e) + 1));
        y.Set(e, ye);
        x.Set(e, static_cast<int>(rng.Below(ye + 1)));
      }
      if (t % 2 == 0) {
        // Unit increment on an edge with room above y.
        std::vector<EdgeIndex> open;
        for (EdgeIndex e = 0; e < inst.edge_count(); ++e) {
          if (y[e] < inst.box(e)) open.push_back(e);
        }
        if (open.empty()) continue;
        z.Set(open[rng.Below(open.size())], 1);
      } else {
        for (EdgeIndex e = 0; e < inst.edge_count(); ++e) {
          z.Set(e, static_cast<int>(rng.Below(inst.box(e) - y[e] + 1)));
        }
      }
      const int64_t dx = DValue(inst, subset, x + z) - DValue(inst, subset, x);
      const int64_t dy = DValue(inst, subset, y + z) - DValue(inst, subset, y);
      // dx >= gamma * dy, cross-multiplied.
      if (static_cast<__int128>(dx) * gamma.den() <
          static_cast<__int128>(dy) * gamma.num()) {
        ++violations;
      }
      ++tuples;
    }
  }
  Outcome out;
  out.pass = violations == 0;
  out.detail = "tuples=" + std::to_string(tuples) +
               " violations=" + std::to_string(violations) +
               " instances_with_0<gamma<1=" + std::to_string(nontrivial_gamma);
  return out;
}

Outcome EstimatorUnbiased() {
  const QosdInstance inst = testing::DiamondInstance(3);
  const BudgetVector x(inst.edge_count());
  const PathSampler sampler(inst, x, 0.8);
  constexpr int64_t kSamples = 50000;
  const std::vector<SampledPath> samples = DrawSamples(sampler, kSamples, 505);
  double sum = 0.0;
  double sum_sq = 0.0;
  int64_t via_tree = 0;
  for (const SampledPath& s : samples) {
    const double v =
        s.feasible ? static_cast<double>(RValue(inst, s.path, x)) / s.rho : 0.0;
    sum += v;
    sum_sq += v * v;
    // Edge 0 is 0 -> 1, the tree edge out of the source.
    if (s.feasible && s.path.edges.front() == 0) ++via_tree;
  }
  const double n = static_cast<double>(kSamples);
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / (n - 1));
  const double estimate = EstimateB(inst, samples, x);
  const double freq = static_cast<double>(via_tree) / n;
  const double sigma = std::sqrt(0.8 * 0.2 / n);
  Outcome out;
  // A zero standard error is fine only when the mean is exact.
  out.pass = std::abs(mean - 4.0) <= 3.0 * se + 1e-12 &&
             std::abs(estimate - mean) <= 1e-9 &&
             std::abs(freq - 0.8) <= 3.0 * sigma &&
             std::abs((1.0 - freq) - 0.2) <= 3.0 * sigma;
  out.detail = "mean=" + Fmt("%.4f", mean) + " se=" + Fmt("%.4f", se) +
               " freq_tree=" + Fmt("%.4f", freq) +
               " freq_other=" + Fmt("%.4f", 1.0 - freq) +
               " sigma=" + Fmt("%.4f", sigma);
  return out;
}

Outcome LrBounds() {
  RandomSpec spec{60, 0.1, WeightRecipe::kLinear, 5, 10, {}};
  constexpr double kDelta = 0.2;
  int infeasible_first = 0;
  int mismatched = 0;
  double norm_sum = 0.0;
  double bound_sum = 0.0;
  for (int i = 0; i < 200; ++i) {
    const QosdInstance inst = RandomInstance(spec, MixSeed({606, (uint64_t)i}));
    const LpSolution lp = ConstraintGeneration(inst);
    const double eta = Eta(inst.node_count(), inst.hop_bound(), 1.0, kDelta);
    const uint64_t seed = 61 + i;
    Rng rng(MixSeed({seed, 0}));
    const BudgetVector x = RoundSolution(inst, lp.fractional, eta, rng);
    const bool ok = PotentialPaths(inst, x).empty();
    if (!ok) ++infeasible_first;
    norm_sum += static_cast<double>(x.norm());
    bound_sum += eta * lp.objective;
    // The solver's own first attempt must be this one.
    LrConfig config;
    config.delta = kDelta;
    config.seed = seed;
    const RunReport r = RunLr(inst, config);
    if (r.extras.at("first_attempt_feasible") != (ok ? "1" : "0") ||
        !r.feasible) {
      ++mismatched;
    }
  }
  const double rate = infeasible_first / 200.0;

  RandomSpec small{8, 0.3, WeightRecipe::kLinear, 5, 3, {}};
  int lp_above_opt = 0;
  for (int i = 0; i < 20; ++i) {
    const QosdInstance inst =
        RandomInstance(small, MixSeed({607, (uint64_t)i}));
    const double objective = ConstraintGeneration(inst).objective;
    if (objective > static_cast<double>(OracleOpt(inst).opt_norm) + 1e-6) {
      ++lp_above_opt;
    }
  }
  Outcome out;
  out.pass = rate <= 0.27 && norm_sum <= bound_sum && lp_above_opt == 0 &&
             mismatched == 0;
  out.detail = "first_attempt_infeasible_rate=" + Fmt("%.3f", rate) +
               " mean_norm=" + Fmt("%.2f", norm_sum / 200) +
               " mean_eta_lp=" + Fmt("%.2f", bound_sum / 200) +
               " lp_above_opt=" + std::to_string(lp_above_opt) + "/20" +
               " solver_mismatch=" + std::to_string(mismatched);
  return out;
}

ExperimentConfig TrendConfig(double rho) {
  ExperimentConfig config;
  config.instance.nodes = 60;
  config.instance.rho = rho;
  config.instance.pair_count = 10;
  config.instance.recipe = WeightRecipe::kLinear;
  config.thresholds = {3};
  config.repetitions = 5;
  config.master_seed = 707;
  return config;
}

Outcome LinearTrend() {
  Outcome out;
  for (double rho : {0.1, 0.3, 0.5}) {
    std::map<std::string, double> mean;
    for (const ExperimentRow& row : RunExperiment(TrendConfig(rho))) {
      if (row.extras.at("status") != "ok" || !row.feasible) out.pass = false;
      mean[row.algorithm] += static_cast<double>(row.norm) / 5.0;
    }
    const double lr = mean["lr"];
    const bool ok = lr <= mean["at"] && lr <= mean["ig"] &&
                    lr <= 1.05 * mean["sa"] && mean["cc"] >= 1.5 * lr;
    out.pass = out.pass && ok;
    out.detail += "rho=" + Fmt("%.1f", rho) + "[";
    for (const char* name : {"lr", "at", "ig", "sa", "cc"}) {
      out.detail += std::string(name) + "=" + Fmt("%.1f", mean[name]) +
                    (std::string(name) == "cc" ? "" : " ");
    }
    out.detail += "] ";
  }
  return out;
}

Outcome GammaSensitivity() {
  RandomSpec spec{60, 0.1, WeightRecipe::kHeterogeneous, 10, 10, {}};
  int ig_below = 0;
  double ig_sum = 0.0;
  double at_sum = 0.0;
  int gamma_zero = 0;
  for (int i = 0; i < 20; ++i) {
    const QosdInstance inst = RandomInstance(spec, MixSeed({808, (uint64_t)i}));
    if (inst.concave_ratio() == Rational(0)) ++gamma_zero;
    const int64_t ig = RunIg(inst).norm;
    const int64_t at = RunAt(inst).norm;
    if (ig < at) ++ig_below;
    ig_sum += static_cast<double>(ig);
    at_sum += static_cast<double>(at);
  }
  const double ratio = ig_sum / at_sum;
  Outcome out;
  out.pass = gamma_zero == 20 && ig_below == 0 && ratio > 1.5;
  out.detail = "seeds=20 gamma_zero=" + std::to_string(gamma_zero) +
               " seeds_with_ig<at=" + std::to_string(ig_below) +
               " mean_ig/mean_at=" + Fmt("%.3f", ratio);
  return out;
}

Outcome ThreadInvariance() {
  int runs = 0;
  int mismatches = 0;
  const ExecContext one{1, Deadline::Never()};
  const ExecContext four{4, Deadline::Never()};
  for (int i = 0; i < 6; ++i) {
    RandomSpec spec{
        60, 0.1, i % 2 ? WeightRecipe::kHeterogeneous : WeightRecipe::kLinear,
        4,  5,   {}};
    if (i >= 4) spec = RandomSpec{8, 0.3, WeightRecipe::kLinear, 3, 2, {}};
    const QosdInstance inst = RandomInstance(spec, MixSeed({909, (uint64_t)i}));
    std::vector<Algorithm> algorithms(std::begin(kSolvers), std::end(kSolvers));
    if (inst.node_count() == 8) algorithms.push_back(Algorithm::kOracle);
    for (Algorithm a : algorithms) {
      if (a == Algorithm::kLr && !inst.AllLinear()) continue;
      ++runs;
      const RunReport r1 = Solve(inst, a, SolverParams{}, 91 + i, one);
      const RunReport r4 = Solve(inst, a, SolverParams{}, 91 + i, four);
      if (!(r1.budget == r4.budget) || r1.norm != r4.norm) ++mismatches;
    }
  }
  ExperimentConfig config = TrendConfig(0.1);
  config.instance.recipe = WeightRecipe::kHeterogeneous;
  config.algorithms = {Algorithm::kIg, Algorithm::kAt, Algorithm::kSa,
                       Algorithm::kCc};
  config.repetitions = 3;
  const std::vector<ExperimentRow> a = RunExperiment(config);
  config.threads = 4;
  config.parallel_runs = 3;
  const std::vector<ExperimentRow> b = RunExperiment(config);
  bool rows_equal = a.size() == b.size();
  for (size_t i = 0; rows_equal && i < a.size(); ++i) {
    rows_equal = a[i].algorithm == b[i].algorithm && a[i].seed == b[i].seed &&
                 a[i].budget == b[i].budget;
  }
  if (!rows_equal) ++mismatches;
  Outcome out;
  out.pass = mismatches == 0;
  out.detail = "solver_runs=" + std::to_string(runs) +
               " experiment_rows=" + std::to_string(a.size()) +
               " mismatches=" + std::to_string(mismatches);
  return out;
}

Outcome GnutellaSmoke() {
  constexpr Weight kThreshold = 10;
  constexpr uint64_t kSeed = 1010;
  Graph graph;
  std::string source;
  const char* env = std::getenv("QOSD_GNUTELLA");
  if (env != nullptr && std::filesystem::exists(env)) {
    graph = LoadEdgeListFile(env, true).graph;
    source = "file";
  } else {
    // Same node and expected edge count as the Gnutella crawl.
    constexpr int kNodes = 10876;
    constexpr double kEdges = 39994.0;
    graph = GenerateErdosRenyi(
        kNodes, kEdges / (static_cast<double>(kNodes) * (kNodes - 1)), kSeed);
    source = "surrogate";
  }
  const int n = graph.node_count();
  const int m = graph.edge_count();
  std::vector<WeightFunction> weights(m, MakeLinearWeight(kThreshold));
  std::vector<NodePair> pairs = SamplePairs(graph, 100, MixSeed({kSeed, 3}));
  const QosdInstance inst(std::move(graph), std::move(weights),
                          std::move(pairs), kThreshold);
  const auto start = std::chrono::steady_clock::now();
  const RunReport r = RunIg(inst);
  const double elapsed = Seconds(start);
  Outcome out;
  out.pass = r.feasible && elapsed < 7200.0;
  out.detail =
      "graph=" + source + " n=" + std::to_string(n) +
      " m=" + std::to_string(m) + " k=" + std::to_string(inst.pair_count()) +
      " norm=" + std::to_string(r.norm) + " time_s=" + Fmt("%.2f", elapsed) +
      (elapsed < 1800.0 ? " under_30min" : " over_30min");
  return out;
}

}  // namespace
}  // namespace qosd

int main() {
  struct Criterion {
    const char* name;
    std::function<qosd::Outcome()> run;
  };
  const Criterion criteria[] = {
      {"feasibility-matrix", qosd::FeasibilityMatrix},
      {"oracle-gap", qosd::OracleGap},
      {"ig-equals-at-at-gamma-1", qosd::GreedyEqualsAdaptive},
      {"concave-ratio-inequalities", qosd::ConcaveRatioInequalities},
      {"estimator-unbiased", qosd::EstimatorUnbiased},
      {"lr-statistical-bounds", qosd::LrBounds},
      {"linear-trend", qosd::LinearTrend},
      {"gamma-sensitivity", qosd::GammaSensitivity},
      {"thread-determinism", qosd::ThreadInvariance},
      {"performance-smoke", qosd::GnutellaSmoke},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    qosd::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = qosd::Seconds(start);
    if (!out.pass) ++failed;
    std::printf("%s %2d %s: %s (%.1fs)\n", out.pass ? "PASS" : "FAIL", index,
                c.name, out.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
