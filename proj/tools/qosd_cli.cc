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

// qosd: solve, validate and benchmark QoS degradation instances.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qosd/budget.h"
#include "qosd/error.h"
#include "qosd/harness.h"
#include "qosd/instance.h"
#include "qosd/shortest_path.h"
#include "qosd/solver.h"

namespace {

using namespace qosd;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitInternal = 4;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kInvalidInstance:
    case ErrorKind::kUnavailable:
      return kExitUsage;
    case ErrorKind::kInfeasibleBox:
    case ErrorKind::kNonlinearWeights:
      return kExitInfeasible;
    case ErrorKind::kTimeout:
      return kExitTimeout;
    case ErrorKind::kStall:
    case ErrorKind::kIterationCap:
    case ErrorKind::kBlownBudget:
    case ErrorKind::kInternal:
      return kExitInternal;
  }
  return kExitInternal;
}

// Flags shared by every subcommand that needs an instance.
struct InstanceFlags {
  std::string graph;
  bool undirected = false;
  std::string instance;
  int er_nodes = 0;
  double er_rho = 0.1;
  Weight threshold = 3;
  std::string pairs_file;
  int random_pairs = 10;
  std::string weight_model = "linear";
  Weight beta = 1;
  int max_cap = 0;
  uint64_t seed = 1;

  void Register(CLI::App* app) {
    app->add_option("--graph", graph, "SNAP-style edge list");
    app->add_flag("--undirected", undirected, "Insert both directions");
    app->add_option("--instance", instance, "qosd-instance v1 file");
    app->add_option("--er-nodes", er_nodes, "Generate G(n, rho) with n nodes");
    app->add_option("--er-rho", er_rho, "Edge probability for --er-nodes");
    app->add_option("--threshold,-T", threshold, "Threshold T");
    app->add_option("--pairs-file", pairs_file, "\"s t\" per line");
    app->add_option("--random-pairs", random_pairs, "Sample K pairs");
    app->add_option("--weight-model", weight_model,
                    "linear|convex|concave|cutting|heterogeneous");
    app->add_option("--beta", beta, "Slope of the linear model");
    app->add_option("--max-cap", max_cap, "Truncate every box (0 = none)");
    app->add_option("--seed", seed, "Seed for generators and solvers");
  }

  QosdInstance Build() const {
    InstanceSpec spec;
    int sources = 0;
    if (!instance.empty()) {
      spec.source = SourceKind::kInstanceFile;
      spec.path = instance;
      ++sources;
    }
    if (!graph.empty()) {
      spec.source = SourceKind::kEdgeList;
      spec.path = graph;
      spec.directed = !undirected;
      ++sources;
    }
    if (er_nodes > 0) {
      spec.source = SourceKind::kEr;
      spec.nodes = er_nodes;
      spec.rho = er_rho;
      ++sources;
    }
    if (sources != 1) {
      throw QosdError(ErrorKind::kParse,
                      "give exactly one of --graph, --instance, --er-nodes");
    }
    const auto recipe = ParseWeightRecipe(weight_model);
    if (!recipe) {
      throw QosdError(ErrorKind::kParse,
                      "unknown weight model '" + weight_model + "'");
    }
    spec.recipe = *recipe;
    spec.weight_options.linear_beta = beta;
    if (max_cap > 0) spec.weight_options.max_cap = max_cap;
    spec.pairs_path = pairs_file;
    spec.pair_count = random_pairs;
    return BuildInstance(spec, threshold, seed);
  }
};

struct SolveFlags {
  std::string algorithm = "at";
  double alpha = 0.8;
  int q = 1;
  double epsilon = 0.5;
  double delta = 0.2;
  int64_t samples = 0;
  std::string sample_mode = "practical";
  double eta = 0.0;
  double time_limit = 86400.0;
  int threads = 1;
  std::string output;

  void Register(CLI::App* app, bool with_algorithm) {
    if (with_algorithm) {
      app->add_option("--algorithm,-a", algorithm, "ig|at|sa|lr|cc|oracle");
    }
    app->add_option("--alpha", alpha, "SA walk bias");
    app->add_option("--q", q, "SA chunk size");
    app->add_option("--epsilon", epsilon, "SA accuracy");
    app->add_option("--delta", delta, "SA/LR failure probability");
    app->add_option("--samples", samples, "SA samples per round (0 = 10k)");
    app->add_option("--sample-mode", sample_mode, "practical|theoretical");
    app->add_option("--eta", eta, "Override the LR inflation factor");
    app->add_option("--time-limit", time_limit, "Seconds");
    app->add_option("--threads", threads, "Worker threads");
    app->add_option("--output,-o", output, "Write the budget vector here");
  }

  SolverParams Params() const {
    SolverParams p;
    p.sa.alpha = alpha;
    p.sa.q = q;
    p.sa.epsilon = epsilon;
    p.sa.delta = delta;
    p.sa.samples_per_round = samples;
    if (sample_mode == "theoretical") {
      p.sa.mode = SampleMode::kTheoretical;
    } else if (sample_mode != "practical") {
      throw QosdError(ErrorKind::kParse,
                      "unknown sample mode '" + sample_mode + "'");
    }
    p.lr.delta = delta;
    if (eta > 0.0) p.lr.eta_override = eta;
    return p;
  }

  ExecContext Context() const {
    ExecContext ctx;
    ctx.threads = threads;
    ctx.deadline = Deadline::After(time_limit);
    return ctx;
  }
};

void PrintReport(const RunReport& r) {
  std::cout << "algorithm=" << r.algorithm << "\n"
            << "norm=" << r.norm << "\n"
            << "feasible=" << (r.feasible ? "true" : "false") << "\n"
            << "outer_iterations=" << r.outer_iterations << "\n"
            << "inner_iterations=" << r.inner_iterations << "\n"
            << "wall_time_s=" << r.wall_time_s << "\n"
            << "seed=" << r.seed << "\n";
  for (const auto& [k, v] : r.extras) std::cout << k << "=" << v << "\n";
}

void WriteBudgetFile(const std::string& path, const BudgetVector& x) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw QosdError(ErrorKind::kParse, "cannot write " + path);
  WriteBudget(out, x);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QoS degradation solvers"};
  app.require_subcommand(1);

  InstanceFlags inst_flags;
  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Run one algorithm");
  inst_flags.Register(solve);
  solve_flags.Register(solve, true);

  CLI::App* oracle = app.add_subcommand("oracle", "Exact OPT (tiny inputs)");
  inst_flags.Register(oracle);
  std::string oracle_output;
  oracle->add_option("--output,-o", oracle_output, "Write the witness here");

  CLI::App* validate = app.add_subcommand("validate", "Check a budget vector");
  inst_flags.Register(validate);
  std::string budget_path;
  validate->add_option("--budget", budget_path, "qosd-budget v1 file")
      ->required();

  CLI::App* gen = app.add_subcommand("gen", "Write an instance file");
  inst_flags.Register(gen);
  std::string gen_output;
  gen->add_option("--output,-o", gen_output, "Destination")->required();

  CLI::App* experiment =
      app.add_subcommand("experiment", "Run a qosd-config v1 batch");
  std::string config_path;
  std::string csv_path;
  int exp_threads = 0;
  int parallel_runs = 0;
  experiment->add_option("--config", config_path, "Config file")->required();
  experiment->add_option("--output,-o", csv_path, "CSV path (default stdout)");
  experiment->add_option("--threads", exp_threads, "Override threads");
  experiment->add_option("--parallel-runs", parallel_runs,
                         "Independent runs at once");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const auto algorithm = ParseAlgorithm(solve_flags.algorithm);
      if (!algorithm) {
        throw QosdError(ErrorKind::kParse,
                        "unknown algorithm '" + solve_flags.algorithm + "'");
      }
      const QosdInstance instance = inst_flags.Build();
      const RunReport r = Solve(instance, *algorithm, solve_flags.Params(),
                                inst_flags.seed, solve_flags.Context());
      PrintReport(r);
      WriteBudgetFile(solve_flags.output, r.budget);
      return r.feasible ? kExitOk : kExitInternal;
    }
    if (*oracle) {
      const QosdInstance instance = inst_flags.Build();
      const OracleResult r = OracleOpt(instance);
      std::cout << "opt=" << r.opt_norm << "\n"
                << "feasible_paths=" << r.feasible_paths << "\n"
                << "explored=" << r.explored << "\n";
      WriteBudgetFile(oracle_output, r.witness);
      return kExitOk;
    }
    if (*validate) {
      const QosdInstance instance = inst_flags.Build();
      std::ifstream in(budget_path);
      if (!in) throw QosdError(ErrorKind::kParse, "cannot open " + budget_path);
      const BudgetVector x = ReadBudget(in);
      if (x.dimension() != instance.edge_count()) {
        throw QosdError(ErrorKind::kParse,
                        "budget has " + std::to_string(x.dimension()) +
                            " entries for " +
                            std::to_string(instance.edge_count()) + " edges");
      }
      const bool within = x.WithinBox(instance);
      const auto open = UnseparatedPairs(instance, x);
      const bool ok = within && open.empty();
      std::cout << "feasible=" << (ok ? "true" : "false") << "\n"
                << "norm=" << x.norm() << "\n"
                << "within_box=" << (within ? "true" : "false") << "\n"
                << "unseparated_pairs=" << open.size() << "\n";
      return ok ? kExitOk : kExitInfeasible;
    }
    if (*gen) {
      const QosdInstance instance = inst_flags.Build();
      std::ofstream out(gen_output);
      if (!out)
        throw QosdError(ErrorKind::kParse, "cannot write " + gen_output);
      WriteInstance(out, instance, !inst_flags.undirected);
      return kExitOk;
    }
    if (*experiment) {
      ExperimentConfig config = ReadExperimentConfig(config_path);
      if (exp_threads > 0) config.threads = exp_threads;
      if (parallel_runs > 0) config.parallel_runs = parallel_runs;
      if (!csv_path.empty()) config.output = csv_path;
      const auto rows = RunExperiment(config);
      if (config.output.empty()) {
        WriteCsv(std::cout, rows);
      } else {
        std::ofstream out(config.output);
        if (!out) {
          throw QosdError(ErrorKind::kParse, "cannot write " + config.output);
        }
        WriteCsv(out, rows);
      }
      return kExitOk;
    }
  } catch (const QosdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
