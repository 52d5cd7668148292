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

#ifndef QOSD_HARNESS_H_
#define QOSD_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qosd/graph.h"
#include "qosd/instance.h"
#include "qosd/report.h"
#include "qosd/solver.h"
#include "qosd/weights.h"

namespace qosd {

enum class SourceKind { kEr, kEdgeList, kInstanceFile };

struct InstanceSpec {
  SourceKind source = SourceKind::kEr;
  int nodes = 240;
  double rho = 0.1;
  // Edge list or instance file.
  std::string path;
  bool directed = true;
  // Optional pair list with original labels; otherwise `pair_count` pairs
  // are sampled.
  std::string pairs_path;
  int pair_count = 10;
  WeightRecipe recipe = WeightRecipe::kLinear;
  WeightOptions weight_options;
};

// Builds one instance. `seed` drives the generator, heterogeneous model
// assignment and pair sampling through independent derived streams. An
// instance file is returned as stored and ignores `threshold`.
QosdInstance BuildInstance(const InstanceSpec& spec, Weight threshold,
                           uint64_t seed,
                           const LoadedGraph* preloaded = nullptr);

struct ExperimentConfig {
  InstanceSpec instance;
  std::vector<Weight> thresholds{3};
  std::vector<Algorithm> algorithms{Algorithm::kIg, Algorithm::kAt,
                                    Algorithm::kSa, Algorithm::kLr,
                                    Algorithm::kCc};
  SolverParams params;
  int repetitions = 5;
  uint64_t master_seed = 1;
  double time_limit_s = 86400.0;
  // Runs the oracle per instance and adds opt=<OPT> to every row.
  bool with_oracle = false;
  int threads = 1;
  int parallel_runs = 1;
  std::string output;
};

// "qosd-config v1" key = value text; see README.md for the keys.
ExperimentConfig ParseExperimentConfig(std::istream& in);
ExperimentConfig ReadExperimentConfig(const std::string& path);

// Stream index used for the shared instance of a (T, repetition) cell.
inline constexpr uint64_t kInstanceStream = 1000;

// MixSeed({master, T, repetition, stream}); the stream of an algorithm is
// its position in the Algorithm enum.
uint64_t DeriveRunSeed(uint64_t master, Weight threshold, int repetition,
                       uint64_t stream);

struct ExperimentRow {
  std::string algorithm;
  int n = 0;
  int m = 0;
  std::string model;
  Weight threshold = 0;
  int k = 0;
  uint64_t seed = 0;
  int64_t norm = 0;
  int64_t outer_iterations = 0;
  int64_t inner_iterations = 0;
  double wall_time_s = 0.0;
  bool feasible = false;
  // Includes status=ok|timeout|<error kind>.
  std::map<std::string, std::string> extras;
  BudgetVector budget;
};

// Rows in config order: T, then repetition, then (oracle) and algorithms.
std::vector<ExperimentRow> RunExperiment(const ExperimentConfig& config);

inline constexpr const char* kCsvHeader =
    "algorithm,n,m,model,T,k,seed,norm,outer_iters,inner_iters,wall_time_s,"
    "feasible,extras";

void WriteCsv(std::ostream& out, const std::vector<ExperimentRow>& rows);

// key=value pairs joined by ';' in key order.
std::string FormatExtras(const std::map<std::string, std::string>& extras);

}  // namespace qosd

#endif  // QOSD_HARNESS_H_
