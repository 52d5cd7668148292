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

#ifndef QOSD_BASELINES_H_
#define QOSD_BASELINES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "qosd/budget.h"
#include "qosd/exec.h"
#include "qosd/instance.h"
#include "qosd/path.h"
#include "qosd/report.h"

namespace qosd {

// Centrality cutting: saturate the edge that appears most often on the
// current shortest paths of unseparated pairs, until all are separated.
RunReport RunCc(const QosdInstance& instance, const ExecContext& ctx = {});

// Every simple path of every pair with initial length < T, pair by pair in
// DFS order over the adjacency lists. Throws kBlownBudget past `limit`.
std::vector<Path> EnumerateFeasiblePaths(const QosdInstance& instance,
                                         int64_t limit = 1000000);

struct OracleLimits {
  int64_t max_paths = 1000000;
  // Lattice points visited across all depths.
  int64_t max_explored = 20000000;
};

struct OracleResult {
  int64_t opt_norm = 0;
  BudgetVector witness;
  int64_t feasible_paths = 0;
  int64_t explored = 0;
};

// Minimum-norm x <= b blocking `paths`, by iterative deepening on the norm.
// Each level branches on the edges of the first path still open, so edges
// off every path stay at 0.
OracleResult OracleOptForPaths(const QosdInstance& instance,
                               std::span<const Path> paths,
                               const OracleLimits& limits = {});

// Exact OPT over all feasible paths.
OracleResult OracleOpt(const QosdInstance& instance,
                       const OracleLimits& limits = {});

RunReport RunOracle(const QosdInstance& instance,
                    const OracleLimits& limits = {});

}  // namespace qosd

#endif  // QOSD_BASELINES_H_
