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

#ifndef QOSD_SOLVER_H_
#define QOSD_SOLVER_H_

#include <chrono>
#include <optional>
#include <string_view>

#include "qosd/baselines.h"
#include "qosd/exec.h"
#include "qosd/framework.h"
#include "qosd/instance.h"
#include "qosd/linear_rounding.h"
#include "qosd/report.h"
#include "qosd/sampling.h"

namespace qosd {

enum class Algorithm { kIg, kAt, kSa, kLr, kCc, kOracle };

std::string_view AlgorithmName(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

struct SolverParams {
  IterativeOptions iterative;
  SaConfig sa;
  LrConfig lr;
  OracleLimits oracle;
};

// Runs one algorithm. A `seed` in the params of randomized solvers is
// replaced by `seed` here so callers control reproducibility in one place.
RunReport Solve(const QosdInstance& instance, Algorithm algorithm,
                const SolverParams& params, uint64_t seed,
                const ExecContext& ctx = {});

// Fills norm and feasible from an independent separation check and records
// the elapsed time since `start`.
void CertifyReport(const QosdInstance& instance, RunReport& report,
                   std::chrono::steady_clock::time_point start,
                   const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_SOLVER_H_
