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

#include "qosd/solver.h"

#include <array>

#include "qosd/adaptive.h"
#include "qosd/greedy.h"
#include "qosd/shortest_path.h"

namespace qosd {
namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 6> kNames = {{
    {Algorithm::kIg, "ig"},
    {Algorithm::kAt, "at"},
    {Algorithm::kSa, "sa"},
    {Algorithm::kLr, "lr"},
    {Algorithm::kCc, "cc"},
    {Algorithm::kOracle, "oracle"},
}};

}  // namespace

std::string_view AlgorithmName(Algorithm algorithm) {
  for (const auto& [a, name] : kNames) {
    if (a == algorithm) return name;
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

RunReport Solve(const QosdInstance& instance, Algorithm algorithm,
                const SolverParams& params, uint64_t seed,
                const ExecContext& ctx) {
  RunReport report;
  switch (algorithm) {
    case Algorithm::kIg:
      report = RunIg(instance, params.iterative, ctx);
      break;
    case Algorithm::kAt:
      report = RunAt(instance, params.iterative, ctx);
      break;
    case Algorithm::kSa: {
      SaConfig config = params.sa;
      config.seed = seed;
      report = RunSa(instance, config, ctx);
      break;
    }
    case Algorithm::kLr: {
      LrConfig config = params.lr;
      config.seed = seed;
      report = RunLr(instance, config, ctx);
      break;
    }
    case Algorithm::kCc:
      report = RunCc(instance, ctx);
      break;
    case Algorithm::kOracle:
      report = RunOracle(instance, params.oracle);
      break;
  }
  report.seed = seed;
  return report;
}

void CertifyReport(const QosdInstance& instance, RunReport& report,
                   std::chrono::steady_clock::time_point start,
                   const ExecContext& ctx) {
  report.norm = report.budget.norm();
  report.feasible = IsFeasibleSolution(instance, report.budget, ctx);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
}

}  // namespace qosd
