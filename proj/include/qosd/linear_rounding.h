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

#ifndef QOSD_LINEAR_ROUNDING_H_
#define QOSD_LINEAR_ROUNDING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qosd/budget.h"
#include "qosd/exec.h"
#include "qosd/instance.h"
#include "qosd/path.h"
#include "qosd/report.h"
#include "qosd/rng.h"

namespace qosd {

// Relative tolerance for "a path reaches T" under fractional lengths.
inline constexpr double kLpFeasibilityTolerance = 1e-6;
// A fractional component this close to an integer counts as integral.
inline constexpr double kIntegralSnap = 1e-9;

struct LpSolution {
  // x'_e in [0, b_e], one per edge.
  std::vector<double> fractional;
  double objective = 0.0;
  CandidateSet constraint_paths;
  int64_t pivots = 0;
  // Solve rounds of constraint generation; 1 for a direct solve.
  int64_t rounds = 0;
};

// min sum x_e  s.t.  sum_{e in p} beta_e x_e >= T - sum_{e in p} alpha_e for
// p in P, 0 <= x <= b. Throws kNonlinearWeights unless every weight is
// linear.
LpSolution SolveLp(const QosdInstance& instance, const CandidateSet& paths);

struct ConstraintOptions {
  // 0 means 10 * k * h.
  int64_t max_rounds = 0;
};

// Adds every pair's shortest path under beta x' + alpha that is still below
// T (1 - tolerance) and re-solves, until none remains. Throws
// kIterationCap past the round limit and kStall when a violated path is
// already a constraint.
LpSolution ConstraintGeneration(const QosdInstance& instance,
                                const ConstraintOptions& options = {},
                                const ExecContext& ctx = {});

// beta / (1 - e^-beta) * (h ln n - ln delta + 1).
double Eta(int node_count, int hop_bound, double beta_max, double delta);

// Integral components are kept; a fractional part rho becomes a ceil
// with probability min(1, eta * rho), else a floor.
BudgetVector RoundSolution(const QosdInstance& instance,
                           const std::vector<double>& fractional, double eta,
                           Rng& rng);

// Componentwise ceil after snapping near-integers.
BudgetVector CeilSolution(const QosdInstance& instance,
                          const std::vector<double>& fractional);

struct LrConfig {
  double delta = 0.2;
  uint64_t seed = 1;
  // Replaces the default inflation factor.
  std::optional<double> eta_override;
  int max_retries = 10;
  ConstraintOptions constraints;
};

// LP relaxation, randomized rounding with retries, then a ceil fallback.
RunReport RunLr(const QosdInstance& instance, const LrConfig& config,
                const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_LINEAR_ROUNDING_H_
