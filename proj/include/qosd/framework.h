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

#ifndef QOSD_FRAMEWORK_H_
#define QOSD_FRAMEWORK_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "qosd/budget.h"
#include "qosd/exec.h"
#include "qosd/instance.h"
#include "qosd/path.h"

namespace qosd {

struct BlockResult {
  BudgetVector x;
  // Increments applied (units for IG, chunks for AT).
  int64_t steps = 0;
};

// Finds x, starting from zero, with every path of P blocked.
using Blocker = std::function<BlockResult(
    const QosdInstance&, const CandidateSet&, const ExecContext&)>;

// One shortest path per pair that is still below T under x, in pair order.
std::vector<Path> PotentialPaths(const QosdInstance& instance,
                                 const BudgetVector& x,
                                 const ExecContext& ctx = {});

struct IterativeOptions {
  // 0 means 10 * k * h.
  int64_t max_outer_iterations = 0;
};

struct IterativeResult {
  BudgetVector x;
  CandidateSet candidates;
  int64_t outer_iterations = 0;
  int64_t inner_iterations = 0;
  // |P| after each outer iteration.
  std::vector<int> candidate_sizes;
};

// Grows a candidate path set and re-blocks it from x = 0 until every pair
// is separated. Throws kStall when a round finds no new path and
// kIterationCap when the outer loop runs past its limit.
IterativeResult RunIterative(const QosdInstance& instance,
                             const Blocker& blocker,
                             const IterativeOptions& options = {},
                             const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_FRAMEWORK_H_
