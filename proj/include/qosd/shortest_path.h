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

#ifndef QOSD_SHORTEST_PATH_H_
#define QOSD_SHORTEST_PATH_H_

#include <optional>
#include <vector>

#include "qosd/budget.h"
#include "qosd/exec.h"
#include "qosd/instance.h"
#include "qosd/path.h"

namespace qosd {

struct SearchOptions {
  // Stop expanding once the smallest tentative distance reaches T. Only
  // disabled by tests that check the prune is sound.
  bool prune_at_threshold = true;
};

// Shortest s-t path under edge lengths f_e(x_e), returned only when its
// length is below T. Among tied paths the result is canonical: every node's
// predecessor is its lowest-index tight in-edge.
std::optional<Path> ShortestPath(const QosdInstance& instance,
                                 const BudgetVector& x, int pair_index,
                                 const SearchOptions& options = {});

// Indices of pairs that still have a path shorter than T, ascending. Empty
// iff x is a feasible solution.
std::vector<int> UnseparatedPairs(const QosdInstance& instance,
                                  const BudgetVector& x,
                                  const ExecContext& ctx = {});

// Feasible solution check used to certify every report: x <= b and every
// pair separated.
bool IsFeasibleSolution(const QosdInstance& instance, const BudgetVector& x,
                        const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_SHORTEST_PATH_H_
