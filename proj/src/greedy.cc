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

#include "qosd/greedy.h"

#include <chrono>
#include <string>

#include "qosd/blocking_state.h"
#include "qosd/error.h"
#include "qosd/solver.h"

namespace qosd {

BlockResult BlockGreedy(const QosdInstance& instance, const CandidateSet& paths,
                        const ExecContext& ctx,
                        std::vector<GreedyStep>* trace) {
  BlockingState state(instance, paths.paths(),
                      BudgetVector(instance.edge_count()));
  const auto support = state.support();
  std::vector<int64_t> gains(support.size());
  int64_t steps = 0;
  while (!state.AllBlocked()) {
    ctx.deadline.Check("greedy blocking");
    ParallelFor(static_cast<int64_t>(support.size()), ctx, [&](int64_t i) {
      gains[i] =
          state.Headroom(support[i]) > 0 ? state.ChunkGain(support[i], 1) : -1;
    });
    int best = -1;
    for (int i = 0; i < static_cast<int>(support.size()); ++i) {
      if (gains[i] > 0 && (best < 0 || gains[i] > gains[best])) best = i;
    }
    if (best < 0) {
      // Every unit is flat here; step onto the first edge that still pays
      // off further up its table.
      for (int i = 0; i < static_cast<int>(support.size()); ++i) {
        if (gains[i] == 0 && state.CanGain(support[i])) {
          best = i;
          break;
        }
      }
    }
    if (best < 0) {
      throw QosdError(ErrorKind::kInfeasibleBox,
                      "no increment within the box raises D; gap " +
                          std::to_string(state.gap()));
    }
    if (trace) {
      trace->push_back(GreedyStep{support[best], gains[best], state.gap()});
    }
    state.Apply(support[best], 1);
    ++steps;
  }
  return BlockResult{state.x(), steps};
}

RunReport RunIg(const QosdInstance& instance, const IterativeOptions& options,
                const ExecContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  IterativeResult run = RunIterative(
      instance,
      [](const QosdInstance& inst, const CandidateSet& p,
         const ExecContext& c) { return BlockGreedy(inst, p, c); },
      options, ctx);
  RunReport report;
  report.algorithm = "ig";
  report.budget = std::move(run.x);
  report.outer_iterations = run.outer_iterations;
  report.inner_iterations = run.inner_iterations;
  report.extras["candidate_paths"] = std::to_string(run.candidates.size());
  CertifyReport(instance, report, start, ctx);
  return report;
}

}  // namespace qosd
