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

#include "qosd/adaptive.h"

#include <chrono>
#include <string>

#include "qosd/error.h"
#include "qosd/solver.h"

namespace qosd {

bool BetterChunk(const ChunkIncrement& a, const ChunkIncrement& b) {
  const __int128 lhs = static_cast<__int128>(a.gain) * b.amount;
  const __int128 rhs = static_cast<__int128>(b.gain) * a.amount;
  if (lhs != rhs) return lhs > rhs;
  if (a.amount != b.amount) return a.amount < b.amount;
  return a.edge < b.edge;
}

std::optional<ChunkIncrement> BestChunk(const BlockingState& state,
                                        const ExecContext& ctx) {
  const auto support = state.support();
  std::vector<ChunkIncrement> per_edge(support.size());
  ParallelFor(static_cast<int64_t>(support.size()), ctx, [&](int64_t i) {
    const EdgeIndex e = support[i];
    ChunkIncrement best;
    const int headroom = state.Headroom(e);
    for (int z = 1; z <= headroom; ++z) {
      const ChunkIncrement c{e, z, state.ChunkGain(e, z)};
      if (c.gain > 0 && (best.amount == 0 || BetterChunk(c, best))) best = c;
    }
    per_edge[i] = best;
  });
  std::optional<ChunkIncrement> best;
  for (const ChunkIncrement& c : per_edge) {
    if (c.amount > 0 && (!best || BetterChunk(c, *best))) best = c;
  }
  return best;
}

BlockResult BlockAdaptive(const QosdInstance& instance,
                          const CandidateSet& paths, const ExecContext& ctx,
                          std::vector<ChunkIncrement>* trace) {
  BlockingState state(instance, paths.paths(),
                      BudgetVector(instance.edge_count()));
  int64_t steps = 0;
  while (!state.AllBlocked()) {
    ctx.deadline.Check("adaptive trading");
    const std::optional<ChunkIncrement> chunk = BestChunk(state, ctx);
    if (!chunk) {
      throw QosdError(ErrorKind::kInfeasibleBox,
                      "no chunk within the box raises D; gap " +
                          std::to_string(state.gap()));
    }
    if (trace) trace->push_back(*chunk);
    state.Apply(chunk->edge, chunk->amount);
    ++steps;
  }
  return BlockResult{state.x(), steps};
}

RunReport RunAt(const QosdInstance& instance, const IterativeOptions& options,
                const ExecContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  IterativeResult run = RunIterative(
      instance,
      [](const QosdInstance& inst, const CandidateSet& p,
         const ExecContext& c) { return BlockAdaptive(inst, p, c); },
      options, ctx);
  RunReport report;
  report.algorithm = "at";
  report.budget = std::move(run.x);
  report.outer_iterations = run.outer_iterations;
  report.inner_iterations = run.inner_iterations;
  report.extras["candidate_paths"] = std::to_string(run.candidates.size());
  CertifyReport(instance, report, start, ctx);
  return report;
}

}  // namespace qosd
