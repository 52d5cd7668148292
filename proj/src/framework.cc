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

#include "qosd/framework.h"

#include <optional>
#include <string>
#include <utility>

#include "qosd/error.h"
#include "qosd/shortest_path.h"

namespace qosd {

std::vector<Path> PotentialPaths(const QosdInstance& instance,
                                 const BudgetVector& x,
                                 const ExecContext& ctx) {
  std::vector<std::optional<Path>> found(instance.pair_count());
  ParallelFor(instance.pair_count(), ctx, [&](int64_t i) {
    found[i] = ShortestPath(instance, x, static_cast<int>(i));
  });
  std::vector<Path> paths;
  for (auto& p : found) {
    if (p) paths.push_back(std::move(*p));
  }
  return paths;
}

IterativeResult RunIterative(const QosdInstance& instance,
                             const Blocker& blocker,
                             const IterativeOptions& options,
                             const ExecContext& ctx) {
  const int64_t cap = options.max_outer_iterations > 0
                          ? options.max_outer_iterations
                          : 10LL * instance.pair_count() * instance.hop_bound();
  IterativeResult result;
  result.x = BudgetVector(instance.edge_count());
  while (true) {
    ctx.deadline.Check("iterative framework");
    std::vector<Path> fresh = PotentialPaths(instance, result.x, ctx);
    if (fresh.empty()) break;
    int added = 0;
    for (Path& p : fresh) added += result.candidates.Insert(std::move(p));
    if (added == 0) {
      throw QosdError(ErrorKind::kStall,
                      "blocked candidate set re-proposed only known paths");
    }
    if (result.outer_iterations == cap) {
      throw QosdError(
          ErrorKind::kIterationCap,
          "outer loop exceeded " + std::to_string(cap) + " iterations with " +
              std::to_string(result.candidates.size()) + " candidate paths");
    }
    ++result.outer_iterations;
    result.candidate_sizes.push_back(result.candidates.size());
    BlockResult block = blocker(instance, result.candidates, ctx);
    result.x = std::move(block.x);
    result.inner_iterations += block.steps;
  }
  return result;
}

}  // namespace qosd
