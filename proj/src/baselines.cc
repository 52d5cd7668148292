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

#include "qosd/baselines.h"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_set>

#include "qosd/error.h"
#include "qosd/framework.h"
#include "qosd/shortest_path.h"
#include "qosd/solver.h"

namespace qosd {
namespace {

struct VectorHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    uint64_t h = 0x84222325cbf29ce4ULL;
    for (int32_t x : v) {
      h = (h ^ static_cast<uint32_t>(x)) * 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
  }
};

class LatticeSearch {
 public:
  LatticeSearch(const QosdInstance& instance, std::span<const Path> paths,
                const OracleLimits& limits)
      : instance_(instance), paths_(paths), limits_(limits) {
    std::vector<int> slot(instance.edge_count(), -1);
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
      for (EdgeIndex e : paths[i].edges) {
        if (slot[e] < 0) {
          slot[e] = 0;
          support_.push_back(e);
        }
      }
    }
    std::sort(support_.begin(), support_.end());
    for (int s = 0; s < static_cast<int>(support_.size()); ++s) {
      slot[support_[s]] = s;
    }
    through_.resize(support_.size());
    path_slots_.resize(paths.size());
    lengths_.resize(paths.size());
    for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
      for (EdgeIndex e : paths[i].edges) {
        through_[slot[e]].push_back(i);
        path_slots_[i].push_back(slot[e]);
      }
      lengths_[i] = paths[i].initial_length;
    }
    values_.assign(support_.size(), 0);
    claimed_.assign(support_.size(), 0);
  }

  OracleResult Run() {
    for (int64_t depth = 0;; ++depth) {
      seen_.clear();
      if (Descend(depth)) {
        OracleResult result;
        result.opt_norm = depth;
        result.witness = BudgetVector(instance_.edge_count());
        for (int s = 0; s < static_cast<int>(support_.size()); ++s) {
          result.witness.Set(support_[s], values_[s]);
        }
        result.explored = explored_;
        return result;
      }
    }
  }

 private:
  bool Descend(int64_t remaining) {
    if (++explored_ > limits_.max_explored) {
      throw QosdError(ErrorKind::kBlownBudget,
                      "oracle explored more than " +
                          std::to_string(limits_.max_explored) +
                          " lattice points");
    }
    // Branch on the open path with the fewest raisable edges.
    int open = -1;
    int open_width = 0;
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
      if (lengths_[i] >= instance_.threshold()) continue;
      int width = 0;
      for (const int s : path_slots_[i]) {
        width += values_[s] < instance_.box(support_[s]);
      }
      if (open < 0 || width < open_width) {
        open = i;
        open_width = width;
      }
    }
    if (open < 0) return true;
    if (remaining == 0 || open_width == 0) return false;
    if (LowerBound(remaining) > remaining) return false;
    if (!seen_.insert(values_).second) return false;
    for (const int s : path_slots_[open]) {
      const EdgeIndex e = support_[s];
      if (values_[s] >= instance_.box(e)) continue;
      Bump(s, +1);
      if (Descend(remaining - 1)) return true;
      Bump(s, -1);
    }
    return false;
  }

  // Units needed by open paths that share no raisable edge, summed. Returns
  // remaining + 1 as soon as the bound exceeds the budget.
  int64_t LowerBound(int64_t remaining) {
    std::fill(claimed_.begin(), claimed_.end(), 0);
    int64_t total = 0;
    for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
      if (lengths_[i] >= instance_.threshold()) continue;
      bool disjoint = true;
      for (const int s : path_slots_[i]) {
        if (claimed_[s] && values_[s] < instance_.box(support_[s])) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      for (const int s : path_slots_[i]) claimed_[s] = 1;
      total += UnitsToBlock(i, remaining - total);
      if (total > remaining) return remaining + 1;
    }
    return total;
  }

  // Fewest units that raise path i to T, or budget + 1 if more are needed.
  int64_t UnitsToBlock(int i, int64_t budget) {
    const Weight gap = instance_.threshold() - lengths_[i];
    const int cap = static_cast<int>(budget);
    best_.assign(cap + 1, 0);
    for (const int s : path_slots_[i]) {
      const WeightFunction& f = instance_.weight(support_[s]);
      const int headroom = instance_.box(support_[s]) - values_[s];
      if (headroom <= 0) continue;
      next_ = best_;
      for (int k = 1; k <= cap; ++k) {
        for (int j = 1; j <= std::min(k, headroom); ++j) {
          const Weight rise = f.At(values_[s] + j) - f.At(values_[s]);
          next_[k] = std::max(next_[k], best_[k - j] + rise);
        }
      }
      best_.swap(next_);
    }
    for (int k = 0; k <= cap; ++k) {
      if (best_[k] >= gap) return k;
    }
    return budget + 1;
  }

  void Bump(int s, int direction) {
    const WeightFunction& f = instance_.weight(support_[s]);
    const int lower = direction > 0 ? values_[s] : values_[s] - 1;
    const Weight delta = f.Increment(lower) * direction;
    for (const int i : through_[s]) lengths_[i] += delta;
    values_[s] += direction;
  }

  const QosdInstance& instance_;
  std::span<const Path> paths_;
  OracleLimits limits_;
  std::vector<EdgeIndex> support_;
  std::vector<std::vector<int>> through_;
  std::vector<std::vector<int>> path_slots_;
  std::vector<Weight> lengths_;
  std::vector<int32_t> values_;
  std::vector<char> claimed_;
  std::vector<Weight> best_;
  std::vector<Weight> next_;
  std::unordered_set<std::vector<int32_t>, VectorHash> seen_;
  int64_t explored_ = 0;
};

void EnumerateFrom(const QosdInstance& instance, int pair_index, NodeId u,
                   Weight length, std::vector<char>& on_path,
                   std::vector<EdgeIndex>& edges, int64_t limit,
                   std::vector<Path>& out) {
  const NodePair& pair = instance.pair(pair_index);
  if (u == pair.sink) {
    if (static_cast<int64_t>(out.size()) >= limit) {
      throw QosdError(ErrorKind::kBlownBudget,
                      "more than " + std::to_string(limit) + " feasible paths");
    }
    out.push_back(MakePath(instance, edges, pair_index));
    return;
  }
  if (static_cast<int>(edges.size()) >= instance.hop_bound()) return;
  for (const Arc& arc : instance.graph().out_arcs(u)) {
    if (on_path[arc.neighbor]) continue;
    const Weight next = length + instance.weight(arc.edge).initial();
    if (next >= instance.threshold()) continue;
    on_path[arc.neighbor] = 1;
    edges.push_back(arc.edge);
    EnumerateFrom(instance, pair_index, arc.neighbor, next, on_path, edges,
                  limit, out);
    edges.pop_back();
    on_path[arc.neighbor] = 0;
  }
}

}  // namespace

RunReport RunCc(const QosdInstance& instance, const ExecContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  BudgetVector x(instance.edge_count());
  std::vector<int64_t> counts(instance.edge_count(), 0);
  int64_t rounds = 0;
  while (true) {
    ctx.deadline.Check("centrality cutting");
    const std::vector<Path> paths = PotentialPaths(instance, x, ctx);
    if (paths.empty()) break;
    std::fill(counts.begin(), counts.end(), 0);
    for (const Path& p : paths) {
      for (EdgeIndex e : p.edges) {
        if (x[e] < instance.box(e)) ++counts[e];
      }
    }
    const auto best = std::max_element(counts.begin(), counts.end());
    if (*best == 0) {
      throw QosdError(ErrorKind::kInfeasibleBox,
                      "open paths use only saturated edges");
    }
    const auto e = static_cast<EdgeIndex>(best - counts.begin());
    x.Set(e, instance.box(e));
    ++rounds;
  }
  RunReport report;
  report.algorithm = "cc";
  report.budget = std::move(x);
  report.outer_iterations = rounds;
  report.inner_iterations = rounds;
  CertifyReport(instance, report, start, ctx);
  return report;
}

std::vector<Path> EnumerateFeasiblePaths(const QosdInstance& instance,
                                         int64_t limit) {
  std::vector<Path> out;
  std::vector<char> on_path(instance.node_count(), 0);
  std::vector<EdgeIndex> edges;
  for (int i = 0; i < instance.pair_count(); ++i) {
    const NodeId s = instance.pair(i).source;
    on_path[s] = 1;
    EnumerateFrom(instance, i, s, 0, on_path, edges, limit, out);
    on_path[s] = 0;
  }
  return out;
}

OracleResult OracleOptForPaths(const QosdInstance& instance,
                               std::span<const Path> paths,
                               const OracleLimits& limits) {
  LatticeSearch search(instance, paths, limits);
  OracleResult result = search.Run();
  result.feasible_paths = static_cast<int64_t>(paths.size());
  return result;
}

OracleResult OracleOpt(const QosdInstance& instance,
                       const OracleLimits& limits) {
  const std::vector<Path> paths =
      EnumerateFeasiblePaths(instance, limits.max_paths);
  return OracleOptForPaths(instance, paths, limits);
}

RunReport RunOracle(const QosdInstance& instance, const OracleLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  OracleResult opt = OracleOpt(instance, limits);
  RunReport report;
  report.algorithm = "oracle";
  report.budget = std::move(opt.witness);
  report.outer_iterations = opt.opt_norm + 1;  // depths searched
  report.inner_iterations = opt.explored;
  report.extras["feasible_paths"] = std::to_string(opt.feasible_paths);
  report.extras["explored"] = std::to_string(opt.explored);
  CertifyReport(instance, report, start);
  return report;
}

}  // namespace qosd
