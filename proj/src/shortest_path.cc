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

#include "qosd/shortest_path.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

namespace qosd {

std::optional<Path> ShortestPath(const QosdInstance& instance,
                                 const BudgetVector& x, int pair_index,
                                 const SearchOptions& options) {
  const Graph& g = instance.graph();
  const NodePair& pair = instance.pair(pair_index);
  const Weight threshold = instance.threshold();
  constexpr Weight kUnreached = std::numeric_limits<Weight>::max();

  std::vector<Weight> dist(g.node_count(), kUnreached);
  std::vector<EdgeIndex> pred(g.node_count(), -1);
  std::vector<char> settled(g.node_count(), 0);
  using Entry = std::pair<Weight, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[pair.source] = 0;
  heap.emplace(0, pair.source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    if (options.prune_at_threshold && d >= threshold) break;
    settled[u] = 1;
    if (u == pair.sink) break;
    for (const Arc& arc : g.out_arcs(u)) {
      const NodeId v = arc.neighbor;
      if (settled[v]) continue;
      const Weight nd = d + instance.weight(arc.edge).At(x[arc.edge]);
      if (options.prune_at_threshold && nd >= threshold) continue;
      if (nd < dist[v]) {
        dist[v] = nd;
        pred[v] = arc.edge;
        heap.emplace(nd, v);
      } else if (nd == dist[v] && arc.edge < pred[v]) {
        pred[v] = arc.edge;
      }
    }
  }
  if (dist[pair.sink] >= threshold) return std::nullopt;

  Path path;
  path.pair_index = pair_index;
  for (NodeId v = pair.sink; v != pair.source; v = g.edge(pred[v]).src) {
    path.edges.push_back(pred[v]);
  }
  std::reverse(path.edges.begin(), path.edges.end());
  path.nodes.push_back(pair.source);
  for (EdgeIndex e : path.edges) {
    path.nodes.push_back(g.edge(e).dst);
    path.initial_length += instance.weight(e).initial();
  }
  return path;
}

std::vector<int> UnseparatedPairs(const QosdInstance& instance,
                                  const BudgetVector& x,
                                  const ExecContext& ctx) {
  std::vector<char> open(instance.pair_count(), 0);
  ParallelFor(instance.pair_count(), ctx, [&](int64_t i) {
    open[i] = ShortestPath(instance, x, static_cast<int>(i)).has_value();
  });
  std::vector<int> result;
  for (int i = 0; i < instance.pair_count(); ++i) {
    if (open[i]) result.push_back(i);
  }
  return result;
}

bool IsFeasibleSolution(const QosdInstance& instance, const BudgetVector& x,
                        const ExecContext& ctx) {
  return x.WithinBox(instance) && UnseparatedPairs(instance, x, ctx).empty();
}

}  // namespace qosd
