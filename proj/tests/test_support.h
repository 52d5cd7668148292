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

#ifndef QOSD_TESTS_TEST_SUPPORT_H_
#define QOSD_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qosd/budget.h"
#include "qosd/graph.h"
#include "qosd/instance.h"
#include "qosd/path.h"
#include "qosd/rng.h"
#include "qosd/weights.h"

namespace qosd::testing {

// 0->1->3 and 0->2->3. Edge indices: (0,1)=0, (1,3)=1, (0,2)=2, (2,3)=3.
inline Graph DiamondGraph() {
  return Graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
}

// The diamond with f(x) = x + 1, b = 2 on every edge, T = 3, S = {(0,3)}.
inline QosdInstance DiamondInstance(Weight threshold = 3) {
  Graph g = DiamondGraph();
  std::vector<WeightFunction> w(4, MakeLinearWeight(threshold));
  return QosdInstance(std::move(g), std::move(w), {{0, 3}}, threshold);
}

struct RandomSpec {
  int nodes = 8;
  double rho = 0.3;
  WeightRecipe recipe = WeightRecipe::kLinear;
  Weight threshold = 3;
  int pairs = 2;
  WeightOptions options;
};

inline QosdInstance RandomInstance(const RandomSpec& spec, uint64_t seed) {
  Graph g = GenerateErdosRenyi(spec.nodes, spec.rho, MixSeed({seed, 1}));
  std::vector<WeightFunction> w = BuildWeights(
      g, spec.recipe, spec.threshold, spec.options, MixSeed({seed, 2}));
  std::vector<NodePair> pairs = SamplePairs(g, spec.pairs, MixSeed({seed, 3}));
  return QosdInstance(std::move(g), std::move(w), std::move(pairs),
                      spec.threshold);
}

// Every simple path of every pair, no length pruning.
inline void AllSimplePathsFrom(const QosdInstance& inst, int pair, NodeId u,
                               std::vector<char>& on,
                               std::vector<EdgeIndex>& edges,
                               std::vector<Path>& out) {
  if (u == inst.pair(pair).sink) {
    out.push_back(MakePath(inst, edges, pair));
    return;
  }
  for (const Arc& a : inst.graph().out_arcs(u)) {
    if (on[a.neighbor]) continue;
    on[a.neighbor] = 1;
    edges.push_back(a.edge);
    AllSimplePathsFrom(inst, pair, a.neighbor, on, edges, out);
    edges.pop_back();
    on[a.neighbor] = 0;
  }
}

inline std::vector<Path> AllSimplePaths(const QosdInstance& inst, int pair) {
  std::vector<Path> out;
  std::vector<char> on(inst.node_count(), 0);
  std::vector<EdgeIndex> edges;
  on[inst.pair(pair).source] = 1;
  AllSimplePathsFrom(inst, pair, inst.pair(pair).source, on, edges, out);
  return out;
}

// Minimum length over all simple paths of the pair, exhaustively.
inline std::optional<Weight> BruteShortest(const QosdInstance& inst,
                                           const BudgetVector& x, int pair) {
  std::optional<Weight> best;
  for (const Path& p : AllSimplePaths(inst, pair)) {
    const Weight len = PathLength(inst, p, x);
    if (!best || len < *best) best = len;
  }
  return best;
}

// Uniform random x with 0 <= x <= b.
template <typename RngT>
BudgetVector RandomBudget(const QosdInstance& inst, RngT& rng) {
  BudgetVector x(inst.edge_count());
  for (EdgeIndex e = 0; e < inst.edge_count(); ++e) {
    x.Set(e, static_cast<int32_t>(rng.Below(inst.box(e) + 1)));
  }
  return x;
}

}  // namespace qosd::testing

#endif  // QOSD_TESTS_TEST_SUPPORT_H_
