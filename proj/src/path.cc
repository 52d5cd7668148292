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

#include "qosd/path.h"

#include <algorithm>
#include <utility>

#include "qosd/error.h"

namespace qosd {

Path MakePath(const QosdInstance& instance, std::vector<EdgeIndex> edges,
              int pair_index) {
  const Graph& g = instance.graph();
  Path path;
  path.pair_index = pair_index;
  if (edges.empty()) {
    throw QosdError(ErrorKind::kInvalidInstance, "empty path");
  }
  for (EdgeIndex e : edges) {
    if (e < 0 || e >= g.edge_count()) {
      throw QosdError(ErrorKind::kInvalidInstance, "edge index out of range");
    }
  }
  path.nodes.push_back(g.edge(edges.front()).src);
  for (EdgeIndex e : edges) {
    if (g.edge(e).src != path.nodes.back()) {
      throw QosdError(ErrorKind::kInvalidInstance, "edges are not consecutive");
    }
    path.nodes.push_back(g.edge(e).dst);
    path.initial_length += instance.weight(e).initial();
  }
  std::vector<NodeId> sorted = path.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw QosdError(ErrorKind::kInvalidInstance, "path repeats a node");
  }
  path.edges = std::move(edges);
  return path;
}

bool CandidateSet::Insert(Path path) {
  if (!keys_.insert(path.edges).second) return false;
  paths_.push_back(std::move(path));
  return true;
}

Weight PathLength(const QosdInstance& instance, const Path& path,
                  const BudgetVector& x) {
  Weight length = 0;
  for (EdgeIndex e : path.edges) length += instance.weight(e).At(x[e]);
  return length;
}

Weight RValue(const QosdInstance& instance, const Path& path,
              const BudgetVector& x) {
  return std::min(instance.threshold(), PathLength(instance, path, x));
}

int64_t DValue(const QosdInstance& instance, std::span<const Path> paths,
               const BudgetVector& x) {
  int64_t total = 0;
  for (const Path& p : paths) total += RValue(instance, p, x);
  return total;
}

bool AllBlocked(const QosdInstance& instance, std::span<const Path> paths,
                const BudgetVector& x) {
  return std::all_of(paths.begin(), paths.end(), [&](const Path& p) {
    return PathLength(instance, p, x) >= instance.threshold();
  });
}

}  // namespace qosd
