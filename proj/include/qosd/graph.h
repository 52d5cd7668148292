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

#ifndef QOSD_GRAPH_H_
#define QOSD_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qosd {

using NodeId = int32_t;
using EdgeIndex = int32_t;

struct Edge {
  NodeId src;
  NodeId dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  NodeId neighbor;
  EdgeIndex edge;
};

// Immutable directed graph. Edge indices are positions in the edge list and
// stay stable for the lifetime of the graph. Adjacency lists are ordered by
// edge index.
class Graph {
 public:
  Graph() = default;
  // Throws kInvalidInstance on out-of-range ids, self-loops or duplicates.
  Graph(int node_count, std::vector<Edge> edges);

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int max_out_degree() const { return max_out_degree_; }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Arc> out_arcs(NodeId u) const {
    return {out_arcs_.data() + out_offsets_[u],
            out_arcs_.data() + out_offsets_[u + 1]};
  }
  std::span<const Arc> in_arcs(NodeId v) const {
    return {in_arcs_.data() + in_offsets_[v],
            in_arcs_.data() + in_offsets_[v + 1]};
  }

  std::optional<EdgeIndex> FindEdge(NodeId src, NodeId dst) const;

 private:
  int node_count_ = 0;
  int max_out_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<int64_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<int64_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
};

struct LoadedGraph {
  Graph graph;
  // original_ids[compact id] is the label that appeared in the file.
  std::vector<int64_t> original_ids;

  // Compact id for an original label, if the label occurs in the graph.
  std::optional<NodeId> CompactId(int64_t original) const;
};

// SNAP-style edge list: "src dst" per line, '#' comments, blank lines
// ignored. Ids are compacted to [0, n) in ascending label order. Self-loops
// and duplicate edges are dropped. Undirected input inserts both directions.
LoadedGraph LoadEdgeList(std::istream& in, bool directed);
LoadedGraph LoadEdgeListFile(const std::string& path, bool directed);

// G(n, rho) on ordered pairs: each (u, v), u != v, is present independently
// with probability rho. Edges are listed in row-major (u, v) order.
Graph GenerateErdosRenyi(int node_count, double rho, uint64_t seed);

}  // namespace qosd

#endif  // QOSD_GRAPH_H_
