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

#ifndef QOSD_INSTANCE_H_
#define QOSD_INSTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qosd/graph.h"
#include "qosd/rational.h"
#include "qosd/weights.h"

namespace qosd {

struct NodePair {
  NodeId source;
  NodeId sink;

  friend bool operator==(const NodePair&, const NodePair&) = default;
};

// The tuple (G, f, b, S, T). The box b is implicit: b_e = weight(e).cap().
// Immutable after construction.
class QosdInstance {
 public:
  // Validates the structure and that x = b separates every pair; throws
  // kInvalidInstance or kInfeasibleBox.
  QosdInstance(Graph graph, std::vector<WeightFunction> weights,
               std::vector<NodePair> pairs, Weight threshold);

  const Graph& graph() const { return graph_; }
  std::span<const WeightFunction> weights() const { return weights_; }
  const WeightFunction& weight(EdgeIndex e) const { return weights_[e]; }
  std::span<const NodePair> pairs() const { return pairs_; }
  const NodePair& pair(int i) const { return pairs_[i]; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int node_count() const { return graph_.node_count(); }
  int edge_count() const { return graph_.edge_count(); }

  Weight threshold() const { return threshold_; }
  Weight min_initial_weight() const { return min_initial_weight_; }
  // ceil(T / w): no feasible path has more edges than this.
  int hop_bound() const { return hop_bound_; }
  int box(EdgeIndex e) const { return weights_[e].cap(); }
  int64_t box_norm() const { return box_norm_; }

  // True when every table is affine, whatever its model tag.
  bool AllLinear() const;
  Rational concave_ratio() const { return concave_ratio_; }

 private:
  Graph graph_;
  std::vector<WeightFunction> weights_;
  std::vector<NodePair> pairs_;
  Weight threshold_;
  Weight min_initial_weight_ = 1;
  int hop_bound_ = 0;
  int64_t box_norm_ = 0;
  Rational concave_ratio_;
};

// k distinct ordered pairs (s, t), s != t, uniform without replacement.
std::vector<NodePair> SamplePairs(const Graph& graph, int count, uint64_t seed);

// "qosd-instance v1" text format; see README.md for the schema.
void WriteInstance(std::ostream& out, const QosdInstance& instance,
                   bool directed = true);
QosdInstance ReadInstance(std::istream& in);
QosdInstance ReadInstanceFile(const std::string& path);

// Pair list: "s t" per line with labels from the original edge list.
std::vector<NodePair> ReadPairs(std::istream& in, const LoadedGraph& loaded);

}  // namespace qosd

#endif  // QOSD_INSTANCE_H_
