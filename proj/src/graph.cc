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

#include "qosd/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "qosd/error.h"
#include "qosd/rng.h"

namespace qosd {

Graph::Graph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ < 0) {
    throw QosdError(ErrorKind::kInvalidInstance, "negative node count");
  }
  std::vector<int64_t> out_degree(node_count_, 0);
  std::vector<int64_t> in_degree(node_count_, 0);
  std::set<std::pair<NodeId, NodeId>> seen;
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= node_count_ || e.dst < 0 ||
        e.dst >= node_count_) {
      throw QosdError(ErrorKind::kInvalidInstance,
                      "edge endpoint out of range");
    }
    if (e.src == e.dst) {
      throw QosdError(ErrorKind::kInvalidInstance,
                      "self-loop on node " + std::to_string(e.src));
    }
    if (!seen.emplace(e.src, e.dst).second) {
      throw QosdError(ErrorKind::kInvalidInstance,
                      "duplicate edge " + std::to_string(e.src) + "->" +
                          std::to_string(e.dst));
    }
    ++out_degree[e.src];
    ++in_degree[e.dst];
  }
  out_offsets_.assign(node_count_ + 1, 0);
  in_offsets_.assign(node_count_ + 1, 0);
  for (int u = 0; u < node_count_; ++u) {
    out_offsets_[u + 1] = out_offsets_[u] + out_degree[u];
    in_offsets_[u + 1] = in_offsets_[u] + in_degree[u];
    max_out_degree_ =
        std::max(max_out_degree_, static_cast<int>(out_degree[u]));
  }
  out_arcs_.resize(edges_.size());
  in_arcs_.resize(edges_.size());
  std::vector<int64_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<int64_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (EdgeIndex i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    out_arcs_[out_fill[e.src]++] = Arc{e.dst, i};
    in_arcs_[in_fill[e.dst]++] = Arc{e.src, i};
  }
}

std::optional<EdgeIndex> Graph::FindEdge(NodeId src, NodeId dst) const {
  for (const Arc& a : out_arcs(src)) {
    if (a.neighbor == dst) return a.edge;
  }
  return std::nullopt;
}

std::optional<NodeId> LoadedGraph::CompactId(int64_t original) const {
  auto it =
      std::lower_bound(original_ids.begin(), original_ids.end(), original);
  if (it == original_ids.end() || *it != original) return std::nullopt;
  return static_cast<NodeId>(it - original_ids.begin());
}

namespace {

bool ParseInt(std::string_view token, int64_t& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void ParseFailure(int64_t line_number, const std::string& why) {
  throw QosdError(ErrorKind::kParse,
                  "line " + std::to_string(line_number) + ": " + why);
}

}  // namespace

LoadedGraph LoadEdgeList(std::istream& in, bool directed) {
  std::vector<std::pair<int64_t, int64_t>> raw;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#') continue;
    std::string second;
    std::string extra;
    int64_t src = 0;
    int64_t dst = 0;
    if (!(tokens >> second) || (tokens >> extra)) {
      ParseFailure(line_number, "expected \"src dst\"");
    }
    if (!ParseInt(first, src) || !ParseInt(second, dst)) {
      ParseFailure(line_number, "node ids must be integers");
    }
    raw.emplace_back(src, dst);
  }

  LoadedGraph loaded;
  for (const auto& [src, dst] : raw) {
    loaded.original_ids.push_back(src);
    loaded.original_ids.push_back(dst);
  }
  std::sort(loaded.original_ids.begin(), loaded.original_ids.end());
  loaded.original_ids.erase(
      std::unique(loaded.original_ids.begin(), loaded.original_ids.end()),
      loaded.original_ids.end());
  if (loaded.original_ids.empty()) {
    throw QosdError(ErrorKind::kInvalidInstance, "edge list has no edges");
  }

  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  auto insert = [&](NodeId u, NodeId v) {
    if (u != v && seen.emplace(u, v).second) edges.push_back(Edge{u, v});
  };
  for (const auto& [src, dst] : raw) {
    const NodeId u = *loaded.CompactId(src);
    const NodeId v = *loaded.CompactId(dst);
    insert(u, v);
    if (!directed) insert(v, u);
  }
  if (edges.empty()) {
    throw QosdError(ErrorKind::kInvalidInstance,
                    "edge list has only self-loops");
  }
  loaded.graph =
      Graph(static_cast<int>(loaded.original_ids.size()), std::move(edges));
  return loaded;
}

LoadedGraph LoadEdgeListFile(const std::string& path, bool directed) {
  std::ifstream in(path);
  if (!in) throw QosdError(ErrorKind::kParse, "cannot open " + path);
  return LoadEdgeList(in, directed);
}

Graph GenerateErdosRenyi(int node_count, double rho, uint64_t seed) {
  if (node_count < 2 || !(rho > 0.0) || rho > 1.0) {
    throw QosdError(ErrorKind::kInvalidInstance,
                    "Erdos-Renyi needs n >= 2 and 0 < rho <= 1");
  }
  const int64_t n = node_count;
  const int64_t slots = n * (n - 1);
  auto edge_at = [n](int64_t slot) {
    const NodeId u = static_cast<NodeId>(slot / (n - 1));
    const NodeId r = static_cast<NodeId>(slot % (n - 1));
    return Edge{u, r < u ? r : r + 1};
  };
  std::vector<Edge> edges;
  if (rho == 1.0) {
    edges.reserve(slots);
    for (int64_t s = 0; s < slots; ++s) edges.push_back(edge_at(s));
  } else {
    // Geometric skipping between successes of independent Bernoulli trials.
    Rng rng(seed);
    const double log_miss = std::log1p(-rho);
    int64_t slot = -1;
    while (true) {
      const double u = rng.Uniform();
      const double skip = std::floor(std::log1p(-u) / log_miss);
      if (skip >= static_cast<double>(slots - slot)) break;
      slot += 1 + static_cast<int64_t>(skip);
      if (slot >= slots) break;
      edges.push_back(edge_at(slot));
    }
  }
  return Graph(node_count, std::move(edges));
}

}  // namespace qosd
