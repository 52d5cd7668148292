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

#include "qosd/instance.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>

#include "qosd/budget.h"
#include "qosd/error.h"
#include "qosd/rng.h"
#include "qosd/shortest_path.h"

namespace qosd {

QosdInstance::QosdInstance(Graph graph, std::vector<WeightFunction> weights,
                           std::vector<NodePair> pairs, Weight threshold)
    : graph_(std::move(graph)),
      weights_(std::move(weights)),
      pairs_(std::move(pairs)),
      threshold_(threshold) {
  if (threshold_ < 2) {
    throw QosdError(ErrorKind::kInvalidInstance, "threshold must be >= 2");
  }
  if (static_cast<int>(weights_.size()) != graph_.edge_count()) {
    throw QosdError(ErrorKind::kInvalidInstance,
                    "one weight function per edge required");
  }
  if (graph_.edge_count() == 0) {
    throw QosdError(ErrorKind::kInvalidInstance, "graph has no edges");
  }
  for (const NodePair& p : pairs_) {
    if (p.source < 0 || p.source >= graph_.node_count() || p.sink < 0 ||
        p.sink >= graph_.node_count()) {
      throw QosdError(ErrorKind::kInvalidInstance, "pair out of range");
    }
    if (p.source == p.sink) {
      throw QosdError(ErrorKind::kInvalidInstance, "pair source equals sink");
    }
  }
  min_initial_weight_ = weights_.front().initial();
  for (const WeightFunction& f : weights_) {
    min_initial_weight_ = std::min(min_initial_weight_, f.initial());
    box_norm_ += f.cap();
  }
  hop_bound_ = static_cast<int>((threshold_ + min_initial_weight_ - 1) /
                                min_initial_weight_);
  concave_ratio_ = ConcaveRatio(weights_);

  const std::vector<int> open =
      UnseparatedPairs(*this, BudgetVector::Box(*this));
  if (!open.empty()) {
    const NodePair& p = pairs_[open.front()];
    throw QosdError(ErrorKind::kInfeasibleBox,
                    "pair " + std::to_string(p.source) + "->" +
                        std::to_string(p.sink) +
                        " stays below the threshold at x = b");
  }
}

bool QosdInstance::AllLinear() const {
  return std::all_of(
      weights_.begin(), weights_.end(), [](const WeightFunction& f) {
        return f.model() == WeightModel::kLinear && f.linear().has_value();
      });
}

std::vector<NodePair> SamplePairs(const Graph& graph, int count,
                                  uint64_t seed) {
  const int64_t n = graph.node_count();
  if (n < 2 || count < 1) {
    throw QosdError(ErrorKind::kInvalidInstance,
                    "pair sampling needs n >= 2 and k >= 1");
  }
  const int64_t slots = n * (n - 1);
  if (count > slots) {
    throw QosdError(ErrorKind::kInvalidInstance,
                    "k = " + std::to_string(count) +
                        " exceeds n(n-1) = " + std::to_string(slots));
  }
  // Floyd's subset sampling; the output keeps the draw order.
  Rng rng(seed);
  std::unordered_set<int64_t> chosen;
  std::vector<int64_t> order;
  for (int64_t j = slots - count; j < slots; ++j) {
    const int64_t t = static_cast<int64_t>(rng.Below(j + 1));
    const int64_t slot = chosen.insert(t).second ? t : j;
    if (slot == j) chosen.insert(j);
    order.push_back(slot);
  }
  std::vector<NodePair> pairs;
  pairs.reserve(count);
  for (int64_t slot : order) {
    const NodeId s = static_cast<NodeId>(slot / (n - 1));
    const NodeId r = static_cast<NodeId>(slot % (n - 1));
    pairs.push_back(NodePair{s, r < s ? r : r + 1});
  }
  return pairs;
}

void WriteInstance(std::ostream& out, const QosdInstance& instance,
                   bool directed) {
  const Graph& g = instance.graph();
  out << "qosd-instance v1\n";
  out << "nodes " << g.node_count() << "\n";
  out << "directed " << (directed ? 1 : 0) << "\n";
  out << "threshold " << instance.threshold() << "\n";
  out << "edges " << g.edge_count() << "\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const WeightFunction& f = instance.weight(e);
    out << g.edge(e).src << ' ' << g.edge(e).dst << ' '
        << WeightModelName(f.model());
    if (f.linear()) out << ' ' << f.linear()->beta << ' ' << f.linear()->alpha;
    out << ' ' << f.cap();
    for (Weight w : f.table()) out << ' ' << w;
    out << "\n";
  }
  out << "pairs " << instance.pair_count() << "\n";
  for (const NodePair& p : instance.pairs()) {
    out << p.source << ' ' << p.sink << "\n";
  }
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line as a token stream.
  std::istringstream Next(const char* what) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return std::istringstream(line);
    }
    Fail(std::string("unexpected end of input, expected ") + what);
  }

  template <typename T>
  T Keyed(const char* key) {
    std::istringstream tokens = Next(key);
    std::string word;
    T value{};
    if (!(tokens >> word >> value) || word != key) {
      Fail(std::string("expected \"") + key + " <value>\"");
    }
    return value;
  }

  [[noreturn]] void Fail(const std::string& why) const {
    throw QosdError(ErrorKind::kParse,
                    "line " + std::to_string(line_number_) + ": " + why);
  }

 private:
  std::istream& in_;
  int64_t line_number_ = 0;
};

}  // namespace

QosdInstance ReadInstance(std::istream& in) {
  LineReader reader(in);
  {
    std::istringstream header = reader.Next("header");
    std::string name;
    std::string version;
    if (!(header >> name >> version) || name != "qosd-instance" ||
        version != "v1") {
      reader.Fail("expected header \"qosd-instance v1\"");
    }
  }
  const int nodes = reader.Keyed<int>("nodes");
  reader.Keyed<int>("directed");
  const Weight threshold = reader.Keyed<Weight>("threshold");
  const int edge_count = reader.Keyed<int>("edges");
  if (nodes < 0 || edge_count < 0) reader.Fail("negative count");

  std::vector<Edge> edges;
  std::vector<WeightFunction> weights;
  for (int i = 0; i < edge_count; ++i) {
    std::istringstream tokens = reader.Next("edge line");
    Edge e{};
    std::string tag;
    if (!(tokens >> e.src >> e.dst >> tag)) reader.Fail("bad edge line");
    const std::optional<WeightModel> model = ParseWeightModel(tag);
    if (!model) reader.Fail("unknown weight model \"" + tag + "\"");
    Weight beta = 0;
    Weight alpha = 0;
    if (*model == WeightModel::kLinear && !(tokens >> beta >> alpha)) {
      reader.Fail("linear edge needs beta and alpha");
    }
    int cap = -1;
    if (!(tokens >> cap) || cap < 0) reader.Fail("bad cap");
    std::vector<Weight> table(cap + 1);
    for (Weight& w : table) {
      if (!(tokens >> w)) reader.Fail("weight table shorter than cap + 1");
    }
    std::string extra;
    if (tokens >> extra) reader.Fail("trailing tokens on edge line");
    if (*model == WeightModel::kLinear) {
      WeightFunction f = WeightFunction::Linear(beta, alpha, cap);
      if (!std::equal(table.begin(), table.end(), f.table().begin())) {
        reader.Fail("linear table disagrees with its coefficients");
      }
      weights.push_back(std::move(f));
    } else {
      weights.emplace_back(std::move(table), *model);
    }
    edges.push_back(e);
  }
  const int pair_count = reader.Keyed<int>("pairs");
  std::vector<NodePair> pairs;
  for (int i = 0; i < pair_count; ++i) {
    std::istringstream tokens = reader.Next("pair line");
    NodePair p{};
    if (!(tokens >> p.source >> p.sink)) reader.Fail("bad pair line");
    pairs.push_back(p);
  }
  return QosdInstance(Graph(nodes, std::move(edges)), std::move(weights),
                      std::move(pairs), threshold);
}

QosdInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QosdError(ErrorKind::kParse, "cannot open " + path);
  return ReadInstance(in);
}

std::vector<NodePair> ReadPairs(std::istream& in, const LoadedGraph& loaded) {
  std::vector<NodePair> pairs;
  std::string line;
  int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == '#') continue;
    int64_t s = 0;
    int64_t t = 0;
    std::istringstream both(line);
    if (!(both >> s >> t)) {
      throw QosdError(
          ErrorKind::kParse,
          "pairs line " + std::to_string(line_number) + ": expected \"s t\"");
    }
    const auto cs = loaded.CompactId(s);
    const auto ct = loaded.CompactId(t);
    if (!cs || !ct) {
      throw QosdError(
          ErrorKind::kInvalidInstance,
          "pairs line " + std::to_string(line_number) + ": node not in graph");
    }
    pairs.push_back(NodePair{*cs, *ct});
  }
  return pairs;
}

}  // namespace qosd
