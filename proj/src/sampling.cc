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

#include "qosd/sampling.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>

#include "qosd/blocking_state.h"
#include "qosd/error.h"
#include "qosd/framework.h"
#include "qosd/shortest_path.h"
#include "qosd/solver.h"

namespace qosd {
namespace {

constexpr Weight kUnreached = std::numeric_limits<Weight>::max();
constexpr int64_t kBlockSize = 256;
constexpr int kMaxEscalations = 3;

}  // namespace

SpTree BuildSpTree(const QosdInstance& instance, const BudgetVector& x,
                   NodeId sink) {
  const Graph& g = instance.graph();
  SpTree tree;
  tree.sink = sink;
  tree.parent.assign(g.node_count(), kNoParent);
  tree.distance.assign(g.node_count(), kUnreached);
  std::vector<char> settled(g.node_count(), 0);
  using Entry = std::pair<Weight, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  tree.distance[sink] = 0;
  heap.emplace(0, sink);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    for (const Arc& arc : g.in_arcs(v)) {
      const NodeId u = arc.neighbor;
      const Weight nd = d + instance.weight(arc.edge).At(x[arc.edge]);
      if (nd < tree.distance[u]) {
        tree.distance[u] = nd;
        heap.emplace(nd, u);
      }
    }
  }
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (u == sink || tree.distance[u] == kUnreached) continue;
    for (const Arc& arc : g.out_arcs(u)) {
      const NodeId v = arc.neighbor;
      if (tree.distance[v] == kUnreached) continue;
      const Weight via =
          tree.distance[v] + instance.weight(arc.edge).At(x[arc.edge]);
      if (via == tree.distance[u] &&
          (tree.parent[u] == kNoParent || v < tree.parent[u])) {
        tree.parent[u] = v;
      }
    }
  }
  return tree;
}

std::vector<std::pair<NodeId, double>> StepDistribution(
    const Graph& graph, NodeId u, std::span<const char> on_walk,
    std::optional<NodeId> parent, double alpha) {
  std::vector<std::pair<NodeId, double>> out;
  bool has_parent = false;
  for (const Arc& arc : graph.out_arcs(u)) {
    if (on_walk[arc.neighbor]) continue;
    out.emplace_back(arc.neighbor, 0.0);
    if (parent && arc.neighbor == *parent) has_parent = true;
  }
  if (out.empty()) return out;
  const double size = static_cast<double>(out.size());
  for (auto& [v, p] : out) {
    if (!has_parent) {
      p = 1.0 / size;
    } else if (out.size() == 1) {
      p = 1.0;
    } else {
      p = v == *parent ? alpha : (1.0 - alpha) / (size - 1.0);
    }
  }
  return out;
}

PathSampler::PathSampler(const QosdInstance& instance, const BudgetVector& x,
                         double alpha, const ExecContext& ctx)
    : instance_(instance), x_(x), alpha_(alpha) {
  std::vector<NodeId> sinks;
  for (const NodePair& pair : instance.pairs()) sinks.push_back(pair.sink);
  std::sort(sinks.begin(), sinks.end());
  sinks.erase(std::unique(sinks.begin(), sinks.end()), sinks.end());
  trees_.resize(sinks.size());
  ParallelFor(static_cast<int64_t>(sinks.size()), ctx, [&](int64_t i) {
    trees_[i] = BuildSpTree(instance_, x_, sinks[i]);
  });
  for (const NodePair& pair : instance.pairs()) {
    tree_of_pair_.push_back(static_cast<int>(
        std::lower_bound(sinks.begin(), sinks.end(), pair.sink) -
        sinks.begin()));
  }
}

SampledPath PathSampler::Sample(Rng& rng) const {
  const int pair = static_cast<int>(rng.Below(instance_.pair_count()));
  SampledPath sample = SampleForPair(pair, rng);
  sample.rho /= instance_.pair_count();
  return sample;
}

// rho here excludes the pair choice; Sample() folds it in.
SampledPath PathSampler::SampleForPair(int pair_index, Rng& rng) const {
  const Graph& g = instance_.graph();
  const NodePair& pair = instance_.pair(pair_index);
  const SpTree& tree = TreeForPair(pair_index);
  const Weight threshold = instance_.threshold();

  SampledPath sample;
  sample.pair_index = pair_index;
  sample.rho = 1.0;
  sample.path.pair_index = pair_index;
  sample.path.nodes.push_back(pair.source);
  std::vector<char> on_walk(g.node_count(), 0);
  on_walk[pair.source] = 1;
  NodeId u = pair.source;
  Weight length = 0;
  while (true) {
    const std::optional<NodeId> parent = tree.Parent(u);
    int candidates = 0;
    bool parent_open = false;
    for (const Arc& arc : g.out_arcs(u)) {
      if (on_walk[arc.neighbor]) continue;
      ++candidates;
      if (parent && arc.neighbor == *parent) parent_open = true;
    }
    if (candidates == 0) return sample;  // dead end

    int pick = -1;  // rank among the open arcs, adjacency order
    NodeId next = kNoParent;
    double p = 0.0;
    if (parent_open && (candidates == 1 || rng.Bernoulli(alpha_))) {
      next = *parent;
      p = candidates == 1 ? 1.0 : alpha_;
    } else if (parent_open) {
      pick = static_cast<int>(rng.Below(candidates - 1));
      p = (1.0 - alpha_) / (candidates - 1);
    } else {
      pick = static_cast<int>(rng.Below(candidates));
      p = 1.0 / candidates;
    }
    EdgeIndex via = -1;
    for (const Arc& arc : g.out_arcs(u)) {
      if (on_walk[arc.neighbor]) continue;
      if (next != kNoParent) {
        if (arc.neighbor == next) {
          via = arc.edge;
          break;
        }
        continue;
      }
      if (parent_open && arc.neighbor == *parent) continue;
      if (pick-- == 0) {
        via = arc.edge;
        next = arc.neighbor;
        break;
      }
    }
    sample.rho *= p;
    sample.path.edges.push_back(via);
    sample.path.nodes.push_back(next);
    sample.path.initial_length += instance_.weight(via).initial();
    length += instance_.weight(via).At(x_[via]);
    on_walk[next] = 1;
    u = next;
    if (u == pair.sink) {
      sample.feasible = sample.path.initial_length < threshold;
      return sample;
    }
    if (length >= threshold) return sample;
  }
}

std::vector<SampledPath> DrawSamples(const PathSampler& sampler, int64_t count,
                                     uint64_t seed, const ExecContext& ctx) {
  std::vector<SampledPath> samples(count);
  const int64_t blocks = (count + kBlockSize - 1) / kBlockSize;
  ParallelFor(blocks, ctx, [&](int64_t b) {
    Rng rng(MixSeed({seed, static_cast<uint64_t>(b)}));
    const int64_t end = std::min(count, (b + 1) * kBlockSize);
    for (int64_t i = b * kBlockSize; i < end; ++i) {
      samples[i] = sampler.Sample(rng);
    }
  });
  return samples;
}

double EstimateB(const QosdInstance& instance,
                 std::span<const SampledPath> samples, const BudgetVector& x) {
  if (samples.empty()) {
    throw QosdError(ErrorKind::kInvalidInstance, "empty sample set");
  }
  double sum = 0.0;
  for (const SampledPath& s : samples) {
    if (!s.feasible) continue;
    sum += static_cast<double>(RValue(instance, s.path, x)) / s.rho;
  }
  return sum / static_cast<double>(samples.size());
}

double SampleCount(int q, double epsilon, double delta_round,
                   const QosdInstance& instance, Rational gamma) {
  if (gamma.num() == 0) {
    throw QosdError(ErrorKind::kUnavailable,
                    "theoretical sample count needs gamma > 0; use practical "
                    "mode");
  }
  const double eps1 = epsilon / 2.0;
  const double delta1 = delta_round / 2.0;
  const double n = instance.node_count();
  const double log_binom =
      std::lgamma(n + q + 1.0) - std::lgamma(q + 1.0) - std::lgamma(n + 1.0);
  const double spread = 1.0 - std::exp(-gamma.ToDouble());
  const double first = std::log(1.0 / delta1) / (eps1 * eps1);
  const double second =
      (log_binom - std::log(delta1)) / (2.0 * spread * spread * eps1 * eps1);
  const double t = static_cast<double>(instance.threshold());
  const double k = instance.pair_count();
  const double log_scale =
      2.0 * std::log(t) + 2.0 * std::log(k) +
      2.0 * instance.hop_bound() *
          std::log(static_cast<double>(instance.graph().max_out_degree()));
  return std::ceil(std::exp(log_scale) * std::max(first, second));
}

BudgetVector GreedyChunk(const QosdInstance& instance,
                         std::span<const SampledPath> samples,
                         const BudgetVector& x, int q, const ExecContext& ctx) {
  const Weight threshold = instance.threshold();
  BudgetVector v(instance.edge_count());
  std::vector<int> feasible;
  std::vector<Weight> lengths;
  std::vector<EdgeIndex> support;
  std::vector<std::vector<int>> through(instance.edge_count());
  for (int i = 0; i < static_cast<int>(samples.size()); ++i) {
    if (!samples[i].feasible) continue;
    const int slot = static_cast<int>(feasible.size());
    feasible.push_back(i);
    lengths.push_back(PathLength(instance, samples[i].path, x));
    for (EdgeIndex e : samples[i].path.edges) {
      if (through[e].empty()) support.push_back(e);
      through[e].push_back(slot);
    }
  }
  std::sort(support.begin(), support.end());

  std::vector<double> gains(support.size());
  for (int round = 0; round < q; ++round) {
    ParallelFor(static_cast<int64_t>(support.size()), ctx, [&](int64_t i) {
      const EdgeIndex e = support[i];
      const int at = x[e] + v[e];
      if (at >= instance.box(e)) {
        gains[i] = -1.0;
        return;
      }
      const Weight bump = instance.weight(e).Increment(at);
      double gain = 0.0;
      for (const int slot : through[e]) {
        const Weight before = std::min(threshold, lengths[slot]);
        const Weight after = std::min(threshold, lengths[slot] + bump);
        gain +=
            static_cast<double>(after - before) / samples[feasible[slot]].rho;
      }
      gains[i] = gain;
    });
    int best = -1;
    for (int i = 0; i < static_cast<int>(support.size()); ++i) {
      if (gains[i] > 0.0 && (best < 0 || gains[i] > gains[best])) best = i;
    }
    if (best < 0) break;
    const EdgeIndex e = support[best];
    const Weight bump = instance.weight(e).Increment(x[e] + v[e]);
    for (const int slot : through[e]) lengths[slot] += bump;
    v.Add(e, 1);
  }
  return v;
}

namespace {

// One exact unit: the best unit gain on the current potential paths.
EdgeIndex ExactUnitStep(const QosdInstance& instance, const BudgetVector& x,
                        const ExecContext& ctx) {
  const std::vector<Path> paths = PotentialPaths(instance, x, ctx);
  BlockingState state(instance, paths, x);
  EdgeIndex best = -1;
  int64_t best_gain = 0;
  EdgeIndex flat = -1;
  for (const EdgeIndex e : state.support()) {
    if (state.Headroom(e) <= 0) continue;
    const int64_t gain = state.ChunkGain(e, 1);
    if (gain > best_gain) {
      best = e;
      best_gain = gain;
    } else if (gain == 0 && flat < 0 && state.CanGain(e)) {
      flat = e;
    }
  }
  if (best < 0) best = flat;
  if (best < 0) {
    throw QosdError(ErrorKind::kInfeasibleBox,
                    "no unit within the box lengthens an open path");
  }
  return best;
}

}  // namespace

RunReport RunSa(const QosdInstance& instance, const SaConfig& config,
                const ExecContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  if (config.q < 1) {
    throw QosdError(ErrorKind::kInvalidInstance, "q must be positive");
  }
  if (!(config.alpha >= 0.0 && config.alpha < 1.0)) {
    throw QosdError(ErrorKind::kInvalidInstance, "alpha must be in [0, 1)");
  }
  int64_t base = 0;
  if (config.mode == SampleMode::kTheoretical) {
    const double delta_round =
        config.delta /
        static_cast<double>(std::max<int64_t>(1, instance.box_norm()));
    const double n = SampleCount(config.q, config.epsilon, delta_round,
                                 instance, instance.concave_ratio());
    if (!(n <= config.max_theoretical_samples)) {
      throw QosdError(ErrorKind::kUnavailable, "theoretical sample count " +
                                                   std::to_string(n) +
                                                   " exceeds the limit");
    }
    base = static_cast<int64_t>(n);
  } else {
    base = config.samples_per_round > 0
               ? config.samples_per_round
               : std::max<int64_t>(100, 10 * instance.pair_count());
  }

  BudgetVector x(instance.edge_count());
  int64_t rounds = 0;
  int64_t units = 0;
  int64_t drawn = 0;
  int64_t escalations = 0;
  int64_t fallbacks = 0;
  while (!UnseparatedPairs(instance, x, ctx).empty()) {
    ctx.deadline.Check("sampling round");
    const PathSampler sampler(instance, x, config.alpha, ctx);
    BudgetVector v(instance.edge_count());
    int64_t count = base;
    for (int attempt = 0; attempt <= kMaxEscalations; ++attempt) {
      const uint64_t stream =
          MixSeed({config.seed, static_cast<uint64_t>(rounds),
                   static_cast<uint64_t>(attempt)});
      const std::vector<SampledPath> samples =
          DrawSamples(sampler, count, stream, ctx);
      drawn += count;
      v = GreedyChunk(instance, samples, x, config.q, ctx);
      if (v.norm() > 0) break;
      if (attempt < kMaxEscalations) {
        ++escalations;
        count *= 2;
      }
    }
    if (v.norm() == 0) {
      ++fallbacks;
      v.Add(ExactUnitStep(instance, x, ctx), 1);
    }
    x = x + v;
    units += v.norm();
    ++rounds;
  }

  RunReport report;
  report.algorithm = "sa";
  report.budget = std::move(x);
  report.outer_iterations = rounds;
  report.inner_iterations = units;
  report.seed = config.seed;
  report.extras["samples_per_round"] = std::to_string(base);
  report.extras["samples_total"] = std::to_string(drawn);
  report.extras["escalations"] = std::to_string(escalations);
  report.extras["fallbacks"] = std::to_string(fallbacks);
  report.extras["sample_mode"] =
      config.mode == SampleMode::kTheoretical ? "theoretical" : "practical";
  CertifyReport(instance, report, start, ctx);
  return report;
}

}  // namespace qosd
