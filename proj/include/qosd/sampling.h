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

#ifndef QOSD_SAMPLING_H_
#define QOSD_SAMPLING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qosd/budget.h"
#include "qosd/exec.h"
#include "qosd/instance.h"
#include "qosd/path.h"
#include "qosd/rational.h"
#include "qosd/report.h"
#include "qosd/rng.h"

namespace qosd {

enum class SampleMode { kPractical, kTheoretical };

struct SaConfig {
  // Largest budget added per round.
  int q = 1;
  // Probability of following the shortest-path tree when possible.
  double alpha = 0.8;
  double epsilon = 0.5;
  double delta = 0.2;
  SampleMode mode = SampleMode::kPractical;
  // Practical mode only; 0 means max(100, 10 * k).
  int64_t samples_per_round = 0;
  uint64_t seed = 1;
  // Theoretical counts above this abort with kUnavailable.
  double max_theoretical_samples = 5e7;
};

inline constexpr NodeId kNoParent = -1;

// Shortest-path tree towards one sink under the lengths f_e(x_e).
struct SpTree {
  NodeId sink = kNoParent;
  // Next hop on a shortest u -> sink path; lowest node id among ties.
  std::vector<NodeId> parent;
  std::vector<Weight> distance;

  std::optional<NodeId> Parent(NodeId u) const {
    if (parent[u] == kNoParent) return std::nullopt;
    return parent[u];
  }
};

SpTree BuildSpTree(const QosdInstance& instance, const BudgetVector& x,
                   NodeId sink);

// Next-node distribution of the biased self-avoiding walk at tail `u`.
// Candidates are out-neighbors not yet on the walk, in adjacency order.
std::vector<std::pair<NodeId, double>> StepDistribution(
    const Graph& graph, NodeId u, std::span<const char> on_walk,
    std::optional<NodeId> parent, double alpha);

struct SampledPath {
  // May be truncated short of the sink. Empty edge list for a walk that
  // could not leave its source.
  Path path;
  // Exact probability of this walk, including the 1/k pair choice.
  double rho = 0.0;
  int pair_index = -1;
  // Simple, ends at the sink and initial length < T.
  bool feasible = false;
};

// Walk sampler bound to one budget vector; trees are built once per sink.
class PathSampler {
 public:
  PathSampler(const QosdInstance& instance, const BudgetVector& x, double alpha,
              const ExecContext& ctx = {});

  SampledPath Sample(Rng& rng) const;
  SampledPath SampleForPair(int pair_index, Rng& rng) const;

  const SpTree& TreeForPair(int pair_index) const {
    return trees_[tree_of_pair_[pair_index]];
  }
  const BudgetVector& x() const { return x_; }

 private:
  const QosdInstance& instance_;
  BudgetVector x_;
  double alpha_;
  std::vector<SpTree> trees_;
  std::vector<int> tree_of_pair_;
};

// `count` independent walks. Stream i / 256 is seeded from (seed, block) so
// the draw does not depend on the thread count.
std::vector<SampledPath> DrawSamples(const PathSampler& sampler, int64_t count,
                                     uint64_t seed,
                                     const ExecContext& ctx = {});

// (1/l) * sum R(p_i, x) / rho(p_i). Throws kInvalidInstance when empty.
double EstimateB(const QosdInstance& instance,
                 std::span<const SampledPath> samples, const BudgetVector& x);

// Sufficient sample count per round, evaluated with epsilon_1 = epsilon / 2
// and delta_1 = delta_round / 2. Returned as a double because realistic
// values overflow every integer type. Throws kUnavailable when gamma = 0.
double SampleCount(int q, double epsilon, double delta_round,
                   const QosdInstance& instance, Rational gamma);

// Up to q rounds of unit greedy on the estimator, restricted to edges on
// feasible samples and within the box. Stops at the first zero-gain round.
BudgetVector GreedyChunk(const QosdInstance& instance,
                         std::span<const SampledPath> samples,
                         const BudgetVector& x, int q,
                         const ExecContext& ctx = {});

// Sampling algorithm: sample, add a greedy chunk, repeat until separated.
RunReport RunSa(const QosdInstance& instance, const SaConfig& config,
                const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_SAMPLING_H_
