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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "qosd/baselines.h"
#include "qosd/error.h"
#include "qosd/shortest_path.h"
#include "test_support.h"

namespace qosd {
namespace {

using testing::DiamondInstance;

BudgetVector Vec(std::vector<int32_t> v) { return BudgetVector(std::move(v)); }

TEST(SpTreeTest, DiamondParents) {
  const QosdInstance inst = DiamondInstance();
  const SpTree t = BuildSpTree(inst, BudgetVector(4), 3);
  EXPECT_EQ(t.parent[0], 1);
  EXPECT_EQ(t.parent[1], 3);
  EXPECT_EQ(t.parent[2], 3);
  EXPECT_FALSE(t.Parent(3).has_value());
  const SpTree heavy = BuildSpTree(inst, Vec({2, 0, 0, 0}), 3);
  EXPECT_EQ(heavy.parent[0], 2);
}

TEST(SpTreeTest, IsolatedSink) {
  Graph g(3, {{0, 1}});
  const QosdInstance inst(std::move(g), {MakeLinearWeight(3)}, {{0, 2}}, 3);
  const SpTree t = BuildSpTree(inst, BudgetVector(1), 2);
  for (NodeId u = 0; u < 3; ++u) EXPECT_FALSE(t.Parent(u).has_value());
}

TEST(StepDistributionTest, Cases) {
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  std::vector<char> on(4, 0);
  on[0] = 1;
  auto d = StepDistribution(g, 0, on, NodeId{2}, 0.8);
  ASSERT_EQ(d.size(), 3u);
  EXPECT_DOUBLE_EQ(d[0].second, 0.1);
  EXPECT_DOUBLE_EQ(d[1].second, 0.8);
  d = StepDistribution(g, 0, on, std::nullopt, 0.8);
  for (const auto& [v, p] : d) EXPECT_DOUBLE_EQ(p, 1.0 / 3.0);
  on[1] = on[3] = 1;
  d = StepDistribution(g, 0, on, NodeId{2}, 0.8);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_DOUBLE_EQ(d[0].second, 1.0);
  on[2] = 1;
  EXPECT_TRUE(StepDistribution(g, 0, on, NodeId{2}, 0.8).empty());
}

TEST(SamplerTest, DiamondWalkProbabilities) {
  const QosdInstance inst = DiamondInstance();
  const PathSampler sampler(inst, BudgetVector(4), 0.8);
  Rng rng(3);
  int upper = 0;
  const int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const SampledPath s = sampler.Sample(rng);
    ASSERT_TRUE(s.feasible);
    if (s.path.nodes[1] == 1) {
      EXPECT_DOUBLE_EQ(s.rho, 0.8);
      ++upper;
    } else {
      EXPECT_EQ(s.path.nodes, (std::vector<NodeId>{0, 2, 3}));
      EXPECT_DOUBLE_EQ(s.rho, 0.2);
    }
  }
  const double sigma = std::sqrt(0.8 * 0.2 / kDraws);
  EXPECT_LT(std::abs(upper / double(kDraws) - 0.8), 3 * sigma);
}

TEST(SamplerTest, TruncatesOnceLengthReachesT) {
  const QosdInstance inst = DiamondInstance();
  const PathSampler sampler(inst, Vec({2, 0, 2, 0}), 0.8);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const SampledPath s = sampler.Sample(rng);
    EXPECT_FALSE(s.feasible);
    EXPECT_EQ(s.path.hop_count(), 1);
  }
}

// rho summed over the whole walk tree of a pair, by exhaustive expansion.
double WalkMass(const QosdInstance& inst, const SpTree& tree,
                const BudgetVector& x, double alpha, NodeId u, Weight length,
                std::vector<char>& on, int pair, int* feasible_hits,
                double* rho_min) {
  const NodePair& pr = inst.pair(pair);
  if (u == pr.sink || length >= inst.threshold()) {
    if (u == pr.sink) ++*feasible_hits;
    return 1.0;
  }
  const auto dist =
      StepDistribution(inst.graph(), u, on, tree.Parent(u), alpha);
  if (dist.empty()) return 1.0;
  double mass = 0.0;
  for (const auto& [v, p] : dist) {
    const EdgeIndex e = *inst.graph().FindEdge(u, v);
    on[v] = 1;
    mass +=
        p * WalkMass(inst, tree, x, alpha, v, length + inst.weight(e).At(x[e]),
                     on, pair, feasible_hits, rho_min);
    on[v] = 0;
  }
  return mass;
}

TEST(SamplerTest, WalkTreeMassIsOne) {
  testing::RandomSpec spec;
  spec.nodes = 6;
  spec.rho = 0.5;
  spec.threshold = 4;
  spec.pairs = 3;
  for (int trial = 0; trial < 30; ++trial) {
    const QosdInstance inst = testing::RandomInstance(spec, 40 + trial);
    const BudgetVector x(inst.edge_count());
    const PathSampler sampler(inst, x, 0.8);
    for (int i = 0; i < inst.pair_count(); ++i) {
      std::vector<char> on(inst.node_count(), 0);
      on[inst.pair(i).source] = 1;
      int hits = 0;
      double unused = 1.0;
      const double mass =
          WalkMass(inst, sampler.TreeForPair(i), x, 0.8, inst.pair(i).source, 0,
                   on, i, &hits, &unused);
      EXPECT_NEAR(mass, 1.0, 1e-12);
    }
  }
}

TEST(SamplerTest, RhoLowerBound) {
  testing::RandomSpec spec;
  spec.nodes = 12;
  spec.rho = 0.3;
  spec.threshold = 4;
  spec.pairs = 4;
  for (int trial = 0; trial < 20; ++trial) {
    const QosdInstance inst = testing::RandomInstance(spec, 80 + trial);
    const int d = inst.graph().max_out_degree();
    if (d < 2) continue;
    const PathSampler sampler(inst, BudgetVector(inst.edge_count()), 0.8);
    const double bound =
        std::pow(0.2 / (d - 1), inst.hop_bound()) / inst.pair_count();
    for (const SampledPath& s : DrawSamples(sampler, 500, trial)) {
      EXPECT_GT(s.rho, 0.0);
      if (s.feasible) {
        EXPECT_GE(s.rho, bound * (1 - 1e-12));
        EXPECT_LT(s.path.initial_length, inst.threshold());
      }
    }
  }
}

TEST(EstimatorTest, Arithmetic) {
  const QosdInstance inst = DiamondInstance();
  SampledPath s;
  s.path = MakePath(inst, {2, 3}, 0);
  s.rho = 0.2;
  s.feasible = true;
  s.pair_index = 0;
  EXPECT_DOUBLE_EQ(
      EstimateB(inst, std::vector<SampledPath>{s}, BudgetVector(4)), 10.0);
  s.feasible = false;
  EXPECT_DOUBLE_EQ(
      EstimateB(inst, std::vector<SampledPath>{s}, BudgetVector(4)), 0.0);
  EXPECT_THROW(EstimateB(inst, std::vector<SampledPath>{}, BudgetVector(4)),
               QosdError);
}

TEST(EstimatorTest, UnbiasedAtZero) {
  const QosdInstance inst = DiamondInstance();
  const BudgetVector x(4);
  const PathSampler sampler(inst, x, 0.8);
  const auto samples = DrawSamples(sampler, 50000, 11);
  double sum = 0.0, sq = 0.0;
  for (const SampledPath& s : samples) {
    const double v = s.feasible ? RValue(inst, s.path, x) / s.rho : 0.0;
    sum += v;
    sq += v * v;
  }
  const double n = samples.size();
  const double mean = sum / n;
  const double se = std::sqrt((sq / n - mean * mean) / n);
  EXPECT_NEAR(EstimateB(inst, samples, x), mean, 1e-9);
  EXPECT_LE(std::abs(mean - 4.0), 3 * se);
}

TEST(DrawSamplesTest, ThreadCountInvariant) {
  testing::RandomSpec spec;
  spec.nodes = 30;
  spec.rho = 0.15;
  spec.threshold = 5;
  spec.pairs = 6;
  const QosdInstance inst = testing::RandomInstance(spec, 5);
  const PathSampler sampler(inst, BudgetVector(inst.edge_count()), 0.8);
  ExecContext four;
  four.threads = 4;
  const auto a = DrawSamples(sampler, 1000, 21);
  const auto b = DrawSamples(sampler, 1000, 21, four);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].path.edges, b[i].path.edges);
    EXPECT_EQ(a[i].rho, b[i].rho);
  }
}

TEST(SampleCountTest, FrozenValue) {
  // T = 3, k = 1, d = 2, h = 3, n = 4, gamma = 1, q = 1.
  const QosdInstance inst = DiamondInstance();
  const double n = SampleCount(1, 0.5, 0.5, inst, Rational(1, 1));
  EXPECT_EQ(n, 34548.0);
  double previous = n;
  for (int64_t den : {2, 4, 16, 256, 65536}) {
    const double next = SampleCount(1, 0.5, 0.5, inst, Rational(1, den));
    EXPECT_GT(next, previous);
    previous = next;
  }
  try {
    SampleCount(1, 0.5, 0.5, inst, Rational(0, 1));
    FAIL();
  } catch (const QosdError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnavailable);
  }
}

TEST(GreedyChunkTest, DiamondPlacesBranchUnits) {
  const QosdInstance inst = DiamondInstance();
  const BudgetVector x(4);
  const PathSampler sampler(inst, x, 0.8);
  const auto samples = DrawSamples(sampler, 2000, 8);
  const BudgetVector v = GreedyChunk(inst, samples, x, 2);
  EXPECT_EQ(v.norm(), 2);
  // One unit on each branch blocks both paths.
  EXPECT_EQ(v[0] + v[1], 1);
  EXPECT_EQ(v[2] + v[3], 1);
  EXPECT_EQ(GreedyChunk(inst, samples, x, 0).norm(), 0);
  const BudgetVector blocked = Vec({1, 0, 1, 0});
  const PathSampler after(inst, blocked, 0.8);
  EXPECT_EQ(GreedyChunk(inst, DrawSamples(after, 200, 9), blocked, 2).norm(),
            0);
}

TEST(RunSaTest, DiamondMostlyOptimal) {
  const QosdInstance inst = DiamondInstance();
  int optimal = 0;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    SaConfig config;
    config.seed = seed;
    const RunReport r = RunSa(inst, config);
    ASSERT_TRUE(r.feasible);
    if (r.norm == 2) ++optimal;
  }
  EXPECT_GE(optimal, 90);
}

TEST(RunSaTest, CuttingUsesZeroOne) {
  testing::RandomSpec spec;
  spec.nodes = 20;
  spec.rho = 0.2;
  spec.recipe = WeightRecipe::kCutting;
  spec.threshold = 4;
  spec.pairs = 5;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const QosdInstance inst = testing::RandomInstance(spec, seed);
    SaConfig config;
    config.seed = seed;
    const RunReport r = RunSa(inst, config);
    EXPECT_TRUE(r.feasible);
    for (int32_t v : r.budget.values()) EXPECT_LE(v, 1);
  }
}

TEST(RunSaTest, TheoreticalModeRules) {
  const QosdInstance inst = DiamondInstance();
  SaConfig config;
  config.mode = SampleMode::kTheoretical;
  config.max_theoretical_samples = 10;
  try {
    RunSa(inst, config);
    FAIL();
  } catch (const QosdError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnavailable);
  }
  // gamma = 0 is refused outright.
  Graph g(2, {{0, 1}});
  const QosdInstance flat(std::move(g), {WeightFunction({1, 1, 3})}, {{0, 1}},
                          3);
  config.max_theoretical_samples = 1e12;
  EXPECT_THROW(RunSa(flat, config), QosdError);
  SaConfig practical;
  EXPECT_EQ(RunSa(flat, practical).budget, Vec({2}));
}

TEST(RunSaTest, AtLeastOracleForAllQ) {
  testing::RandomSpec spec;
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const QosdInstance inst = testing::RandomInstance(spec, 200 + seed);
    const int64_t opt = OracleOpt(inst).opt_norm;
    for (int q : {1, 2, 4}) {
      SaConfig config;
      config.q = q;
      config.seed = seed;
      const RunReport r = RunSa(inst, config);
      EXPECT_TRUE(r.feasible);
      EXPECT_GE(r.norm, opt);
    }
  }
}

}  // namespace
}  // namespace qosd
