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

#include "qosd/weights.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qosd/error.h"
#include "qosd/rng.h"

namespace qosd {

std::string_view WeightModelName(WeightModel model) {
  switch (model) {
    case WeightModel::kLinear:
      return "linear";
    case WeightModel::kConvex:
      return "convex";
    case WeightModel::kConcave:
      return "concave";
    case WeightModel::kCutting:
      return "cutting";
    case WeightModel::kCustom:
      return "custom";
  }
  return "custom";
}

std::string_view WeightRecipeName(WeightRecipe recipe) {
  switch (recipe) {
    case WeightRecipe::kLinear:
      return "linear";
    case WeightRecipe::kConvex:
      return "convex";
    case WeightRecipe::kConcave:
      return "concave";
    case WeightRecipe::kCutting:
      return "cutting";
    case WeightRecipe::kHeterogeneous:
      return "heterogeneous";
  }
  return "linear";
}

std::optional<WeightModel> ParseWeightModel(std::string_view name) {
  for (WeightModel m :
       {WeightModel::kLinear, WeightModel::kConvex, WeightModel::kConcave,
        WeightModel::kCutting, WeightModel::kCustom}) {
    if (WeightModelName(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<WeightRecipe> ParseWeightRecipe(std::string_view name) {
  for (WeightRecipe r :
       {WeightRecipe::kLinear, WeightRecipe::kConvex, WeightRecipe::kConcave,
        WeightRecipe::kCutting, WeightRecipe::kHeterogeneous}) {
    if (WeightRecipeName(r) == name) return r;
  }
  return std::nullopt;
}

WeightFunction::WeightFunction(std::vector<Weight> table, WeightModel model)
    : table_(std::move(table)), model_(model) {
  if (table_.empty()) {
    throw QosdError(ErrorKind::kInvalidInstance, "empty weight table");
  }
  if (table_.front() < 1) {
    throw QosdError(ErrorKind::kInvalidInstance,
                    "initial weight must be positive");
  }
  for (size_t i = 1; i < table_.size(); ++i) {
    if (table_[i] < table_[i - 1]) {
      throw QosdError(ErrorKind::kInvalidInstance,
                      "weight table decreases at budget " + std::to_string(i));
    }
  }
  const Weight alpha = table_[0];
  const Weight beta = table_.size() > 1 ? table_[1] - table_[0] : 0;
  bool affine = true;
  for (size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != beta * static_cast<Weight>(i) + alpha) affine = false;
  }
  if (affine) affine_ = LinearCoeffs{beta, alpha};
  if (model_ == WeightModel::kLinear) {
    if (!affine) {
      throw QosdError(ErrorKind::kInvalidInstance,
                      "table tagged linear is not affine");
    }
    linear_ = affine_;
  }
}

WeightFunction WeightFunction::Linear(Weight beta, Weight alpha, int cap) {
  std::vector<Weight> table(cap + 1);
  for (int i = 0; i <= cap; ++i) table[i] = beta * i + alpha;
  WeightFunction f(std::move(table), WeightModel::kLinear);
  // A cap of zero cannot reveal the slope from the table alone.
  f.linear_ = LinearCoeffs{beta, alpha};
  f.affine_ = f.linear_;
  return f;
}

WeightFunction MakeLinearWeight(Weight threshold, Weight beta) {
  if (beta < 1) {
    throw QosdError(ErrorKind::kInvalidInstance, "linear slope must be >= 1");
  }
  const int cap = static_cast<int>((threshold - 1 + beta - 1) / beta);
  return WeightFunction::Linear(beta, 1, cap);
}

WeightFunction MakeConvexWeight(Weight threshold) {
  int cap = 0;
  while (static_cast<Weight>(cap) * cap < threshold - 1) ++cap;
  std::vector<Weight> table(cap + 1);
  for (int i = 0; i <= cap; ++i) {
    table[i] = std::min<Weight>(static_cast<Weight>(i) * i + 1, threshold);
  }
  return WeightFunction(std::move(table), WeightModel::kConvex);
}

WeightFunction MakeConcaveWeight(Weight threshold) {
  const int cap = static_cast<int>(threshold - 1);
  const double top = std::log(static_cast<double>(cap + 1));
  Weight scale = 1;
  while (static_cast<Weight>(std::floor(scale * top)) + 1 < threshold) {
    ++scale;
  }
  std::vector<Weight> table(cap + 1);
  for (int i = 0; i <= cap; ++i) {
    const Weight raw =
        static_cast<Weight>(std::floor(scale * std::log(i + 1.0))) + 1;
    table[i] = std::min(raw, threshold);
  }
  return WeightFunction(std::move(table), WeightModel::kConcave);
}

WeightFunction MakeCuttingWeight(Weight threshold) {
  return WeightFunction({1, threshold}, WeightModel::kCutting);
}

namespace {

WeightFunction Truncate(const WeightFunction& f, std::optional<int> max_cap) {
  if (!max_cap || f.cap() <= *max_cap) return f;
  if (f.linear()) {
    return WeightFunction::Linear(f.linear()->beta, f.linear()->alpha,
                                  *max_cap);
  }
  std::vector<Weight> table(f.table().begin(),
                            f.table().begin() + *max_cap + 1);
  return WeightFunction(std::move(table), f.model());
}

}  // namespace

std::vector<WeightFunction> BuildWeights(const Graph& graph,
                                         WeightRecipe recipe, Weight threshold,
                                         const WeightOptions& options,
                                         uint64_t seed) {
  if (threshold < 2) {
    throw QosdError(ErrorKind::kInvalidInstance, "threshold must be >= 2");
  }
  if (options.max_cap && *options.max_cap < 0) {
    throw QosdError(ErrorKind::kInvalidInstance, "negative cap");
  }
  const WeightFunction linear = Truncate(
      MakeLinearWeight(threshold, options.linear_beta), options.max_cap);
  const WeightFunction convex =
      Truncate(MakeConvexWeight(threshold), options.max_cap);
  const WeightFunction concave =
      Truncate(MakeConcaveWeight(threshold), options.max_cap);
  const WeightFunction cutting =
      Truncate(MakeCuttingWeight(threshold), options.max_cap);

  std::vector<WeightFunction> weights;
  weights.reserve(graph.edge_count());
  Rng rng(seed);
  for (int e = 0; e < graph.edge_count(); ++e) {
    switch (recipe) {
      case WeightRecipe::kLinear:
        weights.push_back(linear);
        break;
      case WeightRecipe::kConvex:
        weights.push_back(convex);
        break;
      case WeightRecipe::kConcave:
        weights.push_back(concave);
        break;
      case WeightRecipe::kCutting:
        weights.push_back(cutting);
        break;
      case WeightRecipe::kHeterogeneous: {
        const uint64_t pick = rng.Below(3);
        weights.push_back(pick == 0 ? linear : pick == 1 ? convex : concave);
        break;
      }
    }
  }
  return weights;
}

Rational ConcaveRatio(const WeightFunction& weight) {
  Rational gamma(1);
  Weight suffix_max = 0;
  for (int x = weight.cap() - 1; x >= 0; --x) {
    suffix_max = std::max(suffix_max, weight.Increment(x));
    if (suffix_max > 0) {
      gamma = std::min(gamma, Rational(weight.Increment(x), suffix_max));
    }
  }
  return gamma;
}

Rational ConcaveRatio(std::span<const WeightFunction> weights) {
  Rational gamma(1);
  for (const WeightFunction& f : weights) {
    gamma = std::min(gamma, ConcaveRatio(f));
    if (gamma == Rational(0)) break;
  }
  return gamma;
}

}  // namespace qosd
