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

#ifndef QOSD_WEIGHTS_H_
#define QOSD_WEIGHTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qosd/graph.h"
#include "qosd/rational.h"

namespace qosd {

using Weight = int64_t;

enum class WeightModel { kLinear, kConvex, kConcave, kCutting, kCustom };

// What BuildWeights produces for a whole graph. kHeterogeneous draws one of
// linear/convex/concave per edge.
enum class WeightRecipe {
  kLinear,
  kConvex,
  kConcave,
  kCutting,
  kHeterogeneous
};

std::string_view WeightModelName(WeightModel model);
std::string_view WeightRecipeName(WeightRecipe recipe);
std::optional<WeightModel> ParseWeightModel(std::string_view name);
std::optional<WeightRecipe> ParseWeightRecipe(std::string_view name);

struct LinearCoeffs {
  Weight beta;
  Weight alpha;
};

// f_e tabulated on the budget range [0, cap]. table[0] is the initial weight
// w_e >= 1; the table is nondecreasing.
class WeightFunction {
 public:
  // Throws kInvalidInstance when the table is empty, starts below 1, or
  // decreases somewhere.
  explicit WeightFunction(std::vector<Weight> table,
                          WeightModel model = WeightModel::kCustom);
  // beta * x + alpha for x in [0, cap].
  static WeightFunction Linear(Weight beta, Weight alpha, int cap);

  Weight At(int budget) const { return table_[budget]; }
  Weight initial() const { return table_.front(); }
  Weight max_value() const { return table_.back(); }
  int cap() const { return static_cast<int>(table_.size()) - 1; }
  // f(x + 1) - f(x), for x in [0, cap).
  Weight Increment(int budget) const {
    return table_[budget + 1] - table_[budget];
  }

  WeightModel model() const { return model_; }
  const std::optional<LinearCoeffs>& linear() const { return linear_; }
  // Set whenever the table is affine, whatever the model tag says.
  const std::optional<LinearCoeffs>& affine() const { return affine_; }
  std::span<const Weight> table() const { return table_; }

 private:
  std::vector<Weight> table_;
  WeightModel model_;
  std::optional<LinearCoeffs> linear_;
  std::optional<LinearCoeffs> affine_;
};

struct WeightOptions {
  // Slope of the linear model; the cap is the smallest budget reaching T.
  Weight linear_beta = 1;
  // Truncates every cap to at most this value.
  std::optional<int> max_cap;
};

// The concrete models. All start at 1 and top out at T (linear tops out at
// the first multiple step reaching T when beta does not divide T - 1).
WeightFunction MakeLinearWeight(Weight threshold, Weight beta = 1);
WeightFunction MakeConvexWeight(Weight threshold);
WeightFunction MakeConcaveWeight(Weight threshold);
WeightFunction MakeCuttingWeight(Weight threshold);

// Throws kInvalidInstance when threshold < 2.
std::vector<WeightFunction> BuildWeights(const Graph& graph,
                                         WeightRecipe recipe, Weight threshold,
                                         const WeightOptions& options,
                                         uint64_t seed);

// Largest gamma in [0, 1] with f(x+1) - f(x) >= gamma * (f(y+1) - f(y)) for
// all 0 <= x <= y < cap and every function.
Rational ConcaveRatio(const WeightFunction& weight);
Rational ConcaveRatio(std::span<const WeightFunction> weights);

}  // namespace qosd

#endif  // QOSD_WEIGHTS_H_
