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

#ifndef QOSD_BUDGET_H_
#define QOSD_BUDGET_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qosd/graph.h"

namespace qosd {

class QosdInstance;

// Nonnegative integer vector x over the edges, with ||x|| cached. Arithmetic
// never clamps to the box; WithinBox() reports whether x <= b.
class BudgetVector {
 public:
  BudgetVector() = default;
  explicit BudgetVector(int dimension) : values_(dimension, 0) {}
  // Throws kInvalidInstance on a negative component.
  explicit BudgetVector(std::vector<int32_t> values);

  // x = b.
  static BudgetVector Box(const QosdInstance& instance);

  int dimension() const { return static_cast<int>(values_.size()); }
  int32_t operator[](EdgeIndex e) const { return values_[e]; }
  int64_t norm() const { return norm_; }
  std::span<const int32_t> values() const { return values_; }

  void Set(EdgeIndex e, int32_t value);
  void Add(EdgeIndex e, int32_t amount);

  bool WithinBox(const QosdInstance& instance) const;

  friend bool operator==(const BudgetVector& a, const BudgetVector& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<int32_t> values_;
  int64_t norm_ = 0;
};

// Componentwise lattice operators. All throw kInvalidInstance on a
// dimension mismatch.
BudgetVector Join(const BudgetVector& x, const BudgetVector& y);  // max
BudgetVector Meet(const BudgetVector& x, const BudgetVector& y);  // min
BudgetVector operator+(const BudgetVector& x, const BudgetVector& y);
BudgetVector Monus(const BudgetVector& x, const BudgetVector& y);  // max(x-y,0)
// x <= y componentwise.
bool LessEq(const BudgetVector& x, const BudgetVector& y);

// "qosd-budget v1" text format: header, "m <dimension>", then the values.
void WriteBudget(std::ostream& out, const BudgetVector& x);
BudgetVector ReadBudget(std::istream& in);

}  // namespace qosd

#endif  // QOSD_BUDGET_H_
