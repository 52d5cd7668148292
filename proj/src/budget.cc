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

#include "qosd/budget.h"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "qosd/error.h"
#include "qosd/instance.h"

namespace qosd {

BudgetVector::BudgetVector(std::vector<int32_t> values)
    : values_(std::move(values)) {
  for (int32_t v : values_) {
    if (v < 0) {
      throw QosdError(ErrorKind::kInvalidInstance,
                      "budget components must be nonnegative");
    }
    norm_ += v;
  }
}

BudgetVector BudgetVector::Box(const QosdInstance& instance) {
  std::vector<int32_t> caps(instance.edge_count());
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    caps[e] = instance.box(e);
  }
  return BudgetVector(std::move(caps));
}

void BudgetVector::Set(EdgeIndex e, int32_t value) {
  if (value < 0) {
    throw QosdError(ErrorKind::kInternal, "negative budget component");
  }
  norm_ += static_cast<int64_t>(value) - values_[e];
  values_[e] = value;
}

void BudgetVector::Add(EdgeIndex e, int32_t amount) {
  Set(e, values_[e] + amount);
}

bool BudgetVector::WithinBox(const QosdInstance& instance) const {
  if (dimension() != instance.edge_count()) return false;
  for (EdgeIndex e = 0; e < dimension(); ++e) {
    if (values_[e] > instance.box(e)) return false;
  }
  return true;
}

namespace {

template <typename Op>
BudgetVector Componentwise(const BudgetVector& x, const BudgetVector& y,
                           Op op) {
  if (x.dimension() != y.dimension()) {
    throw QosdError(
        ErrorKind::kInvalidInstance,
        "budget dimension mismatch: " + std::to_string(x.dimension()) + " vs " +
            std::to_string(y.dimension()));
  }
  std::vector<int32_t> out(x.dimension());
  for (int i = 0; i < x.dimension(); ++i) out[i] = op(x[i], y[i]);
  return BudgetVector(std::move(out));
}

}  // namespace

BudgetVector Join(const BudgetVector& x, const BudgetVector& y) {
  return Componentwise(x, y,
                       [](int32_t a, int32_t b) { return std::max(a, b); });
}

BudgetVector Meet(const BudgetVector& x, const BudgetVector& y) {
  return Componentwise(x, y,
                       [](int32_t a, int32_t b) { return std::min(a, b); });
}

BudgetVector operator+(const BudgetVector& x, const BudgetVector& y) {
  return Componentwise(x, y, [](int32_t a, int32_t b) { return a + b; });
}

BudgetVector Monus(const BudgetVector& x, const BudgetVector& y) {
  return Componentwise(x, y,
                       [](int32_t a, int32_t b) { return std::max(a - b, 0); });
}

bool LessEq(const BudgetVector& x, const BudgetVector& y) {
  if (x.dimension() != y.dimension()) {
    throw QosdError(ErrorKind::kInvalidInstance, "budget dimension mismatch");
  }
  for (int i = 0; i < x.dimension(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

void WriteBudget(std::ostream& out, const BudgetVector& x) {
  out << "qosd-budget v1\nm " << x.dimension() << "\n";
  for (int i = 0; i < x.dimension(); ++i) {
    out << x[i] << (i + 1 == x.dimension() ? "" : " ");
  }
  out << "\n";
}

BudgetVector ReadBudget(std::istream& in) {
  std::string name;
  std::string version;
  std::string key;
  int dimension = -1;
  if (!(in >> name >> version) || name != "qosd-budget" || version != "v1") {
    throw QosdError(ErrorKind::kParse, "expected header \"qosd-budget v1\"");
  }
  if (!(in >> key >> dimension) || key != "m" || dimension < 0) {
    throw QosdError(ErrorKind::kParse, "expected \"m <dimension>\"");
  }
  std::vector<int32_t> values(dimension);
  for (int32_t& v : values) {
    if (!(in >> v)) {
      throw QosdError(ErrorKind::kParse, "budget file has too few values");
    }
  }
  return BudgetVector(std::move(values));
}

}  // namespace qosd
