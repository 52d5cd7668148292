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

#ifndef QOSD_BLOCKING_STATE_H_
#define QOSD_BLOCKING_STATE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "qosd/budget.h"
#include "qosd/instance.h"
#include "qosd/path.h"

namespace qosd {

// Incremental view of D(P, x) for a fixed path set: cached path lengths and
// an edge -> paths index, so a chunk gain touches only the paths through
// the edge.
class BlockingState {
 public:
  BlockingState(const QosdInstance& instance, std::span<const Path> paths,
                BudgetVector start);

  const BudgetVector& x() const { return x_; }
  int64_t d_value() const { return d_value_; }
  // |P| * T.
  int64_t target() const { return target_; }
  bool AllBlocked() const { return d_value_ == target_; }
  int64_t gap() const { return target_ - d_value_; }

  // Edges used by at least one path, ascending.
  std::span<const EdgeIndex> support() const { return support_; }
  int Headroom(EdgeIndex e) const { return instance_.box(e) - x_[e]; }

  // Delta of D for adding `amount` units on e. Requires amount <= Headroom.
  int64_t ChunkGain(EdgeIndex e, int amount) const;
  // Whether some amount within the box gives a positive gain on e.
  bool CanGain(EdgeIndex e) const;

  void Apply(EdgeIndex e, int amount);

 private:
  const QosdInstance& instance_;
  BudgetVector x_;
  std::vector<Weight> lengths_;
  std::vector<EdgeIndex> support_;
  // paths_through_[e] lists path indices; only filled for support edges.
  std::vector<std::vector<int>> paths_through_;
  int64_t d_value_ = 0;
  int64_t target_ = 0;
};

}  // namespace qosd

#endif  // QOSD_BLOCKING_STATE_H_
