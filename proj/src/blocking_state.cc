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

#include "qosd/blocking_state.h"

#include <algorithm>
#include <utility>

namespace qosd {

BlockingState::BlockingState(const QosdInstance& instance,
                             std::span<const Path> paths, BudgetVector start)
    : instance_(instance),
      x_(std::move(start)),
      paths_through_(instance.edge_count()) {
  const Weight threshold = instance.threshold();
  lengths_.reserve(paths.size());
  for (int i = 0; i < static_cast<int>(paths.size()); ++i) {
    lengths_.push_back(PathLength(instance, paths[i], x_));
    d_value_ += std::min(threshold, lengths_.back());
    for (EdgeIndex e : paths[i].edges) paths_through_[e].push_back(i);
  }
  target_ = static_cast<int64_t>(paths.size()) * threshold;
  for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
    if (!paths_through_[e].empty()) support_.push_back(e);
  }
}

int64_t BlockingState::ChunkGain(EdgeIndex e, int amount) const {
  const WeightFunction& f = instance_.weight(e);
  const Weight bump = f.At(x_[e] + amount) - f.At(x_[e]);
  if (bump == 0) return 0;
  const Weight threshold = instance_.threshold();
  int64_t gain = 0;
  for (int p : paths_through_[e]) {
    const Weight before = lengths_[p];
    if (before >= threshold) continue;
    gain += std::min(threshold, before + bump) - before;
  }
  return gain;
}

bool BlockingState::CanGain(EdgeIndex e) const {
  const int headroom = Headroom(e);
  return headroom > 0 && ChunkGain(e, headroom) > 0;
}

void BlockingState::Apply(EdgeIndex e, int amount) {
  const WeightFunction& f = instance_.weight(e);
  const Weight bump = f.At(x_[e] + amount) - f.At(x_[e]);
  const Weight threshold = instance_.threshold();
  for (int p : paths_through_[e]) {
    const Weight before = lengths_[p];
    lengths_[p] += bump;
    d_value_ += std::min(threshold, lengths_[p]) - std::min(threshold, before);
  }
  x_.Add(e, amount);
}

}  // namespace qosd
