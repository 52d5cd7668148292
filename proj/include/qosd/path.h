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

#ifndef QOSD_PATH_H_
#define QOSD_PATH_H_

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "qosd/budget.h"
#include "qosd/graph.h"
#include "qosd/instance.h"

namespace qosd {

// A simple directed path. initial_length is the sum of w_e = f_e(0).
struct Path {
  std::vector<NodeId> nodes;
  std::vector<EdgeIndex> edges;
  Weight initial_length = 0;
  int pair_index = -1;

  int hop_count() const { return static_cast<int>(edges.size()); }
};

// Builds a path from its edge sequence. Throws kInvalidInstance if the
// edges are not consecutive or a node repeats.
Path MakePath(const QosdInstance& instance, std::vector<EdgeIndex> edges,
              int pair_index = -1);

// Insertion-ordered, deduplicated by edge sequence.
class CandidateSet {
 public:
  // Returns false (and keeps the set unchanged) for a duplicate.
  bool Insert(Path path);
  bool Contains(const Path& path) const { return keys_.contains(path.edges); }

  int size() const { return static_cast<int>(paths_.size()); }
  bool empty() const { return paths_.empty(); }
  const Path& operator[](int i) const { return paths_[i]; }
  std::span<const Path> paths() const { return paths_; }
  auto begin() const { return paths_.begin(); }
  auto end() const { return paths_.end(); }

 private:
  std::vector<Path> paths_;
  std::set<std::vector<EdgeIndex>> keys_;
};

// sum over e in p of f_e(x_e).
Weight PathLength(const QosdInstance& instance, const Path& path,
                  const BudgetVector& x);
// r(p, x) = min(T, length of p under x).
Weight RValue(const QosdInstance& instance, const Path& path,
              const BudgetVector& x);
// D(P, x) = sum of r over P. P is blocked iff D == |P| * T.
int64_t DValue(const QosdInstance& instance, std::span<const Path> paths,
               const BudgetVector& x);
bool AllBlocked(const QosdInstance& instance, std::span<const Path> paths,
                const BudgetVector& x);

}  // namespace qosd

#endif  // QOSD_PATH_H_
