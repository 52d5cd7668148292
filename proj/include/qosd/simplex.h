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

#ifndef QOSD_SIMPLEX_H_
#define QOSD_SIMPLEX_H_

#include <cstdint>
#include <vector>

namespace qosd {

// max c^T y  subject to  A y <= b, y >= 0, with b >= 0 so the slack basis
// is feasible from the start. A is dense, row-major.
struct SimplexProblem {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

struct SimplexResult {
  std::vector<double> primal;  // y, length cols
  std::vector<double> dual;    // row prices, length rows
  double objective = 0.0;
  int64_t pivots = 0;
};

inline constexpr double kSimplexTolerance = 1e-9;

// Dantzig pricing with lowest-index ties; switches to Bland's rule after a
// run of degenerate pivots. Deterministic for a fixed input. Throws
// kInternal on an unbounded problem or when the pivot limit is hit.
SimplexResult SolveSimplex(const SimplexProblem& problem,
                           int64_t max_pivots = 1000000);

}  // namespace qosd

#endif  // QOSD_SIMPLEX_H_
