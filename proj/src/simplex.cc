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

#include "qosd/simplex.h"

#include <cmath>
#include <string>

#include "qosd/error.h"

namespace qosd {
namespace {

constexpr int kDegenerateSwitch = 50;

}  // namespace

SimplexResult SolveSimplex(const SimplexProblem& problem, int64_t max_pivots) {
  const int rows = problem.rows;
  const int cols = problem.cols;
  if (static_cast<int64_t>(problem.a.size()) !=
          static_cast<int64_t>(rows) * cols ||
      static_cast<int>(problem.b.size()) != rows ||
      static_cast<int>(problem.c.size()) != cols) {
    throw QosdError(ErrorKind::kInternal, "simplex dimensions disagree");
  }
  for (double v : problem.b) {
    if (v < 0.0) {
      throw QosdError(ErrorKind::kInternal, "simplex needs b >= 0");
    }
  }
  // Columns [0, cols) structural, [cols, cols + rows) slack; last is rhs.
  const int width = cols + rows + 1;
  std::vector<double> t(static_cast<size_t>(rows + 1) * width, 0.0);
  auto at = [&](int r, int c) -> double& {
    return t[static_cast<size_t>(r) * width + c];
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      at(r, c) = problem.a[static_cast<size_t>(r) * cols + c];
    }
    at(r, cols + r) = 1.0;
    at(r, width - 1) = problem.b[r];
  }
  for (int c = 0; c < cols; ++c) at(rows, c) = -problem.c[c];
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = cols + r;

  SimplexResult result;
  int degenerate = 0;
  while (true) {
    const bool bland = degenerate >= kDegenerateSwitch;
    int enter = -1;
    double best = -kSimplexTolerance;
    for (int c = 0; c < width - 1; ++c) {
      const double rc = at(rows, c);
      if (rc < best) {
        enter = c;
        if (bland) break;
        best = rc;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    double ratio = 0.0;
    for (int r = 0; r < rows; ++r) {
      const double coef = at(r, enter);
      if (coef <= kSimplexTolerance) continue;
      const double q = at(r, width - 1) / coef;
      if (leave < 0 || q < ratio - kSimplexTolerance ||
          (q <= ratio + kSimplexTolerance && basis[r] < basis[leave])) {
        leave = r;
        ratio = q;
      }
    }
    if (leave < 0) {
      throw QosdError(ErrorKind::kInternal, "LP is unbounded");
    }
    if (++result.pivots > max_pivots) {
      throw QosdError(
          ErrorKind::kInternal,
          "simplex exceeded " + std::to_string(max_pivots) + " pivots");
    }
    degenerate = ratio <= kSimplexTolerance ? degenerate + 1 : 0;

    const double pivot = at(leave, enter);
    for (int c = 0; c < width; ++c) at(leave, c) /= pivot;
    at(leave, enter) = 1.0;
    for (int r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double factor = at(r, enter);
      if (std::abs(factor) <= 0.0) continue;
      for (int c = 0; c < width; ++c) {
        at(r, c) -= factor * at(leave, c);
      }
      at(r, enter) = 0.0;
    }
    basis[leave] = enter;
  }

  result.primal.assign(cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    if (basis[r] < cols) result.primal[basis[r]] = at(r, width - 1);
  }
  result.dual.resize(rows);
  for (int r = 0; r < rows; ++r) result.dual[r] = at(rows, cols + r);
  result.objective = at(rows, width - 1);
  return result;
}

}  // namespace qosd
