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

#ifndef QOSD_EXEC_H_
#define QOSD_EXEC_H_

#include <omp.h>

#include <chrono>
#include <optional>

namespace qosd {

// Cooperative time limit. Solvers call Check() between iterations.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline Never() { return Deadline(); }
  static Deadline After(double seconds);

  bool Expired() const { return at_.has_value() && Clock::now() >= *at_; }
  // Throws QosdError(kTimeout) once expired.
  void Check(const char* where) const;

 private:
  std::optional<Clock::time_point> at_;
};

struct ExecContext {
  int threads = 1;
  Deadline deadline;
};

// Runs body(i) for i in [0, count). Bodies must write to disjoint slots;
// callers reduce the slots in index order so results never depend on the
// thread count.
template <typename Body>
void ParallelFor(int64_t count, const ExecContext& ctx, Body&& body) {
  if (ctx.threads <= 1 || count < 2) {
    for (int64_t i = 0; i < count; ++i) body(i);
    return;
  }
#pragma omp parallel for num_threads(ctx.threads) schedule(dynamic, 1)
  for (int64_t i = 0; i < count; ++i) body(i);
}

}  // namespace qosd

#endif  // QOSD_EXEC_H_
