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

#ifndef QOSD_REPORT_H_
#define QOSD_REPORT_H_

#include <cstdint>
#include <map>
#include <string>

#include "qosd/budget.h"

namespace qosd {

// Outcome of one solver run.
struct RunReport {
  std::string algorithm;
  BudgetVector budget;
  int64_t norm = 0;
  int64_t outer_iterations = 0;
  int64_t inner_iterations = 0;
  double wall_time_s = 0.0;
  // Set by an independent separation check, never by the solver itself.
  bool feasible = false;
  uint64_t seed = 0;
  // Solver-specific counters (retries, fallbacks, sample counts). Ordered
  // so serialized reports are stable.
  std::map<std::string, std::string> extras;
};

}  // namespace qosd

#endif  // QOSD_REPORT_H_
