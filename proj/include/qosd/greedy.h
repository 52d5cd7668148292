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

#ifndef QOSD_GREEDY_H_
#define QOSD_GREEDY_H_

#include <cstdint>
#include <vector>

#include "qosd/exec.h"
#include "qosd/framework.h"
#include "qosd/instance.h"
#include "qosd/path.h"
#include "qosd/report.h"

namespace qosd {

struct GreedyStep {
  EdgeIndex edge;
  int64_t gain;
  // |P| * T - D before the step.
  int64_t gap_before;
};

// Unit greedy on D(P, .): each step adds the unit with the largest marginal
// gain, lowest edge index on ties. When every unit gain is zero (possible
// only with flat increments) it advances the lowest-index edge that can
// still gain within its box. Throws kInfeasibleBox if no edge can.
BlockResult BlockGreedy(const QosdInstance& instance, const CandidateSet& paths,
                        const ExecContext& ctx = {},
                        std::vector<GreedyStep>* trace = nullptr);

// Iterative Greedy: the candidate-path framework with BlockGreedy.
RunReport RunIg(const QosdInstance& instance,
                const IterativeOptions& options = {},
                const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_GREEDY_H_
