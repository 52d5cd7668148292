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

#ifndef QOSD_ADAPTIVE_H_
#define QOSD_ADAPTIVE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "qosd/blocking_state.h"
#include "qosd/exec.h"
#include "qosd/framework.h"
#include "qosd/instance.h"
#include "qosd/path.h"
#include "qosd/rational.h"
#include "qosd/report.h"

namespace qosd {

// u(e, z): z extra units on edge e and the D gain they buy.
struct ChunkIncrement {
  EdgeIndex edge = -1;
  int amount = 0;
  int64_t gain = 0;

  Rational ratio() const { return Rational(gain, amount); }
};

// True when a is the better chunk: larger gain/amount, then smaller amount,
// then lower edge index.
bool BetterChunk(const ChunkIncrement& a, const ChunkIncrement& b);

// Best chunk over all support edges and amounts in [1, headroom]; nullopt
// when no chunk has a positive gain.
std::optional<ChunkIncrement> BestChunk(const BlockingState& state,
                                        const ExecContext& ctx = {});

// Adaptive Trading: repeatedly adds BestChunk until P is blocked.
BlockResult BlockAdaptive(const QosdInstance& instance,
                          const CandidateSet& paths,
                          const ExecContext& ctx = {},
                          std::vector<ChunkIncrement>* trace = nullptr);

RunReport RunAt(const QosdInstance& instance,
                const IterativeOptions& options = {},
                const ExecContext& ctx = {});

}  // namespace qosd

#endif  // QOSD_ADAPTIVE_H_
