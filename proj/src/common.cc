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

#include <string>

#include "qosd/error.h"
#include "qosd/exec.h"
#include "qosd/rational.h"
#include "qosd/rng.h"

namespace qosd {

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw QosdError(ErrorKind::kInternal, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

uint64_t MixSeed(std::initializer_list<uint64_t> parts) {
  uint64_t h = 0x51ed270b27d5a1c3ULL;
  for (uint64_t part : parts) h = SplitMix64(h ^ part);
  return h;
}

Deadline Deadline::After(double seconds) {
  Deadline d;
  d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(seconds));
  return d;
}

void Deadline::Check(const char* where) const {
  if (Expired()) {
    throw QosdError(ErrorKind::kTimeout,
                    std::string("time limit reached in ") + where);
  }
}

}  // namespace qosd
