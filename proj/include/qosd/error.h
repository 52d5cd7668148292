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

#ifndef QOSD_ERROR_H_
#define QOSD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qosd {

enum class ErrorKind {
  kParse,
  kInvalidInstance,
  kInfeasibleBox,
  kStall,
  kIterationCap,
  kNonlinearWeights,
  kBlownBudget,
  kTimeout,
  kUnavailable,
  kInternal,
};

// Stable lowercase identifier, e.g. "infeasible-box".
std::string_view ErrorKindName(ErrorKind kind);

class QosdError : public std::runtime_error {
 public:
  QosdError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qosd

#endif  // QOSD_ERROR_H_
