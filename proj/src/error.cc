// Copyright 2026 The symbreak Authors
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

#include "symbreak/error.h"

namespace symbreak {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter:
      return "invalid-parameter";
    case ErrorCode::kNotAnAutomorphism:
      return "not-an-automorphism";
    case ErrorCode::kGroupTooLarge:
      return "group-too-large";
    case ErrorCode::kTimeout:
      return "timeout";
    case ErrorCode::kNotFound:
      return "not-found";
    case ErrorCode::kInvalidWitness:
      return "invalid-witness";
    case ErrorCode::kWrongRegime:
      return "wrong-regime";
    case ErrorCode::kConstructionFailure:
      return "construction-failure";
    case ErrorCode::kNotEnoughVectors:
      return "not-enough-vectors";
    case ErrorCode::kParse:
      return "parse-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

GroupTooLargeError::GroupTooLargeError(std::uint64_t partial_count,
                                       std::uint64_t cap)
    : Error(ErrorCode::kGroupTooLarge,
            "automorphism group exceeds cap " + std::to_string(cap) +
                " (found at least " + std::to_string(partial_count) + ")"),
      partial_count_(partial_count) {}

namespace {

std::string TimeoutMessage(int lower, std::optional<int> upper) {
  std::string msg = "search budget exhausted; certified value >= " +
                    std::to_string(lower);
  if (upper.has_value()) msg += " and <= " + std::to_string(*upper);
  return msg;
}

}  // namespace

SearchTimeoutError::SearchTimeoutError(int lower_bound,
                                       std::optional<int> upper_bound)
    : Error(ErrorCode::kTimeout, TimeoutMessage(lower_bound, upper_bound)),
      lower_bound_(lower_bound),
      upper_bound_(upper_bound) {}

void ThrowInvalidParameter(const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, message);
}

}  // namespace symbreak
