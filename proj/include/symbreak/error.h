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

#ifndef SYMBREAK_ERROR_H_
#define SYMBREAK_ERROR_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symbreak {

enum class ErrorCode {
  kInvalidParameter,
  kNotAnAutomorphism,
  kGroupTooLarge,
  kTimeout,
  kNotFound,
  kInvalidWitness,
  kWrongRegime,
  kConstructionFailure,
  kNotEnoughVectors,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base class of every error raised by the library. The code is stable and is
// what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when automorphism enumeration exceeds the caller's cap.
class GroupTooLargeError : public Error {
 public:
  GroupTooLargeError(std::uint64_t partial_count, std::uint64_t cap);

  std::uint64_t partial_count() const { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

// Raised when an exact search runs out of budget. Carries the bounds that
// were certified before the budget ran out.
class SearchTimeoutError : public Error {
 public:
  SearchTimeoutError(int lower_bound, std::optional<int> upper_bound);

  int lower_bound() const { return lower_bound_; }
  std::optional<int> upper_bound() const { return upper_bound_; }

 private:
  int lower_bound_;
  std::optional<int> upper_bound_;
};

[[noreturn]] void ThrowInvalidParameter(const std::string& message);

}  // namespace symbreak

#endif  // SYMBREAK_ERROR_H_
