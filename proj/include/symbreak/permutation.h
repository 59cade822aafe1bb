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

#ifndef SYMBREAK_PERMUTATION_H_
#define SYMBREAK_PERMUTATION_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace symbreak {

// A bijection on {0, ..., size-1}, stored as its image array: the point v is
// sent to image()[v].
class Permutation {
 public:
  Permutation() = default;
  // Throws invalid-parameter if `image` is not a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation Identity(int size);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int v) const { return image_[v]; }
  std::span<const int> image() const { return image_; }

  bool IsIdentity() const;
  Permutation Inverse() const;
  // (a.Then(b))[v] == b[a[v]]: apply `this` first, then `next`.
  Permutation Then(const Permutation& next) const;

  // Points that are not fixed, in increasing order.
  std::vector<int> MovedPoints() const;

  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace symbreak

#endif  // SYMBREAK_PERMUTATION_H_
