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

#include "symbreak/permutation.h"

#include <numeric>

#include "symbreak/error.h"

namespace symbreak {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) {
      ThrowInvalidParameter("permutation image is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(int size) {
  std::vector<int> image(size);
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::IsIdentity() const {
  for (int v = 0; v < size(); ++v) {
    if (image_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (int v = 0; v < size(); ++v) inv.image_[image_[v]] = v;
  return inv;
}

Permutation Permutation::Then(const Permutation& next) const {
  if (next.size() != size()) {
    ThrowInvalidParameter("composing permutations of different sizes");
  }
  Permutation out;
  out.image_.resize(image_.size());
  for (int v = 0; v < size(); ++v) out.image_[v] = next.image_[image_[v]];
  return out;
}

std::vector<int> Permutation::MovedPoints() const {
  std::vector<int> moved;
  for (int v = 0; v < size(); ++v) {
    if (image_[v] != v) moved.push_back(v);
  }
  return moved;
}

std::string Permutation::ToString() const {
  std::string out = "[";
  for (int v = 0; v < size(); ++v) {
    if (v > 0) out += ",";
    out += std::to_string(image_[v]);
  }
  return out + "]";
}

}  // namespace symbreak
