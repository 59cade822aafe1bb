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

#ifndef SYMBREAK_LABELING_H_
#define SYMBREAK_LABELING_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symbreak {

// Total assignment of positive integer labels to a graph's vertices or edges.
// Labels are not a proper coloring: adjacent items may share a label.
class Labeling {
 public:
  Labeling() = default;
  // Throws invalid-parameter if any label is < 1.
  explicit Labeling(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int operator[](int i) const { return labels_[i]; }
  std::span<const int> labels() const { return labels_; }
  const std::vector<int>& vector() const { return labels_; }

  int MaxLabel() const;
  int DistinctCount() const;
  // Labels used are exactly {1, ..., MaxLabel()}.
  bool UsesContiguousLabels() const;

  std::string ToString() const;  // "1,2,1"

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> labels_;
};

class VertexLabeling : public Labeling {
 public:
  using Labeling::Labeling;
};

class EdgeLabeling : public Labeling {
 public:
  using Labeling::Labeling;
};

// Parses "1,2,1" (whitespace tolerated). Throws parse-error.
std::vector<int> ParseLabelList(std::string_view text);

}  // namespace symbreak

#endif  // SYMBREAK_LABELING_H_
