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

#include "symbreak/labeling.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "symbreak/error.h"

namespace symbreak {

Labeling::Labeling(std::vector<int> labels) : labels_(std::move(labels)) {
  for (int l : labels_) {
    if (l < 1) ThrowInvalidParameter("labels must be positive, got " +
                                     std::to_string(l));
  }
}

int Labeling::MaxLabel() const {
  if (labels_.empty()) return 0;
  return *std::max_element(labels_.begin(), labels_.end());
}

int Labeling::DistinctCount() const {
  return static_cast<int>(std::set<int>(labels_.begin(), labels_.end()).size());
}

bool Labeling::UsesContiguousLabels() const {
  return DistinctCount() == MaxLabel();
}

std::string Labeling::ToString() const {
  std::string out;
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(labels_[i]);
  }
  return out;
}

std::vector<int> ParseLabelList(std::string_view text) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse,
                  "bad label '" + std::string(token) + "' in label list");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace symbreak
