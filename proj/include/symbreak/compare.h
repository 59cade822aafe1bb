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


#ifndef SYMBREAK_COMPARE_H_
#define SYMBREAK_COMPARE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/closed_forms.h"
#include "symbreak/exact_search.h"

namespace symbreak {

// One formula or bound set against the value the oracle computes.
struct ComparisonRow {
  // "D", "D'" or "|Aut|".
  std::string quantity;
  BoundReport bound;
  // Absent when the quantity does not exist (D' of K_2, for instance).
  std::optional<std::int64_t> oracle;
  bool agree = false;
};

struct Comparison {
  std::string graph;
  std::vector<ComparisonRow> rows;
  // Families or hypotheses for which no formula applies.
  std::vector<std::string> notes;
  bool all_agree() const;
};

// Parses `spec`, evaluates every formula or bound known for its family, and
// runs the exact oracle next to it. Recognized: friendship, book, path,
// cycle, complete, biclique(p,p) with p >= 4, cartesian(star, path) and
// corona of connected operands.
Comparison CompareWithOracle(std::string_view spec,
                             const SearchOptions& options = {});

}  // namespace symbreak

#endif  // SYMBREAK_COMPARE_H_
