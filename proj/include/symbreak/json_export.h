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


#ifndef SYMBREAK_JSON_EXPORT_H_
#define SYMBREAK_JSON_EXPORT_H_

#include <cstdint>
#include <iosfwd>

#include "json.hpp"
#include "symbreak/automorphism.h"
#include "symbreak/closed_forms.h"
#include "symbreak/compare.h"
#include "symbreak/constructive.h"
#include "symbreak/exact_search.h"
#include "symbreak/graph.h"

namespace symbreak {

using Json = nlohmann::ordered_json;

Json GraphToJson(const Graph& g);
// {"order": n, "elements": [[...], ...]}; elements are omitted when the order
// exceeds `element_limit`.
Json GroupToJson(const AutGroup& group, std::uint64_t element_limit);
// {kind, value|null, witness, tested, group_order, failure_proofs,
// elapsed_ms}. elapsed_ms is null unless `with_timing`, which keeps the
// output byte-identical across runs.
Json SearchResultToJson(const SearchResult& r, bool with_timing);
Json ClaimReportToJson(const ClaimReport& r);
Json BoundReportToJson(const BoundReport& r);
Json CoronaIndexBoundsToJson(const CoronaIndexBounds& bounds);
Json TableToJson(const CoronaEdgeBoundTable& table);
// Header "r,x,y,cumulative_y".
void WriteTableCsv(std::ostream& out, const CoronaEdgeBoundTable& table);
Json ConstructedToJson(const ConstructedLabeling& c);
Json ComparisonToJson(const Comparison& c);

}  // namespace symbreak

#endif  // SYMBREAK_JSON_EXPORT_H_
