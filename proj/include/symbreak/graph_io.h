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

#ifndef SYMBREAK_GRAPH_IO_H_
#define SYMBREAK_GRAPH_IO_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "symbreak/graph.h"

namespace symbreak {

// Builds a graph from the family mini-language:
//   path:<n> cycle:<n> complete:<n> star:<n> biclique:<p>,<q>
//   friendship:<n> book:<n> cartesian(<spec>,<spec>) corona(<spec>,<spec>)
//   file:<path>
// Throws parse-error naming the offending token, or invalid-parameter when
// the family rejects its parameters.
Graph ParseFamilySpec(std::string_view spec);

// For "<op>(<spec>,<spec>)" with op "cartesian" or "corona", the two parsed
// operands; nullopt for any other spec.
struct BinarySpec {
  std::string op;
  Graph left;
  Graph right;
};
std::optional<BinarySpec> ParseBinarySpec(std::string_view spec);

// Edge-list format: a line "p <vertex_count>", then lines "e <u> <v>" with
// 0-based endpoints. '#' starts a comment; blank lines are ignored.
Graph ReadEdgeList(std::istream& in, const std::string& family_tag = "");
Graph ReadEdgeListFile(const std::string& path);
void WriteEdgeList(std::ostream& out, const Graph& g);

// Graphviz export. Labels, when given, become node/edge "label" attributes and
// fill colors so distinct labels are visually distinct.
void WriteDot(std::ostream& out, const Graph& g,
              std::optional<std::span<const int>> vertex_labels = std::nullopt,
              std::optional<std::span<const int>> edge_labels = std::nullopt);

}  // namespace symbreak

#endif  // SYMBREAK_GRAPH_IO_H_
