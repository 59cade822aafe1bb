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

#include "symbreak/graph_io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "symbreak/error.h"
#include "symbreak/families.h"

namespace symbreak {
namespace {

[[noreturn]] void ThrowParse(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<int> ParseInt(std::string_view s) {
  s = Trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

int RequireInt(std::string_view s, std::string_view spec) {
  std::optional<int> v = ParseInt(s);
  if (!v.has_value()) {
    ThrowParse("expected integer parameter in '" + std::string(spec) +
               "', got '" + std::string(s) + "'");
  }
  return *v;
}

// Returns the two operands of "name(a,b)". The split point is the first
// top-level comma at which both halves parse, so operands such as
// "biclique:2,3" work.
std::pair<Graph, Graph> ParseBinary(std::string_view inner,
                                    std::string_view spec) {
  int depth = 0;
  std::optional<Error> last_error;
  for (size_t i = 0; i < inner.size(); ++i) {
    char c = inner[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != ',' || depth != 0) continue;
    try {
      Graph left = ParseFamilySpec(inner.substr(0, i));
      Graph right = ParseFamilySpec(inner.substr(i + 1));
      return {std::move(left), std::move(right)};
    } catch (const Error& e) {
      last_error = e;
    }
  }
  if (last_error.has_value() &&
      last_error->code() == ErrorCode::kInvalidParameter) {
    throw *last_error;
  }
  ThrowParse("cannot split operands of '" + std::string(spec) + "'");
}

}  // namespace

std::optional<BinarySpec> ParseBinarySpec(std::string_view spec) {
  spec = Trim(spec);
  for (std::string_view op : {"cartesian", "corona"}) {
    if (spec.starts_with(op) && spec.size() > op.size() &&
        spec[op.size()] == '(') {
      if (spec.back() != ')') {
        ThrowParse("missing ')' in '" + std::string(spec) + "'");
      }
      std::string_view inner =
          spec.substr(op.size() + 1, spec.size() - op.size() - 2);
      auto [g, h] = ParseBinary(inner, spec);
      return BinarySpec{std::string(op), std::move(g), std::move(h)};
    }
  }
  return std::nullopt;
}

Graph ParseFamilySpec(std::string_view spec) {
  spec = Trim(spec);
  if (auto binary = ParseBinarySpec(spec)) {
    return binary->op == "cartesian"
               ? CartesianProduct(binary->left, binary->right)
               : Corona(binary->left, binary->right);
  }

  const size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    ThrowParse("unknown graph spec '" + std::string(spec) + "'");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (name == "file") return ReadEdgeListFile(std::string(Trim(args)));
  if (name == "biclique") {
    const size_t comma = args.find(',');
    if (comma == std::string_view::npos) {
      ThrowParse("biclique needs '<p>,<q>' in '" + std::string(spec) + "'");
    }
    return MakeCompleteBipartite(RequireInt(args.substr(0, comma), spec),
                                 RequireInt(args.substr(comma + 1), spec));
  }
  const int n = RequireInt(args, spec);
  if (name == "path") return MakePath(n);
  if (name == "cycle") return MakeCycle(n);
  if (name == "complete") return MakeComplete(n);
  if (name == "star") return MakeStar(n);
  if (name == "friendship") return MakeFriendship(n);
  if (name == "book") return MakeBook(n);
  ThrowParse("unknown graph family '" + std::string(name) + "'");
}

Graph ReadEdgeList(std::istream& in, const std::string& family_tag) {
  std::optional<int> vertex_count;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (size_t hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    std::istringstream fields{std::string(view)};
    std::string kind;
    fields >> kind;
    auto bad = [&](const std::string& why) {
      ThrowParse("line " + std::to_string(line_no) + ": " + why + " ('" +
                 std::string(view) + "')");
    };
    if (kind == "p") {
      int n = -1;
      if (!(fields >> n) || n < 0 || vertex_count.has_value()) {
        bad("bad or repeated 'p' line");
      }
      vertex_count = n;
    } else if (kind == "e") {
      int u = -1, v = -1;
      if (!vertex_count.has_value()) bad("edge before 'p' line");
      if (!(fields >> u >> v)) bad("bad edge line");
      edges.push_back({u, v});
    } else {
      bad("unknown record '" + kind + "'");
    }
    std::string extra;
    if (fields >> extra) bad("trailing token '" + extra + "'");
  }
  if (!vertex_count.has_value()) ThrowParse("missing 'p <vertex_count>' line");
  return Graph(*vertex_count, std::move(edges), family_tag);
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) ThrowParse("cannot open '" + path + "'");
  return ReadEdgeList(in, "file(" + path + ")");
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  if (!g.family_tag().empty()) out << "# " << g.family_tag() << "\n";
  out << "p " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
}

namespace {

// Color-blind friendly qualitative palette, cycled for large label counts.
constexpr const char* kPalette[] = {"#ffffff", "#e69f00", "#56b4e9",
                                    "#009e73", "#f0e442", "#0072b2",
                                    "#d55e00", "#cc79a7", "#999999"};

const char* PaletteColor(int label) {
  constexpr int kSize = sizeof(kPalette) / sizeof(kPalette[0]);
  return kPalette[((label - 1) % kSize + kSize) % kSize];
}

}  // namespace

void WriteDot(std::ostream& out, const Graph& g,
              std::optional<std::span<const int>> vertex_labels,
              std::optional<std::span<const int>> edge_labels) {
  out << "graph G {\n";
  if (!g.family_tag().empty()) {
    out << "  label=\"" << g.family_tag() << "\";\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (vertex_labels.has_value()) {
      int l = (*vertex_labels)[v];
      out << " [label=\"" << v << ":" << l
          << "\", style=filled, fillcolor=\"" << PaletteColor(l) << "\"]";
    }
    out << ";\n";
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out << "  " << e.u << " -- " << e.v;
    if (edge_labels.has_value()) {
      int l = (*edge_labels)[i];
      out << " [label=\"" << l << "\", color=\""
          << (l == 1 ? "#000000" : PaletteColor(l)) << "\", penwidth=2]";
    }
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace symbreak
