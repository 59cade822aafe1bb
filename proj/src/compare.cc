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


#include "symbreak/compare.h"

#include <algorithm>
#include <charconv>

#include "symbreak/automorphism.h"
#include "symbreak/error.h"
#include "symbreak/graph_io.h"

namespace symbreak {
namespace {

struct Tag {
  std::string name;
  std::vector<int> args;
};

// "friendship(3)" -> {"friendship", {3}}; nullopt for nested tags.
std::optional<Tag> ParseTag(const std::string& tag) {
  const size_t open = tag.find('(');
  if (open == std::string::npos || tag.back() != ')') return std::nullopt;
  Tag out{tag.substr(0, open), {}};
  std::string_view rest(tag.data() + open + 1, tag.size() - open - 2);
  while (!rest.empty()) {
    const size_t comma = std::min(rest.find(','), rest.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + comma, value);
    if (ec != std::errc() || ptr != rest.data() + comma) return std::nullopt;
    out.args.push_back(value);
    rest.remove_prefix(std::min(comma + 1, rest.size()));
  }
  return out;
}

BoundReport Known(std::string name, std::int64_t value) {
  BoundReport r;
  r.name = std::move(name);
  r.formula_value = value;
  r.lower = value;
  r.upper = value;
  return r;
}

std::optional<std::int64_t> OracleNumber(const Graph& g,
                                         const SearchOptions& options) {
  return ExactDistinguishingNumber(g, options).value;
}

std::optional<std::int64_t> OracleIndex(const Graph& g,
                                        const SearchOptions& options) {
  if (g.edge_count() == 0) return std::nullopt;
  return ExactDistinguishingIndex(g, options).value;
}

class Collector {
 public:
  Collector(Comparison& out, const SearchOptions& options)
      : out_(out), options_(options) {}

  void Add(std::string quantity, BoundReport bound,
           std::optional<std::int64_t> oracle) {
    ComparisonRow row{std::move(quantity), std::move(bound), oracle, false};
    row.agree = oracle.has_value() && row.bound.Admits(*oracle);
    out_.rows.push_back(std::move(row));
  }

  void AddNumber(const Graph& g, BoundReport bound) {
    if (!number_done_) {
      number_ = OracleNumber(g, options_);
      number_done_ = true;
    }
    Add("D", std::move(bound), number_);
  }

  void AddIndex(const Graph& g, BoundReport bound) {
    if (!index_done_) {
      index_ = OracleIndex(g, options_);
      index_done_ = true;
    }
    Add("D'", std::move(bound), index_);
  }

  void AddAutOrder(const Graph& g, BoundReport bound) {
    try {
      const auto order = static_cast<std::int64_t>(
          EnumerateAutomorphisms(g, options_.group_cap).order());
      Add("|Aut|", std::move(bound), order);
    } catch (const GroupTooLargeError& e) {
      out_.notes.push_back(bound.name + ": " + e.what());
    }
  }

  void Note(std::string note) { out_.notes.push_back(std::move(note)); }

 private:
  Comparison& out_;
  const SearchOptions& options_;
  std::optional<std::int64_t> number_;
  bool number_done_ = false;
  std::optional<std::int64_t> index_;
  bool index_done_ = false;
};

void CompareCorona(const Graph& c, const Graph& g, const Graph& h,
                   const SearchOptions& options, Collector& rows) {
  if (!g.connected() || !h.connected()) {
    rows.Note("corona bounds assume connected operands");
    return;
  }
  const int ng = g.vertex_count();
  const int nh = h.vertex_count();
  const std::uint64_t aut_g = EnumerateAutomorphisms(g, options.group_cap).order();
  const std::uint64_t aut_h = EnumerateAutomorphisms(h, options.group_cap).order();
  if (ng >= 2) {
    rows.AddAutOrder(c, Known("corona-aut-product",
                              static_cast<std::int64_t>(
                                  AutOrderCorona(aut_g, aut_h))));
    rows.AddAutOrder(c, Known("corona-aut-wreath",
                              static_cast<std::int64_t>(
                                  AutOrderCoronaWreath(aut_g, aut_h, ng))));
  }

  const auto dg = OracleNumber(g, options);
  const auto dh = OracleNumber(h, options);
  rows.AddNumber(c, CoronaNumberRelation(static_cast<int>(*dg),
                                         static_cast<int>(*dh), ng == 1));

  CoronaIndexInputs in;
  in.order_g = ng;
  in.order_h = nh;
  in.g_is_k1 = ng == 1;
  in.h_is_k2 = nh == 2;
  in.g_asymmetric = aut_g == 1;
  in.g_number_is_one = *dg == 1;
  if (auto v = OracleIndex(g, options)) in.dprime_g = static_cast<int>(*v);
  if (auto v = OracleIndex(h, options)) in.dprime_h = static_cast<int>(*v);
  const CoronaIndexBounds bounds = CoronaIndexBoundsFor(in);
  for (const BoundReport& r : bounds.reports) rows.AddIndex(c, r);
  for (const OmittedBound& o : bounds.omitted) {
    rows.Note(o.name + " omitted: " + o.reason);
  }
}

}  // namespace

bool Comparison::all_agree() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const ComparisonRow& r) { return r.agree; });
}

Comparison CompareWithOracle(std::string_view spec,
                             const SearchOptions& options) {
  const Graph g = ParseFamilySpec(spec);
  Comparison out;
  out.graph = g.family_tag().empty() ? std::string(spec) : g.family_tag();
  Collector rows(out, options);

  if (auto binary = ParseBinarySpec(spec)) {
    if (binary->op == "corona") {
      CompareCorona(g, binary->left, binary->right, options, rows);
      return out;
    }
    const auto star = ParseTag(binary->left.family_tag());
    const auto path = ParseTag(binary->right.family_tag());
    if (star && path && star->name == "star" && path->name == "path" &&
        star->args[0] >= 2 && path->args[0] >= 2) {
      rows.AddIndex(g, DistIndexStarPath(star->args[0], path->args[0]));
    } else {
      rows.Note("no formula for this product");
    }
    return out;
  }

  const auto tag = ParseTag(g.family_tag());
  if (!tag) {
    rows.Note("no formula for this graph");
    return out;
  }
  const int n = tag->args.empty() ? 0 : tag->args[0];
  if (tag->name == "friendship") {
    rows.AddAutOrder(g, Known("friendship-aut-order", static_cast<std::int64_t>(
                                                          AutOrderFriendship(n))));
    rows.AddNumber(g, DistNumberFriendship(n));
    rows.AddIndex(g, DistIndexFriendship(n));
  } else if (tag->name == "book") {
    rows.AddAutOrder(g, Known("book-aut-order",
                              static_cast<std::int64_t>(AutOrderBook(n))));
    rows.AddNumber(g, DistNumberBook(n));
    rows.AddIndex(g, DistIndexStarPath(n, 2));
  } else if (tag->name == "path") {
    if (n >= 2) rows.AddNumber(g, Known("path-number", 2));
    if (n >= 3) rows.AddIndex(g, Known("path-index", 2));
    if (n < 3) rows.Note("known values cover paths with n >= 3");
  } else if (tag->name == "cycle") {
    const int value = n <= 5 ? 3 : 2;
    rows.AddNumber(g, Known("cycle-number", value));
    rows.AddIndex(g, Known("cycle-index", value));
  } else if (tag->name == "complete") {
    rows.AddNumber(g, Known("complete-number", n));
  } else if (tag->name == "biclique" && tag->args.size() == 2 &&
             tag->args[0] == tag->args[1] && n >= 4) {
    rows.AddNumber(g, Known("biclique-number", n + 1));
    rows.AddIndex(g, Known("biclique-index", 2));
  } else {
    rows.Note("no formula for " + g.family_tag());
  }
  return out;
}

}  // namespace symbreak
