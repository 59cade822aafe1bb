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


#include "symbreak/json_export.h"

#include <ostream>

namespace symbreak {
namespace {

template <typename T>
Json OptionalToJson(const std::optional<T>& v) {
  return v.has_value() ? Json(*v) : Json(nullptr);
}

}  // namespace

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  Json out;
  out["family"] = g.family_tag();
  out["vertex_count"] = g.vertex_count();
  out["edges"] = std::move(edges);
  out["connected"] = g.connected();
  if (!g.roles().empty()) {
    out["roles"] = {{"vertices", g.roles().vertices()},
                    {"edges", g.roles().edges()}};
  }
  return out;
}

Json GroupToJson(const AutGroup& group, std::uint64_t element_limit) {
  Json out;
  out["order"] = group.order();
  if (group.order() <= element_limit) {
    Json elements = Json::array();
    for (const Permutation& p : group.elements()) {
      elements.push_back(std::vector<int>(p.image().begin(), p.image().end()));
    }
    out["elements"] = std::move(elements);
  }
  return out;
}

Json SearchResultToJson(const SearchResult& r, bool with_timing) {
  Json out;
  out["kind"] = LabelingKindName(r.kind);
  out["value"] = OptionalToJson(r.value);
  out["witness"] = r.witness;
  if (!r.none_reason.empty()) out["none_reason"] = r.none_reason;
  out["tested"] = r.labelings_tested;
  out["automorphisms_checked"] = r.automorphisms_checked;
  out["group_order"] = r.group_order;
  out["failure_proofs"] = r.failure_proofs;
  out["elapsed_ms"] = with_timing ? Json(r.elapsed_ms) : Json(nullptr);
  out["budget"] = {{"labelings", r.budget_labelings}, {"ms", r.budget_ms}};
  return out;
}

Json ClaimReportToJson(const ClaimReport& r) {
  return {{"kind", LabelingKindName(r.kind)},
          {"claimed", r.claimed},
          {"upper_bound_certified", r.upper_bound_certified},
          {"lower_bound_certified", r.lower_bound_certified},
          {"detail", r.detail},
          {"tested", r.labelings_tested}};
}

Json BoundReportToJson(const BoundReport& r) {
  Json assumptions = Json::array();
  for (const Assumption& a : r.assumptions) {
    assumptions.push_back({{"name", a.name}, {"holds", a.holds}});
  }
  Json out;
  out["name"] = r.name;
  out["kind"] = BoundKindName(r.kind);
  out["formula_value"] = r.formula_value;
  out["min_expression_value"] = OptionalToJson(r.min_expression_value);
  out["mismatch"] = r.mismatch;
  out["lower"] = OptionalToJson(r.lower);
  out["upper"] = OptionalToJson(r.upper);
  out["assumptions"] = std::move(assumptions);
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json CoronaIndexBoundsToJson(const CoronaIndexBounds& bounds) {
  Json reports = Json::array();
  for (const BoundReport& r : bounds.reports) {
    reports.push_back(BoundReportToJson(r));
  }
  Json omitted = Json::array();
  for (const OmittedBound& o : bounds.omitted) {
    omitted.push_back({{"name", o.name}, {"reason", o.reason}});
  }
  return {{"reports", std::move(reports)}, {"omitted", std::move(omitted)}};
}

Json TableToJson(const CoronaEdgeBoundTable& table) {
  Json rows = Json::array();
  std::int64_t cumulative = 0;
  for (size_t i = 0; i < table.x.size(); ++i) {
    cumulative += table.y[i];
    rows.push_back({{"r", i + 1},
                    {"x", table.x[i]},
                    {"y", table.y[i]},
                    {"cumulative_y", cumulative}});
  }
  return {{"m", table.m},
          {"n", table.n},
          {"rows", std::move(rows)},
          {"threshold", table.threshold}};
}

void WriteTableCsv(std::ostream& out, const CoronaEdgeBoundTable& table) {
  out << "r,x,y,cumulative_y\n";
  std::int64_t cumulative = 0;
  for (size_t i = 0; i < table.x.size(); ++i) {
    cumulative += table.y[i];
    out << i + 1 << ',' << table.x[i] << ',' << table.y[i] << ',' << cumulative
        << '\n';
  }
}

Json ConstructedToJson(const ConstructedLabeling& c) {
  return {{"scheme", c.scheme},
          {"graph", c.graph.family_tag()},
          {"kind", LabelingKindName(c.kind)},
          {"label_count", c.label_count},
          {"labels", c.labels},
          {"verified", true}};
}

Json ComparisonToJson(const Comparison& c) {
  Json rows = Json::array();
  for (const ComparisonRow& row : c.rows) {
    rows.push_back({{"quantity", row.quantity},
                    {"bound", BoundReportToJson(row.bound)},
                    {"oracle", OptionalToJson(row.oracle)},
                    {"agree", row.agree}});
  }
  return {{"graph", c.graph},
          {"rows", std::move(rows)},
          {"notes", c.notes},
          {"agree", c.all_agree()}};
}

}  // namespace symbreak
