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


// Command-line front end: build graphs, run the exact solvers, evaluate the
// closed forms, emit constructive labelings and compare formulas with the
// oracle.
//
// Exit codes: 0 success, 1 usage error, 2 computation error or a labeling
// that is not distinguishing, 3 a formula disagreeing with the oracle.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "symbreak/automorphism.h"
#include "symbreak/closed_forms.h"
#include "symbreak/compare.h"
#include "symbreak/constructive.h"
#include "symbreak/error.h"
#include "symbreak/exact_search.h"
#include "symbreak/families.h"
#include "symbreak/graph_io.h"
#include "symbreak/json_export.h"
#include "symbreak/labeling.h"

namespace symbreak {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitMismatch = 3;

struct Flags {
  bool json = false;
  bool dot = false;
  bool elements = false;
  bool timing = false;
  bool csv = false;
  std::uint64_t cap = 5'000'000;
  int max_labels = 12;
  std::int64_t budget_ms = 0;
  std::uint64_t budget_labelings = 0;
  int threads = 1;
  std::uint64_t seed = 0x5eed;
  std::string spec;
  std::string name;
  std::vector<std::string> params;
  std::string kind = "vertex";
  std::string labels;
  int claimed = 0;
  std::string g_spec;
  std::string h_spec;
  int m = 0;
  int n = 0;
  int k_max = 64;
  int max_vector_labels = 64;
  // Hypotheses for corona bound formulas.
  int dprime_g = 0;
  int dprime_h = 0;
  int order_g = 0;
  int order_h = 0;
  bool g_asymmetric = false;
  bool g_number_one = false;
};

SearchOptions ToOptions(const Flags& f) {
  SearchOptions o;
  o.max_labels = f.max_labels;
  o.max_labelings = f.budget_labelings;
  o.time_limit = std::chrono::milliseconds(f.budget_ms);
  o.threads = f.threads;
  o.seed = f.seed;
  o.group_cap = f.cap;
  return o;
}

void PrintJson(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string Join(std::span<const int> values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string Interval(const BoundReport& r) {
  auto end = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  return "[" + end(r.lower) + ", " + end(r.upper) + "]";
}

void PrintBound(const BoundReport& r) {
  std::cout << r.name << " (" << BoundKindName(r.kind)
            << "): formula " << r.formula_value;
  if (r.min_expression_value) {
    std::cout << ", min-expression " << *r.min_expression_value;
  }
  std::cout << ", interval " << Interval(r);
  if (r.mismatch) std::cout << ", MISMATCH";
  std::cout << '\n';
  for (const Assumption& a : r.assumptions) {
    std::cout << "  assumes " << a.name << ": " << (a.holds ? "yes" : "no")
              << '\n';
  }
  if (!r.note.empty()) std::cout << "  note: " << r.note << '\n';
}

int IntParam(const Flags& f, size_t i) {
  if (i >= f.params.size()) {
    throw CLI::ValidationError("formula " + f.name,
                               "missing parameter #" + std::to_string(i + 1));
  }
  try {
    size_t used = 0;
    const int v = std::stoi(f.params[i], &used);
    if (used == f.params[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("formula " + f.name,
                             "bad integer '" + f.params[i] + "'");
}

int RunGen(const Flags& f) {
  const Graph g = ParseFamilySpec(f.spec);
  if (f.json) {
    PrintJson(GraphToJson(g));
  } else if (f.dot) {
    WriteDot(std::cout, g);
  } else {
    WriteEdgeList(std::cout, g);
  }
  return 0;
}

int RunAut(const Flags& f) {
  const Graph g = ParseFamilySpec(f.spec);
  const AutGroup group = EnumerateAutomorphisms(g, f.cap);
  if (f.json) {
    PrintJson(GroupToJson(group, f.elements ? f.cap : 0));
    return 0;
  }
  std::cout << "order " << group.order() << '\n';
  if (f.elements) {
    for (const Permutation& p : group.elements()) {
      std::cout << Join(p.image()) << '\n';
    }
  }
  return 0;
}

int RunSearch(const Flags& f, LabelingKind kind) {
  const Graph g = ParseFamilySpec(f.spec);
  const SearchOptions options = ToOptions(f);
  const SearchResult r = kind == LabelingKind::kVertex
                             ? ExactDistinguishingNumber(g, options)
                             : ExactDistinguishingIndex(g, options);
  if (f.json) {
    PrintJson(SearchResultToJson(r, f.timing));
    return 0;
  }
  const char* symbol = kind == LabelingKind::kVertex ? "D" : "D'";
  std::cout << symbol << "(" << g.family_tag() << ") = ";
  if (r.value) {
    std::cout << *r.value << '\n' << "witness " << Join(r.witness) << '\n';
  } else {
    std::cout << "none (" << r.none_reason << ")\n";
  }
  std::cout << "failure proofs " << Join(r.failure_proofs) << '\n'
            << "group order " << r.group_order << '\n'
            << "tested " << r.labelings_tested << '\n';
  if (f.timing) std::cout << "elapsed " << r.elapsed_ms << " ms\n";
  return 0;
}

int RunFormula(const Flags& f) {
  std::vector<BoundReport> reports;
  std::optional<CoronaIndexBounds> index_bounds;
  const std::string& name = f.name;
  auto aut = [&](const char* label, std::uint64_t value) {
    BoundReport r;
    r.name = label;
    r.formula_value = static_cast<std::int64_t>(value);
    r.lower = r.upper = r.formula_value;
    reports.push_back(r);
  };
  if (name == "friendship-number") {
    reports.push_back(DistNumberFriendship(IntParam(f, 0)));
  } else if (name == "friendship-index") {
    reports.push_back(DistIndexFriendship(IntParam(f, 0)));
  } else if (name == "book-number") {
    reports.push_back(DistNumberBook(IntParam(f, 0)));
  } else if (name == "star-path-index") {
    reports.push_back(DistIndexStarPath(IntParam(f, 0), IntParam(f, 1)));
  } else if (name == "friendship-aut") {
    aut("friendship-aut-order", AutOrderFriendship(IntParam(f, 0)));
  } else if (name == "book-aut") {
    aut("book-aut-order", AutOrderBook(IntParam(f, 0)));
  } else if (name == "corona-aut") {
    aut("corona-aut-product", AutOrderCorona(IntParam(f, 0), IntParam(f, 1)));
  } else if (name == "corona-number") {
    const bool g_k1 = f.params.size() > 2 && f.params[2] == "k1";
    reports.push_back(
        CoronaNumberRelation(IntParam(f, 0), IntParam(f, 1), g_k1));
  } else if (name == "corona-number-special") {
    reports.push_back(CoronaNumberBoundSpecial(IntParam(f, 0), IntParam(f, 1)));
  } else if (name == "corona-index") {
    CoronaIndexInputs in;
    if (f.dprime_g > 0) in.dprime_g = f.dprime_g;
    if (f.dprime_h > 0) in.dprime_h = f.dprime_h;
    in.order_g = f.order_g;
    in.order_h = f.order_h;
    in.g_is_k1 = f.order_g == 1;
    in.h_is_k2 = f.order_h == 2;
    in.g_asymmetric = f.g_asymmetric;
    in.g_number_is_one = f.g_number_one;
    index_bounds = CoronaIndexBoundsFor(in);
  } else {
    throw CLI::ValidationError("formula", "unknown formula '" + name + "'");
  }

  if (index_bounds) {
    if (f.json) {
      PrintJson(CoronaIndexBoundsToJson(*index_bounds));
      return 0;
    }
    for (const BoundReport& r : index_bounds->reports) PrintBound(r);
    for (const OmittedBound& o : index_bounds->omitted) {
      std::cout << o.name << " omitted: " << o.reason << '\n';
    }
    return 0;
  }
  if (f.json) {
    Json arr = Json::array();
    for (const BoundReport& r : reports) arr.push_back(BoundReportToJson(r));
    PrintJson(arr);
  } else {
    for (const BoundReport& r : reports) PrintBound(r);
  }
  return 0;
}

Graph RequireGraph(const std::string& spec, const char* flag) {
  if (spec.empty()) {
    throw CLI::ValidationError(flag, "required for this construction");
  }
  return ParseFamilySpec(spec);
}

int RunConstruct(const Flags& f) {
  const std::string& name = f.name;
  const SearchOptions options = ToOptions(f);
  auto vertex_witness = [&](const Graph& g) {
    return VertexLabeling(ExactDistinguishingNumber(g, options).witness);
  };
  auto edge_witness = [&](const Graph& g) {
    const SearchResult r = ExactDistinguishingIndex(g, options);
    if (!r.value) {
      throw Error(ErrorCode::kWrongRegime,
                  g.family_tag() + " has no distinguishing edge labeling");
    }
    return EdgeLabeling(r.witness);
  };

  ConstructedLabeling c;
  if (name == "friendship-vertex") {
    c = LabelFriendshipVertices(IntParam(f, 0));
  } else if (name == "friendship-edge") {
    c = LabelFriendshipEdges(IntParam(f, 0));
  } else if (name == "book-vertex") {
    c = LabelBookVertices(IntParam(f, 0));
  } else {
    const Graph h = RequireGraph(f.h_spec, "--H");
    if (name == "corona-apex") {
      c = LabelCoronaVerticesApex(h, vertex_witness(h));
    } else {
      const Graph g = RequireGraph(f.g_spec, "--G");
      if (name == "corona-equal") {
        c = LabelCoronaVerticesEqualRegime(g, h, vertex_witness(g),
                                           vertex_witness(h));
      } else if (name == "corona-special") {
        c = LabelCoronaVerticesSpecialRegime(g, h, vertex_witness(g),
                                             vertex_witness(h));
      } else if (name == "corona-pairs") {
        c = LabelCoronaEdgesPairScheme(g, h, edge_witness(g), edge_witness(h));
      } else if (name == "corona-asymmetric-base") {
        c = LabelCoronaEdgesAsymmetricBase(g, h, options);
      } else if (name == "corona-staircase") {
        c = LabelCoronaEdgesStaircase(g, h);
      } else if (name == "corona-count-vectors") {
        c = LabelCoronaEdgesCountVectors(g, h, f.max_vector_labels);
      } else {
        throw CLI::ValidationError("construct",
                                   "unknown construction '" + name + "'");
      }
    }
  }

  if (f.json) {
    PrintJson(ConstructedToJson(c));
  } else if (f.dot) {
    if (c.kind == LabelingKind::kVertex) {
      WriteDot(std::cout, c.graph, std::span<const int>(c.labels));
    } else {
      WriteDot(std::cout, c.graph, std::nullopt, std::span<const int>(c.labels));
    }
  } else {
    std::cout << c.scheme << " on " << c.graph.family_tag() << '\n'
              << LabelingKindName(c.kind) << " labels " << Join(c.labels)
              << '\n'
              << "label count " << c.label_count << " (verified)\n";
  }
  return 0;
}

int RunVerify(const Flags& f) {
  const Graph g = ParseFamilySpec(f.spec);
  const LabelingKind kind = ParseLabelingKind(f.kind);
  const std::vector<int> labels = ParseLabelList(f.labels);
  const int expected =
      kind == LabelingKind::kVertex ? g.vertex_count() : g.edge_count();
  if (static_cast<int>(labels.size()) != expected) {
    throw CLI::ValidationError(
        "--labels", "expected " + std::to_string(expected) + " labels, got " +
                        std::to_string(labels.size()));
  }
  if (f.claimed > 0) {
    const ClaimReport r =
        VerifyClaimedValue(g, kind, f.claimed, labels, ToOptions(f));
    if (f.json) {
      PrintJson(ClaimReportToJson(r));
    } else {
      std::cout << "claimed " << r.claimed << ": upper bound "
                << (r.upper_bound_certified ? "certified" : "not certified")
                << ", lower bound "
                << (r.lower_bound_certified ? "certified" : "not certified")
                << '\n';
      if (!r.detail.empty()) std::cout << r.detail << '\n';
    }
    return 0;
  }
  const bool ok = kind == LabelingKind::kVertex
                      ? IsVertexDistinguishing(g, VertexLabeling(labels))
                      : IsEdgeDistinguishing(g, EdgeLabeling(labels));
  if (f.json) {
    PrintJson({{"kind", LabelingKindName(kind)}, {"distinguishing", ok}});
  } else {
    std::cout << (ok ? "distinguishing" : "not distinguishing") << '\n';
  }
  return ok ? 0 : kExitComputation;
}

int RunCompare(const Flags& f) {
  const Comparison c = CompareWithOracle(f.spec, ToOptions(f));
  if (f.json) {
    PrintJson(ComparisonToJson(c));
  } else {
    std::cout << c.graph << '\n';
    for (const ComparisonRow& row : c.rows) {
      std::cout << "  " << row.quantity << " " << row.bound.name
                << ": formula " << Interval(row.bound) << ", oracle "
                << (row.oracle ? std::to_string(*row.oracle) : "none")
                << ", " << (row.agree ? "agree" : "DISAGREE") << '\n';
    }
    for (const std::string& note : c.notes) {
      std::cout << "  note: " << note << '\n';
    }
  }
  return c.all_agree() ? 0 : kExitMismatch;
}

int RunTable(const Flags& f) {
  if (f.name != "corona-edge") {
    throw CLI::ValidationError("table", "unknown table '" + f.name + "'");
  }
  CoronaEdgeBoundTable table;
  int status = 0;
  try {
    table = MakeCoronaEdgeBoundTable(f.m, f.n, f.k_max);
  } catch (const PartialTableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    table = e.table();
    status = kExitComputation;
  }
  if (f.json) {
    PrintJson(TableToJson(table));
  } else if (f.csv) {
    WriteTableCsv(std::cout, table);
  } else {
    WriteTableCsv(std::cout, table);
    if (status == 0) std::cout << "threshold " << table.threshold << '\n';
  }
  return status;
}

void AddSearchFlags(CLI::App* sub, Flags& f) {
  sub->add_option("--max-labels", f.max_labels, "Largest r to try")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget-ms", f.budget_ms, "Wall-clock budget (0 = none)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--budget-labelings", f.budget_labelings,
                  "Search-node budget (0 = none)");
  sub->add_option("--threads", f.threads,
                  "Worker threads (default: SYMBREAK_THREADS, else 1)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "Seed for randomized heuristics");
  sub->add_flag("--timing", f.timing, "Report elapsed time");
}

// Default thread count from SYMBREAK_THREADS; the flag overrides it.
std::optional<int> ThreadsFromEnvironment(Flags& f) {
  const char* env = std::getenv("SYMBREAK_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string_view text(env);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
    std::cerr << "SYMBREAK_THREADS: expected a positive integer, got '" << text << "'\n";
    return std::nullopt;
  }
  f.threads = value;
  return value;
}

int Run(int argc, char** argv) {
  CLI::App app{"Distinguishing numbers and indices of graphs"};
  app.require_subcommand(1);
  Flags f;
  if (!ThreadsFromEnvironment(f)) return 1;
  app.add_flag("--json", f.json, "JSON output")->configurable(false);

  auto spec_arg = [&](CLI::App* sub) {
    sub->add_option("spec", f.spec, "Graph spec, e.g. friendship:3")
        ->required();
  };
  auto* gen = app.add_subcommand("gen", "Print a graph");
  spec_arg(gen);
  gen->add_flag("--dot", f.dot, "Graphviz output");

  auto* aut = app.add_subcommand("aut", "Automorphism group order");
  spec_arg(aut);
  aut->add_flag("--elements", f.elements, "List every element");
  aut->add_option("--cap", f.cap, "Largest group to enumerate");

  auto* dnum = app.add_subcommand("dnum", "Exact distinguishing number");
  spec_arg(dnum);
  AddSearchFlags(dnum, f);
  dnum->add_option("--cap", f.cap, "Largest group to enumerate");
  auto* dindex = app.add_subcommand("dindex", "Exact distinguishing index");
  spec_arg(dindex);
  AddSearchFlags(dindex, f);
  dindex->add_option("--cap", f.cap, "Largest group to enumerate");

  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("name", f.name, "Formula name")->required();
  formula->add_option("params", f.params, "Integer parameters");
  formula->add_option("--dprime-g", f.dprime_g, "D'(G), 0 if undefined");
  formula->add_option("--dprime-h", f.dprime_h, "D'(H), 0 if undefined");
  formula->add_option("--order-g", f.order_g, "|V(G)|");
  formula->add_option("--order-h", f.order_h, "|V(H)|");
  formula->add_flag("--g-asymmetric", f.g_asymmetric, "|Aut(G)| = 1");
  formula->add_flag("--g-number-one", f.g_number_one, "D(G) = 1");

  auto* construct = app.add_subcommand("construct", "Constructive labeling");
  construct->add_option("name", f.name, "Construction name")->required();
  construct->add_option("params", f.params, "Integer parameters");
  construct->add_option("--G", f.g_spec, "Spec of G for corona schemes");
  construct->add_option("--H", f.h_spec, "Spec of H for corona schemes");
  construct->add_option("--k", f.max_vector_labels,
                        "Label cap for count vectors");
  construct->add_flag("--dot", f.dot, "Graphviz output");
  AddSearchFlags(construct, f);

  auto* verify = app.add_subcommand("verify", "Check a witness labeling");
  spec_arg(verify);
  verify->add_option("--kind", f.kind, "vertex or edge")
      ->check(CLI::IsMember({"vertex", "edge"}));
  verify->add_option("--labels", f.labels, "Comma-separated labels")
      ->required();
  verify->add_option("--claimed", f.claimed,
                     "Also certify this value (upper and lower bound)");
  AddSearchFlags(verify, f);

  auto* compare = app.add_subcommand("compare", "Formula versus oracle");
  spec_arg(compare);
  AddSearchFlags(compare, f);

  auto* table = app.add_subcommand("table", "Count-vector table");
  table->add_option("name", f.name, "Table name (corona-edge)")->required();
  table->add_option("--m", f.m, "|V(H)|")->required();
  table->add_option("--n", f.n, "|V(G)|")->required();
  table->add_option("--k-max", f.k_max, "Largest r computed");
  table->add_flag("--csv", f.csv, "CSV output");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_flag("--json", f.json, "JSON output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, std::function<int()>>> handlers = {
      {gen, [&] { return RunGen(f); }},
      {aut, [&] { return RunAut(f); }},
      {dnum, [&] { return RunSearch(f, LabelingKind::kVertex); }},
      {dindex, [&] { return RunSearch(f, LabelingKind::kEdge); }},
      {formula, [&] { return RunFormula(f); }},
      {construct, [&] { return RunConstruct(f); }},
      {verify, [&] { return RunVerify(f); }},
      {compare, [&] { return RunCompare(f); }},
      {table, [&] { return RunTable(f); }},
  };
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler();
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool usage = e.code() == ErrorCode::kParse ||
                       e.code() == ErrorCode::kInvalidParameter;
    return usage ? kExitUsage : kExitComputation;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace symbreak

int main(int argc, char** argv) { return symbreak::Run(argc, argv); }
