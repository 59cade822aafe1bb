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


#include "symbreak/constructive.h"

#include <algorithm>
#include <functional>

#include "symbreak/automorphism.h"
#include "symbreak/error.h"
#include "symbreak/families.h"

namespace symbreak {
namespace {

void RequireCount(int count) {
  if (count < 0) ThrowInvalidParameter("term count must be >= 0");
}

bool IsAsymmetric(const Graph& g) {
  return !FindLabelPreservingAutomorphism(g, {}, {}).has_value();
}

void RequireSize(const Labeling& l, int expected, const char* what) {
  if (l.size() != expected) {
    ThrowInvalidParameter(std::string(what) + " has " +
                          std::to_string(l.size()) + " labels, expected " +
                          std::to_string(expected));
  }
}

void RequireVertexWitness(const Graph& g, const VertexLabeling& l,
                          const char* what) {
  RequireSize(l, g.vertex_count(), what);
  if (!IsVertexDistinguishing(g, l)) {
    throw Error(ErrorCode::kInvalidWitness,
                std::string(what) + " is not distinguishing");
  }
}

void RequireEdgeWitness(const Graph& g, const EdgeLabeling& l,
                        const char* what) {
  RequireSize(l, g.edge_count(), what);
  if (!IsEdgeDistinguishing(g, l)) {
    throw Error(ErrorCode::kInvalidWitness,
                std::string(what) + " is not distinguishing");
  }
}

[[noreturn]] void WrongRegime(const std::string& why) {
  throw Error(ErrorCode::kWrongRegime, why);
}

ConstructedLabeling Finish(Graph graph, LabelingKind kind,
                           std::vector<int> labels, std::string scheme) {
  ConstructedLabeling out;
  const Labeling checked(labels);
  const bool ok = kind == LabelingKind::kVertex
                      ? IsVertexDistinguishing(graph, VertexLabeling(labels))
                      : IsEdgeDistinguishing(graph, EdgeLabeling(labels));
  if (!ok) {
    throw Error(ErrorCode::kConstructionFailure,
                scheme + " produced a labeling of " + graph.family_tag() +
                    " that a non-trivial automorphism preserves");
  }
  out.label_count = checked.MaxLabel();
  out.graph = std::move(graph);
  out.kind = kind;
  out.labels = std::move(labels);
  out.scheme = std::move(scheme);
  return out;
}

int MiddleEdge(const Graph& corona, const CoronaLayout& layout, int i, int k) {
  return *corona.EdgeIndex(i, layout.CopyVertex(i, k));
}

int CopyEdge(const Graph& corona, const CoronaLayout& layout, int i,
             const Edge& e) {
  return *corona.EdgeIndex(layout.CopyVertex(i, e.u), layout.CopyVertex(i, e.v));
}

// Emits terms from `stage(L, emit)` for L = first, first+1, ... until `count`
// terms are collected.
template <typename T>
std::vector<T> Collect(int count, int first,
                       const std::function<void(int, std::vector<T>&)>& stage) {
  RequireCount(count);
  std::vector<T> out;
  for (int label = first; static_cast<int>(out.size()) < count; ++label) {
    stage(label, out);
  }
  out.resize(count);
  return out;
}

}  // namespace

std::vector<LabelPair> FriendshipVertexPairs(int count) {
  return Collect<LabelPair>(count, 2, [](int l, std::vector<LabelPair>& out) {
    if (l == 2) {
      out.push_back({1, 2});
    } else if (l == 3) {
      out.push_back({2, 3});
      out.push_back({3, 1});
    } else {
      out.push_back({l - 1, l});
      for (int a = 1; a <= l - 2; ++a) out.push_back({l, a});
    }
  });
}

std::vector<LabelTriple> FriendshipEdgeTriples(int count) {
  return Collect<LabelTriple>(count, 2,
                              [](int l, std::vector<LabelTriple>& out) {
    for (int z = 1; z < l; ++z) {
      for (int a = 1; a < l; ++a) out.push_back({a, l, z});
    }
    for (int a = 1; a <= l; ++a) {
      for (int b = a + 1; b <= l; ++b) out.push_back({a, b, l});
    }
  });
}

std::vector<LabelPair> BookPagePairs(int count) {
  return Collect<LabelPair>(count, 1, [](int l, std::vector<LabelPair>& out) {
    if (l == 1) {
      out.push_back({1, 1});
    } else if (l == 2) {
      out.insert(out.end(), {{2, 1}, {2, 2}, {1, 2}});
    } else {
      for (int b = 1; b <= l; ++b) out.push_back({l, b});
      for (int a = 1; a < l; ++a) out.push_back({a, l});
    }
  });
}

std::vector<LabelPair> CoronaEdgePairs(int count) {
  return Collect<LabelPair>(count, 1, [](int l, std::vector<LabelPair>& out) {
    if (l == 1) {
      out.push_back({1, 1});
    } else if (l == 2) {
      out.insert(out.end(), {{1, 2}, {2, 1}, {2, 2}});
    } else if (l == 3) {
      out.insert(out.end(), {{1, 3}, {2, 3}, {3, 3}, {3, 1}, {3, 2}});
    } else {
      for (int b = 1; b <= l; ++b) out.push_back({l, b});
      for (int a = 1; a < l; ++a) out.push_back({a, l});
    }
  });
}

std::vector<std::vector<int>> CountVectors(int m, int count) {
  if (m < 1) ThrowInvalidParameter("count vectors need m >= 1");
  RequireCount(count);
  std::vector<std::vector<int>> out;
  int top = 0;
  for (int r = 1; static_cast<int>(out.size()) < count; ++r) {
    top = r;
    // All length-r vectors summing to m with the last entry >= 1.
    std::vector<std::vector<int>> stage;
    std::vector<int> v(r, 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
      if (pos == r - 1) {
        if (left >= 1) {
          v[pos] = left;
          stage.push_back(v);
        }
        return;
      }
      for (int c = left; c >= 0; --c) {
        v[pos] = c;
        fill(pos + 1, left - c);
      }
    };
    fill(0, m);
    std::stable_sort(stage.begin(), stage.end(),
                     [r](const std::vector<int>& a, const std::vector<int>& b) {
                       if (a[r - 1] != b[r - 1]) return a[r - 1] < b[r - 1];
                       return std::lexicographical_compare(
                           b.begin(), b.end() - 1, a.begin(), a.end() - 1);
                     });
    for (auto& s : stage) {
      if (static_cast<int>(out.size()) == count) break;
      out.push_back(std::move(s));
    }
  }
  for (auto& v : out) v.resize(top, 0);
  return out;
}

ConstructedLabeling LabelFriendshipVertices(int n) {
  Graph g = MakeFriendship(n);
  std::vector<int> labels(g.vertex_count(), 1);
  const auto pairs = FriendshipVertexPairs(n);
  for (int i = 1; i <= n; ++i) {
    labels[2 * i - 1] = pairs[i - 1].x;
    labels[2 * i] = pairs[i - 1].y;
  }
  return Finish(std::move(g), LabelingKind::kVertex, std::move(labels),
                "friendship-vertex-pairs");
}

ConstructedLabeling LabelFriendshipEdges(int n) {
  Graph g = MakeFriendship(n);
  std::vector<int> labels(g.edge_count(), 1);
  const auto triples = FriendshipEdgeTriples(n);
  const RoleMap& roles = g.roles();
  for (int i = 1; i <= n; ++i) {
    const std::string t = std::to_string(i);
    const LabelTriple& tr = triples[i - 1];
    labels[roles.EdgeIndex("side-" + t + "-a")] = tr.x;
    labels[roles.EdgeIndex("side-" + t + "-b")] = tr.y;
    labels[roles.EdgeIndex("base-" + t)] = tr.z;
  }
  return Finish(std::move(g), LabelingKind::kEdge, std::move(labels),
                "friendship-edge-triples");
}

ConstructedLabeling LabelBookVertices(int n) {
  Graph g = MakeBook(n);
  auto pages = BookPagePairs(n);
  const LabelPair spine{1, 2};
  for (int i = 0; i < n; ++i) {
    if (pages[i] == spine && i + 1 < n) {
      std::swap(pages[i], pages[i + 1]);
      ++i;
    }
  }
  std::vector<int> labels(g.vertex_count());
  labels[0] = spine.x;
  labels[1] = spine.y;
  for (int i = 1; i <= n; ++i) {
    labels[2 * i] = pages[i - 1].x;
    labels[2 * i + 1] = pages[i - 1].y;
  }
  return Finish(std::move(g), LabelingKind::kVertex, std::move(labels),
                "book-page-pairs");
}

ConstructedLabeling LabelCoronaVerticesEqualRegime(const Graph& g,
                                                   const Graph& h,
                                                   const VertexLabeling& lg,
                                                   const VertexLabeling& lh) {
  RequireVertexWitness(g, lg, "labeling of G");
  RequireVertexWitness(h, lh, "labeling of H");
  if (g.vertex_count() == 1) WrongRegime("G = K_1; use the apex labeling");
  if (IsAsymmetric(g)) {
    WrongRegime("G is asymmetric; the corona takes the labeling of H as is");
  }
  if (lg.MaxLabel() > lh.MaxLabel()) {
    WrongRegime("labeling of G uses more labels than that of H");
  }
  Graph c = Corona(g, h);
  const CoronaLayout layout{g.vertex_count(), h.vertex_count()};
  std::vector<int> labels(c.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    labels[i] = lg[i];
    for (int k = 0; k < h.vertex_count(); ++k) {
      labels[layout.CopyVertex(i, k)] = lh[k];
    }
  }
  return Finish(std::move(c), LabelingKind::kVertex, std::move(labels),
                "corona-vertex-classes");
}

ConstructedLabeling LabelCoronaVerticesSpecialRegime(const Graph& g,
                                                     const Graph& h,
                                                     const VertexLabeling& lg,
                                                     const VertexLabeling& lh) {
  RequireVertexWitness(g, lg, "labeling of G");
  RequireVertexWitness(h, lh, "labeling of H");
  const int dg = lg.MaxLabel();
  const int dh = lh.MaxLabel();
  if (dg <= dh) {
    WrongRegime("needs more labels on G than on H, got " + std::to_string(dg) +
                " and " + std::to_string(dh));
  }
  // A type is (label of the G vertex, shift of the copy labeling). Shift t
  // replaces label dh of lh by dh + t.
  struct Type {
    int label;
    int shift;
  };
  std::vector<Type> types;
  for (int c = 1; c <= dh; ++c) types.push_back({c, 0});
  for (int t = 1; static_cast<int>(types.size()) < dg; ++t) {
    const int fresh = dh + t;
    for (int s = 0; s < t; ++s) types.push_back({fresh, s});
    for (int c = 1; c <= fresh; ++c) types.push_back({c, t});
  }

  Graph c = Corona(g, h);
  const CoronaLayout layout{g.vertex_count(), h.vertex_count()};
  std::vector<int> labels(c.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Type& type = types[lg[i] - 1];
    labels[i] = type.label;
    for (int k = 0; k < h.vertex_count(); ++k) {
      labels[layout.CopyVertex(i, k)] = lh[k] == dh ? dh + type.shift : lh[k];
    }
  }
  return Finish(std::move(c), LabelingKind::kVertex, std::move(labels),
                "corona-vertex-stages");
}

ConstructedLabeling LabelCoronaVerticesApex(const Graph& h,
                                            const VertexLabeling& lh) {
  RequireVertexWitness(h, lh, "labeling of H");
  Graph c = Corona(MakeComplete(1), h);
  std::vector<int> labels(c.vertex_count());
  labels[0] = lh.MaxLabel() + 1;
  for (int k = 0; k < h.vertex_count(); ++k) labels[1 + k] = lh[k];
  return Finish(std::move(c), LabelingKind::kVertex, std::move(labels),
                "corona-vertex-apex");
}

ConstructedLabeling LabelCoronaEdgesPairScheme(const Graph& g, const Graph& h,
                                               const EdgeLabeling& lg,
                                               const EdgeLabeling& lh) {
  if (g.vertex_count() == 1) WrongRegime("G = K_1; use the apex bound");
  RequireSize(lh, h.edge_count(), "edge labeling of H");
  if (h.edge_count() == 0 || lh.MaxLabel() < 2) {
    WrongRegime("pair scheme needs an edge labeling of H with >= 2 labels");
  }
  RequireEdgeWitness(g, lg, "edge labeling of G");
  RequireEdgeWitness(h, lh, "edge labeling of H");

  const auto pairs = CoronaEdgePairs(lh.MaxLabel());
  std::vector<int> top_class(h.vertex_count(), 0);
  for (int e = 0; e < h.edge_count(); ++e) {
    for (int v : {h.edge(e).u, h.edge(e).v}) {
      top_class[v] = std::max(top_class[v], lh[e]);
    }
  }

  Graph c = Corona(g, h);
  const CoronaLayout layout{g.vertex_count(), h.vertex_count()};
  std::vector<int> labels(c.edge_count(), 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    labels[*c.EdgeIndex(g.edge(e).u, g.edge(e).v)] = lg[e];
  }
  for (int i = 0; i < g.vertex_count(); ++i) {
    for (int e = 0; e < h.edge_count(); ++e) {
      labels[CopyEdge(c, layout, i, h.edge(e))] = pairs[lh[e] - 1].x;
    }
    for (int k = 0; k < h.vertex_count(); ++k) {
      if (top_class[k] > 0) {
        labels[MiddleEdge(c, layout, i, k)] = pairs[top_class[k] - 1].y;
      }
    }
  }
  return Finish(std::move(c), LabelingKind::kEdge, std::move(labels),
                "corona-edge-pairs");
}

ConstructedLabeling LabelCoronaEdgesAsymmetricBase(
    const Graph& g, const Graph& h, const SearchOptions& options) {
  if (g.vertex_count() == 1) WrongRegime("G = K_1");
  if (!IsAsymmetric(g)) WrongRegime("G has a non-trivial automorphism");
  if (h.vertex_count() == 2 && h.edge_count() == 1) WrongRegime("H = K_2");

  int dprime_h = 1;
  std::vector<int> h_witness(h.edge_count(), 1);
  if (h.edge_count() > 0) {
    const SearchResult r = ExactDistinguishingIndex(h, options);
    if (!r.value) WrongRegime("D'(H) is undefined: " + r.none_reason);
    dprime_h = *r.value;
    h_witness = r.witness;
  }

  Graph c = Corona(g, h);
  const CoronaLayout layout{g.vertex_count(), h.vertex_count()};
  std::vector<int> labels(c.edge_count(), 1);
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (h.vertex_count() < dprime_h) {
      for (int k = 0; k < h.vertex_count(); ++k) {
        labels[MiddleEdge(c, layout, i, k)] = k + 1;
      }
    } else {
      for (int e = 0; e < h.edge_count(); ++e) {
        labels[CopyEdge(c, layout, i, h.edge(e))] = h_witness[e];
      }
    }
  }
  return Finish(std::move(c), LabelingKind::kEdge, std::move(labels),
                "corona-edge-asymmetric-base");
}

ConstructedLabeling LabelCoronaEdgesStaircase(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 1) WrongRegime("G = K_1");
  if (h.vertex_count() == 2 && h.edge_count() == 1) WrongRegime("H = K_2");
  if (g.vertex_count() > h.vertex_count() + 1) {
    WrongRegime("needs |V(G)| <= |V(H)| + 1");
  }
  if (!IsAsymmetric(h)) WrongRegime("needs D'(H) = 1 (H asymmetric)");

  Graph c = Corona(g, h);
  const CoronaLayout layout{g.vertex_count(), h.vertex_count()};
  std::vector<int> labels(c.edge_count(), 1);
  for (int i = 1; i < g.vertex_count(); ++i) {
    for (int k = 0; k < i; ++k) labels[MiddleEdge(c, layout, i, k)] = 2;
  }
  return Finish(std::move(c), LabelingKind::kEdge, std::move(labels),
                "corona-edge-staircase");
}

ConstructedLabeling LabelCoronaEdgesCountVectors(const Graph& g,
                                                 const Graph& h,
                                                 int max_labels) {
  if (g.vertex_count() == 1) WrongRegime("G = K_1");
  if (h.vertex_count() == 2 && h.edge_count() == 1) WrongRegime("H = K_2");
  if (!IsAsymmetric(h)) WrongRegime("needs D'(H) = 1 (H asymmetric)");
  if (IsAsymmetric(g)) WrongRegime("needs D(G) >= 2");
  if (max_labels < 1) ThrowInvalidParameter("max_labels must be >= 1");

  const int m = h.vertex_count();
  const auto vectors = CountVectors(m, g.vertex_count());
  const int needed = static_cast<int>(vectors.front().size());
  if (needed > max_labels) {
    throw Error(ErrorCode::kNotEnoughVectors,
                std::to_string(g.vertex_count()) + " count vectors of length " +
                    std::to_string(m) + " need " + std::to_string(needed) +
                    " labels, only " + std::to_string(max_labels) +
                    " allowed");
  }

  Graph c = Corona(g, h);
  const CoronaLayout layout{g.vertex_count(), m};
  std::vector<int> labels(c.edge_count(), 1);
  for (int i = 0; i < g.vertex_count(); ++i) {
    int k = 0;
    for (int label = 1; label <= needed; ++label) {
      for (int j = 0; j < vectors[i][label - 1]; ++j) {
        labels[MiddleEdge(c, layout, i, k++)] = label;
      }
    }
  }
  return Finish(std::move(c), LabelingKind::kEdge, std::move(labels),
                "corona-edge-count-vectors");
}

}  // namespace symbreak
