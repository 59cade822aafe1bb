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

#include "symbreak/automorphism.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include "symbreak/error.h"

namespace symbreak {
namespace {

struct ColoredGraph {
  const Graph* graph = nullptr;
  std::vector<int> vertex_color;
  std::vector<int> edge_color;
};

ColoredGraph MakeColored(const Graph& g, std::span<const int> vertex_colors,
                         std::span<const int> edge_colors) {
  if (!vertex_colors.empty() &&
      static_cast<int>(vertex_colors.size()) != g.vertex_count()) {
    ThrowInvalidParameter("vertex color count does not match vertex count");
  }
  if (!edge_colors.empty() &&
      static_cast<int>(edge_colors.size()) != g.edge_count()) {
    ThrowInvalidParameter("edge color count does not match edge count");
  }
  ColoredGraph cg;
  cg.graph = &g;
  cg.vertex_color = vertex_colors.empty()
                        ? std::vector<int>(g.vertex_count(), 1)
                        : std::vector<int>(vertex_colors.begin(),
                                           vertex_colors.end());
  cg.edge_color =
      edge_colors.empty()
          ? std::vector<int>(g.edge_count(), 1)
          : std::vector<int>(edge_colors.begin(), edge_colors.end());
  return cg;
}

// Backtracking search for color-preserving isomorphisms a -> b. The two
// colorings are refined jointly, so equal color ids denote cells that must
// correspond under any isomorphism extending the current choices.
class PairSearch {
 public:
  // Receives each isomorphism as an image array; returns false to stop.
  using Visitor = std::function<bool(const std::vector<int>&)>;

  PairSearch(const ColoredGraph& a, const ColoredGraph& b) : a_(a), b_(b) {}

  // Returns false iff the visitor stopped the search.
  bool Run(const Visitor& visit) {
    const Graph& ga = *a_.graph;
    const Graph& gb = *b_.graph;
    if (ga.vertex_count() != gb.vertex_count() ||
        ga.edge_count() != gb.edge_count()) {
      return true;
    }
    n_ = ga.vertex_count();
    std::vector<int> ca = a_.vertex_color;
    std::vector<int> cb = b_.vertex_color;
    if (!Refine(ca, cb)) return true;
    return Recurse(ca, cb, visit);
  }

 private:
  using Signature = std::vector<long long>;

  Signature MakeSignature(const ColoredGraph& cg, const std::vector<int>& color,
                          int v) const {
    const Graph& g = *cg.graph;
    Signature sig;
    sig.reserve(g.Degree(v) + 1);
    sig.push_back(color[v]);
    for (int w : g.Neighbors(v)) {
      const int e = *g.EdgeIndex(v, w);
      sig.push_back((static_cast<long long>(cg.edge_color[e]) << 32) |
                    static_cast<unsigned>(color[w]));
    }
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  }

  static int CountDistinct(const std::vector<int>& ca,
                           const std::vector<int>& cb) {
    std::vector<int> all(ca);
    all.insert(all.end(), cb.begin(), cb.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
  }

  // Iterated neighbourhood refinement to a joint equitable partition.
  // Returns false when the two sides stop having equal cell sizes.
  bool Refine(std::vector<int>& ca, std::vector<int>& cb) const {
    int distinct = CountDistinct(ca, cb);
    std::vector<Signature> sigs(2 * n_);
    std::vector<int> order(2 * n_);
    std::vector<int> counts;
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        sigs[v] = MakeSignature(a_, ca, v);
        sigs[n_ + v] = MakeSignature(b_, cb, v);
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int x, int y) { return sigs[x] < sigs[y]; });
      int next = -1;
      counts.assign(2 * n_ + 1, 0);
      for (int i = 0; i < 2 * n_; ++i) {
        const int item = order[i];
        if (i == 0 || sigs[item] != sigs[order[i - 1]]) ++next;
        if (item < n_) {
          ca[item] = next;
          ++counts[next];
        } else {
          cb[item - n_] = next;
          --counts[next];
        }
      }
      for (int c = 0; c <= next; ++c) {
        if (counts[c] != 0) return false;
      }
      if (next + 1 == distinct) return true;
      distinct = next + 1;
    }
  }

  bool IsIsomorphism(const std::vector<int>& map) const {
    const Graph& ga = *a_.graph;
    const Graph& gb = *b_.graph;
    for (int v = 0; v < n_; ++v) {
      if (a_.vertex_color[v] != b_.vertex_color[map[v]]) return false;
    }
    for (int i = 0; i < ga.edge_count(); ++i) {
      const Edge& e = ga.edge(i);
      std::optional<int> j = gb.EdgeIndex(map[e.u], map[e.v]);
      if (!j.has_value() || a_.edge_color[i] != b_.edge_color[*j]) {
        return false;
      }
    }
    return true;
  }

  bool Recurse(const std::vector<int>& ca, const std::vector<int>& cb,
               const Visitor& visit) const {
    // First-fail: branch on the smallest non-singleton cell.
    std::vector<int> size(2 * n_ + 1, 0);
    int max_color = 0;
    for (int v = 0; v < n_; ++v) {
      ++size[ca[v]];
      max_color = std::max(max_color, ca[v]);
    }
    int target = -1;
    for (int c = 0; c <= max_color; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    if (target < 0) {
      std::vector<int> where(max_color + 1);
      for (int w = 0; w < n_; ++w) where[cb[w]] = w;
      std::vector<int> map(n_);
      for (int v = 0; v < n_; ++v) map[v] = where[ca[v]];
      if (IsIsomorphism(map)) return visit(map);
      return true;
    }
    int v = 0;
    while (ca[v] != target) ++v;
    const int fresh = max_color + 1;
    for (int w = 0; w < n_; ++w) {
      if (cb[w] != target) continue;
      std::vector<int> ca2 = ca;
      std::vector<int> cb2 = cb;
      ca2[v] = fresh;
      cb2[w] = fresh;
      if (!Refine(ca2, cb2)) continue;
      if (!Recurse(ca2, cb2, visit)) return false;
    }
    return true;
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  int n_ = 0;
};

}  // namespace

AutGroup::AutGroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const Permutation& p : elements_) {
    if (p.size() != degree_) {
      ThrowInvalidParameter("group element has wrong degree");
    }
  }
  std::sort(elements_.begin(), elements_.end());
  if (elements_.empty() || !elements_.front().IsIdentity()) {
    ThrowInvalidParameter("automorphism group must contain the identity");
  }
}

bool AutGroup::Contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

AutGroup EnumerateAutomorphisms(const Graph& g,
                                std::optional<std::uint64_t> cap) {
  if (g.vertex_count() < 1) {
    ThrowInvalidParameter("automorphisms of the empty graph");
  }
  ColoredGraph cg = MakeColored(g, {}, {});
  std::vector<Permutation> elements;
  PairSearch search(cg, cg);
  search.Run([&](const std::vector<int>& map) {
    elements.emplace_back(map);
    if (cap.has_value() && elements.size() > *cap) {
      throw GroupTooLargeError(elements.size(), *cap);
    }
    return true;
  });
  return AutGroup(g.vertex_count(), std::move(elements));
}

std::uint64_t CountColoredAutomorphisms(const Graph& g,
                                        std::span<const int> vertex_colors,
                                        std::span<const int> edge_colors) {
  ColoredGraph cg = MakeColored(g, vertex_colors, edge_colors);
  std::uint64_t count = 0;
  PairSearch(cg, cg).Run([&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

bool PreservesVertexLabeling(const Permutation& p, const VertexLabeling& l) {
  if (p.size() != l.size()) {
    ThrowInvalidParameter("labeling length " + std::to_string(l.size()) +
                          " does not match permutation degree " +
                          std::to_string(p.size()));
  }
  for (int v = 0; v < p.size(); ++v) {
    if (l[v] != l[p[v]]) return false;
  }
  return true;
}

bool PreservesEdgeLabeling(const Graph& g, const Permutation& p,
                           const EdgeLabeling& l) {
  if (l.size() != g.edge_count()) {
    ThrowInvalidParameter("edge labeling length does not match edge count");
  }
  const std::vector<int> image = InducedEdgePermutation(g, p);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (l[e] != l[image[e]]) return false;
  }
  return true;
}

bool IsVertexDistinguishing(const Graph& g, const AutGroup& group,
                            const VertexLabeling& l) {
  if (group.degree() != g.vertex_count() || l.size() != g.vertex_count()) {
    ThrowInvalidParameter("group/labeling do not match the graph");
  }
  for (const Permutation& p : group.elements()) {
    if (!p.IsIdentity() && PreservesVertexLabeling(p, l)) return false;
  }
  return true;
}

bool IsEdgeDistinguishing(const Graph& g, const AutGroup& group,
                          const EdgeLabeling& l) {
  if (group.degree() != g.vertex_count() || l.size() != g.edge_count()) {
    ThrowInvalidParameter("group/labeling do not match the graph");
  }
  for (const Permutation& p : group.elements()) {
    if (!p.IsIdentity() && PreservesEdgeLabeling(g, p, l)) return false;
  }
  return true;
}

std::optional<Permutation> FindLabelPreservingAutomorphism(
    const Graph& g, std::span<const int> vertex_colors,
    std::span<const int> edge_colors) {
  ColoredGraph cg = MakeColored(g, vertex_colors, edge_colors);
  std::optional<Permutation> found;
  PairSearch(cg, cg).Run([&](const std::vector<int>& map) {
    Permutation p(map);
    if (p.IsIdentity()) return true;
    found = std::move(p);
    return false;
  });
  return found;
}

bool IsVertexDistinguishing(const Graph& g, const VertexLabeling& l) {
  if (l.size() != g.vertex_count()) {
    ThrowInvalidParameter("labeling length does not match vertex count");
  }
  return !FindLabelPreservingAutomorphism(g, l.labels(), {}).has_value();
}

bool IsEdgeDistinguishing(const Graph& g, const EdgeLabeling& l) {
  if (l.size() != g.edge_count()) {
    ThrowInvalidParameter("edge labeling length does not match edge count");
  }
  return !FindLabelPreservingAutomorphism(g, {}, l.labels()).has_value();
}

bool EdgeKernelIsNontrivial(const Graph& g, const AutGroup& group) {
  for (const Permutation& p : group.elements()) {
    if (p.IsIdentity()) continue;
    const std::vector<int> image = InducedEdgePermutation(g, p);
    bool fixes_all = true;
    for (int e = 0; e < g.edge_count() && fixes_all; ++e) {
      fixes_all = image[e] == e;
    }
    if (fixes_all) return true;
  }
  return false;
}

std::vector<std::vector<int>> VertexOrbits(const AutGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Permutation& p : group.elements()) {
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(p[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    int root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(v);
  }
  return orbits;
}

std::optional<Permutation> FindIsomorphism(const Graph& a, const Graph& b) {
  ColoredGraph ca = MakeColored(a, {}, {});
  ColoredGraph cb = MakeColored(b, {}, {});
  std::optional<Permutation> found;
  PairSearch(ca, cb).Run([&](const std::vector<int>& map) {
    found = Permutation(map);
    return false;
  });
  return found;
}

}  // namespace symbreak
