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

#include "symbreak/families.h"

#include <string>
#include <utility>
#include <vector>

#include "symbreak/error.h"

namespace symbreak {
namespace {

std::string Tag(const std::string& name, int n) {
  return name + "(" + std::to_string(n) + ")";
}

std::string DescribeOperand(const Graph& g) {
  if (!g.family_tag().empty()) return g.family_tag();
  return "graph[" + std::to_string(g.vertex_count()) + "," +
         std::to_string(g.edge_count()) + "]";
}

}  // namespace

Graph MakePath(int n) {
  if (n < 1) ThrowInvalidParameter("path needs n >= 1, got " +
                                   std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges), Tag("path", n));
}

Graph MakeCycle(int n) {
  if (n < 3) ThrowInvalidParameter("cycle needs n >= 3, got " +
                                   std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges), Tag("cycle", n));
}

Graph MakeComplete(int n) {
  if (n < 1) ThrowInvalidParameter("complete graph needs n >= 1, got " +
                                   std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges), Tag("complete", n));
}

Graph MakeStar(int leaves) {
  if (leaves < 1) ThrowInvalidParameter("star needs >= 1 leaf, got " +
                                        std::to_string(leaves));
  std::vector<Edge> edges;
  RoleMap roles;
  roles.AddVertex("center", 0);
  for (int j = 1; j <= leaves; ++j) {
    edges.push_back({0, j});
    roles.AddVertex("leaf-" + std::to_string(j), j);
    roles.AddEdge("ray-" + std::to_string(j), j - 1);
  }
  return Graph(leaves + 1, std::move(edges), Tag("star", leaves),
               std::move(roles));
}

Graph MakeCompleteBipartite(int p, int q) {
  if (p < 1 || q < 1) {
    ThrowInvalidParameter("biclique needs p, q >= 1");
  }
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < q; ++b) edges.push_back({a, p + b});
  }
  return Graph(p + q, std::move(edges),
               "biclique(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

Graph MakeFriendship(int n) {
  if (n < 2) ThrowInvalidParameter("friendship graph needs n >= 2, got " +
                                   std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({0, 2 * i - 1});
    edges.push_back({0, 2 * i});
    edges.push_back({2 * i - 1, 2 * i});
  }
  Graph plain(2 * n + 1, std::move(edges));
  RoleMap roles;
  roles.AddVertex("center", 0);
  for (int v = 1; v <= 2 * n; ++v) roles.AddVertex("v" + std::to_string(v), v);
  for (int i = 1; i <= n; ++i) {
    const std::string t = std::to_string(i);
    roles.AddEdge("side-" + t + "-a", *plain.EdgeIndex(0, 2 * i - 1));
    roles.AddEdge("side-" + t + "-b", *plain.EdgeIndex(0, 2 * i));
    roles.AddEdge("base-" + t, *plain.EdgeIndex(2 * i - 1, 2 * i));
  }
  return plain.WithProvenance(Tag("friendship", n), std::move(roles));
}

Graph MakeBook(int n) {
  if (n < 2) ThrowInvalidParameter("book graph needs n >= 2, got " +
                                   std::to_string(n));
  Graph product = CartesianProduct(MakeStar(n), MakePath(2));
  RoleMap roles;
  roles.AddVertex("spine-top", 0);
  roles.AddVertex("spine-bottom", 1);
  roles.AddEdge("spine", *product.EdgeIndex(0, 1));
  for (int i = 1; i <= n; ++i) {
    const std::string t = std::to_string(i);
    roles.AddVertex("page-" + t + "-top", 2 * i);
    roles.AddVertex("page-" + t + "-bottom", 2 * i + 1);
    roles.AddEdge("page-" + t + "-top-edge", *product.EdgeIndex(0, 2 * i));
    roles.AddEdge("page-" + t + "-bottom-edge",
                  *product.EdgeIndex(1, 2 * i + 1));
    roles.AddEdge("page-" + t + "-rung", *product.EdgeIndex(2 * i, 2 * i + 1));
  }
  return product.WithProvenance(Tag("book", n), std::move(roles));
}

Graph CartesianProduct(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    ThrowInvalidParameter("cartesian product of an empty graph");
  }
  const int nh = h.vertex_count();
  std::vector<Edge> edges;
  for (int a = 0; a < g.vertex_count(); ++a) {
    for (const Edge& e : h.edges()) edges.push_back({a * nh + e.u, a * nh + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (int b = 0; b < nh; ++b) edges.push_back({e.u * nh + b, e.v * nh + b});
  }
  return Graph(g.vertex_count() * nh, std::move(edges),
               "cartesian(" + DescribeOperand(g) + "," + DescribeOperand(h) +
                   ")");
}

Graph Corona(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    ThrowInvalidParameter("corona of an empty graph");
  }
  const CoronaLayout layout{g.vertex_count(), h.vertex_count()};
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (int i = 0; i < layout.g_order; ++i) {
    for (const Edge& e : h.edges()) {
      edges.push_back({layout.CopyVertex(i, e.u), layout.CopyVertex(i, e.v)});
    }
    for (int k = 0; k < layout.h_order; ++k) {
      edges.push_back({i, layout.CopyVertex(i, k)});
    }
  }
  Graph plain(layout.total_vertices(), std::move(edges));
  RoleMap roles;
  for (int i = 0; i < layout.g_order; ++i) {
    const std::string t = std::to_string(i + 1);
    roles.AddVertex("v" + t, i);
    for (int k = 0; k < layout.h_order; ++k) {
      const std::string s = std::to_string(k + 1);
      roles.AddVertex("copy-" + t + "-vertex-" + s, layout.CopyVertex(i, k));
      roles.AddEdge("middle-" + t + "-" + s,
                    *plain.EdgeIndex(i, layout.CopyVertex(i, k)));
    }
  }
  return plain.WithProvenance(
      "corona(" + DescribeOperand(g) + "," + DescribeOperand(h) + ")",
      std::move(roles));
}

}  // namespace symbreak
