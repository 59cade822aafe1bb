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

#ifndef SYMBREAK_FAMILIES_H_
#define SYMBREAK_FAMILIES_H_

#include "symbreak/graph.h"

namespace symbreak {

// Standard families. Vertex numbering is part of the contract:
//   path/cycle: vertices in path/cycle order.
//   star(n): center 0, leaves 1..n.
//   biclique(p, q): sides {0..p-1} and {p..p+q-1}.
//   friendship(n): center 0; triangle i (1-based) has base vertices 2i-1, 2i.
//   book(n): spine 0 (top) and 1 (bottom); page i (1-based) has top vertex 2i
//     (adjacent to 0) and bottom vertex 2i+1 (adjacent to 1). This is exactly
//     the numbering of cartesian_product(star(n), path(2)).
//   cartesian(G, H): vertex (a, b) is a*|V(H)| + b.
//   corona(G, H): G keeps 0..|V(G)|-1; vertex k of copy i is
//     |V(G)| + i*|V(H)| + k (all 0-based).
Graph MakePath(int n);
Graph MakeCycle(int n);
Graph MakeComplete(int n);
Graph MakeStar(int leaves);
Graph MakeCompleteBipartite(int p, int q);
Graph MakeFriendship(int n);
Graph MakeBook(int n);

Graph CartesianProduct(const Graph& g, const Graph& h);
Graph Corona(const Graph& g, const Graph& h);

// Index arithmetic for corona(G, H), 0-based.
struct CoronaLayout {
  int g_order = 0;
  int h_order = 0;

  int CopyVertex(int copy, int k) const {
    return g_order + copy * h_order + k;
  }
  int total_vertices() const { return g_order * (1 + h_order); }
};

}  // namespace symbreak

#endif  // SYMBREAK_FAMILIES_H_
