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


#ifndef SYMBREAK_CONSTRUCTIVE_H_
#define SYMBREAK_CONSTRUCTIVE_H_

#include <string>
#include <utility>
#include <vector>

#include "symbreak/exact_search.h"
#include "symbreak/graph.h"
#include "symbreak/labeling.h"

namespace symbreak {

// A labeling produced by one of the explicit schemes below, together with the
// graph it labels. Every construction checks its output with a group-free
// automorphism search before returning and throws construction-failure if
// the output is not distinguishing.
struct ConstructedLabeling {
  Graph graph;
  LabelingKind kind = LabelingKind::kVertex;
  std::vector<int> labels;
  // Largest label used; labels are always contiguous from 1.
  int label_count = 0;
  std::string scheme;
};

struct LabelPair {
  int x = 0;
  int y = 0;
  friend bool operator==(const LabelPair&, const LabelPair&) = default;
};

// Side labels x, y and base label z of one friendship triangle.
struct LabelTriple {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const LabelTriple&, const LabelTriple&) = default;
};

// Scheme orders. Each returns the first `count` terms; a new label is only
// introduced once every term over the current labels has been used.
//
// Unordered pairs with distinct entries: (1,2), (2,3), (3,1), then for each
// new label L: (L-1,L), (L,1), ..., (L,L-2).
std::vector<LabelPair> FriendshipVertexPairs(int count);
// Side pair {x, y} with x != y plus base z: (1,2,1), (1,2,2), then for each
// new label L: (a,L,z) for z < L and a < L, then every a < b <= L with z = L.
std::vector<LabelTriple> FriendshipEdgeTriples(int count);
// Ordered (top, bottom) page pairs: (1,1), (2,1), (2,2), (1,2), then for each
// new label L: (L,1), ..., (L,L), (1,L), ..., (L-1,L). No collision rule.
std::vector<LabelPair> BookPagePairs(int count);
// Ordered (copy edge, middle edge) pairs: (1,1), (1,2), (2,1), (2,2), (1,3),
// (2,3), (3,3), (3,1), (3,2), then for L >= 4: (L,1), ..., (L,L), (1,L), ...,
// (L-1,L).
std::vector<LabelPair> CoronaEdgePairs(int count);
// Label-count vectors of length-m sequences, ordered by the largest label r
// used; within r by ascending count of r, then by descending earlier counts.
// All vectors are padded to the largest r reached.
std::vector<std::vector<int>> CountVectors(int m, int count);

ConstructedLabeling LabelFriendshipVertices(int n);
ConstructedLabeling LabelFriendshipEdges(int n);
// Spine (1,2); a page pair equal to the spine pair trades places with the
// next page's pair.
ConstructedLabeling LabelBookVertices(int n);

// Vertex labelings of corona(g, h). The input labelings must be
// distinguishing (invalid-witness otherwise); regime violations throw
// wrong-regime.
//
// Each G vertex keeps its label and every copy of H gets lh. Needs g != K_1,
// g not asymmetric, and max(lg) <= max(lh).
ConstructedLabeling LabelCoronaVerticesEqualRegime(
    const Graph& g, const Graph& h, const VertexLabeling& lg,
    const VertexLabeling& lh);
// max(lg) > max(lh). The classes of lg are given distinct (vertex label, copy
// labeling) types in stages: stage 0 offers max(lh) types, stage t >= 1
// introduces label max(lh)+t and offers max(lh)+2t more.
ConstructedLabeling LabelCoronaVerticesSpecialRegime(
    const Graph& g, const Graph& h, const VertexLabeling& lg,
    const VertexLabeling& lh);
// corona(K_1, h): the copy gets lh and the apex gets max(lh)+1.
ConstructedLabeling LabelCoronaVerticesApex(const Graph& h,
                                            const VertexLabeling& lh);

// Edge labelings of corona(g, h).
//
// g keeps lg. Edge class j of lh becomes the pair CoronaEdgePairs()[j-1]:
// the copy edge takes the first entry and each middle edge takes the second
// entry of the largest class meeting its copy vertex. Needs g != K_1 and
// max(lh) >= 2.
ConstructedLabeling LabelCoronaEdgesPairScheme(const Graph& g, const Graph& h,
                                               const EdgeLabeling& lg,
                                               const EdgeLabeling& lh);
// g asymmetric, g != K_1, h != K_2. Computes D'(h) with the exact search.
ConstructedLabeling LabelCoronaEdgesAsymmetricBase(
    const Graph& g, const Graph& h, const SearchOptions& options = {});
// |V(g)| <= |V(h)| + 1, h asymmetric, h != K_2: middle edges from G vertex i
// to copy vertices 1..i-1 get label 2 (1-based), all else 1.
ConstructedLabeling LabelCoronaEdgesStaircase(const Graph& g, const Graph& h);
// h asymmetric, h != K_2, g not asymmetric: vertex i of g gets the i-th count
// vector, written as a non-decreasing sequence on its middle edges. Throws
// not-enough-vectors if the vectors over `max_labels` labels run out.
ConstructedLabeling LabelCoronaEdgesCountVectors(const Graph& g,
                                                 const Graph& h,
                                                 int max_labels);

}  // namespace symbreak

#endif  // SYMBREAK_CONSTRUCTIVE_H_
