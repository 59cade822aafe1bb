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

#ifndef SYMBREAK_AUTOMORPHISM_H_
#define SYMBREAK_AUTOMORPHISM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/graph.h"
#include "symbreak/labeling.h"
#include "symbreak/permutation.h"

namespace symbreak {

// The complete automorphism group of a graph, as an explicit element list in
// lexicographic order of image arrays. The identity is always first.
class AutGroup {
 public:
  // Sorts `elements`. Throws invalid-parameter if the identity is missing or
  // an element has the wrong degree.
  AutGroup(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  std::span<const Permutation> elements() const { return elements_; }
  bool Contains(const Permutation& p) const;

 private:
  int degree_;
  std::vector<Permutation> elements_;
};

// Enumerates every automorphism of `g` by individualization-refinement
// backtracking: candidate images are restricted to equal cells of the
// equitable partition obtained by iterated neighbourhood refinement.
// Throws group-too-large (with the partial count) once more than `cap`
// elements are found.
AutGroup EnumerateAutomorphisms(const Graph& g,
                                std::optional<std::uint64_t> cap = std::nullopt);

// Counts automorphisms that preserve the given vertex and edge colors without
// storing them. Empty spans mean "uncolored".
std::uint64_t CountColoredAutomorphisms(const Graph& g,
                                        std::span<const int> vertex_colors,
                                        std::span<const int> edge_colors);

bool PreservesVertexLabeling(const Permutation& p, const VertexLabeling& l);
// Throws not-an-automorphism if `p` does not preserve adjacency.
bool PreservesEdgeLabeling(const Graph& g, const Permutation& p,
                           const EdgeLabeling& l);

// True iff the identity is the only element of `group` preserving `l`.
bool IsVertexDistinguishing(const Graph& g, const AutGroup& group,
                            const VertexLabeling& l);
bool IsEdgeDistinguishing(const Graph& g, const AutGroup& group,
                          const EdgeLabeling& l);

// Group-free checks. These search directly for a non-identity automorphism of
// the labeled graph, so they stay fast when Aut(g) is far too large to list.
std::optional<Permutation> FindLabelPreservingAutomorphism(
    const Graph& g, std::span<const int> vertex_colors,
    std::span<const int> edge_colors);
bool IsVertexDistinguishing(const Graph& g, const VertexLabeling& l);
bool IsEdgeDistinguishing(const Graph& g, const EdgeLabeling& l);

// True iff some non-identity automorphism fixes every edge. When it does, no
// edge labeling is distinguishing (K_2 is the usual example).
bool EdgeKernelIsNontrivial(const Graph& g, const AutGroup& group);

// Orbit partition of {0..degree-1}; orbits sorted by smallest element.
std::vector<std::vector<int>> VertexOrbits(const AutGroup& group);

// An isomorphism a -> b (as an image array indexed by a's vertices), if any.
std::optional<Permutation> FindIsomorphism(const Graph& a, const Graph& b);
inline bool AreIsomorphic(const Graph& a, const Graph& b) {
  return FindIsomorphism(a, b).has_value();
}

}  // namespace symbreak

#endif  // SYMBREAK_AUTOMORPHISM_H_
