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

#ifndef SYMBREAK_GRAPH_H_
#define SYMBREAK_GRAPH_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/permutation.h"

namespace symbreak {

// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Structural role names for the vertices and edges of a named family, e.g.
// "center", "page-3-top", "copy-2-vertex-1", "middle-2-1". Every name resolves
// to exactly one index.
class RoleMap {
 public:
  void AddVertex(const std::string& name, int vertex);
  void AddEdge(const std::string& name, int edge);

  // Throws invalid-parameter on unknown names.
  int Vertex(const std::string& name) const;
  int EdgeIndex(const std::string& name) const;

  bool HasVertex(const std::string& name) const;
  bool HasEdge(const std::string& name) const;

  const std::map<std::string, int>& vertices() const { return vertices_; }
  const std::map<std::string, int>& edges() const { return edges_; }
  bool empty() const { return vertices_.empty() && edges_.empty(); }

 private:
  std::map<std::string, int> vertices_;
  std::map<std::string, int> edges_;
};

// Immutable simple undirected graph. Edges are kept sorted lexicographically,
// so an edge's position in edges() is its stable index; every edge labeling
// is a sequence over that indexing.
class Graph {
 public:
  Graph() = default;
  // Normalizes each pair to u < v and sorts. Throws invalid-parameter on
  // self-loops, duplicate edges or out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges, std::string family_tag = "",
        RoleMap roles = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  bool Adjacent(int u, int v) const {
    return adjacency_[static_cast<size_t>(u) * vertex_count_ + v] != 0;
  }
  // Index of edge {u, v}, or nullopt if absent.
  std::optional<int> EdgeIndex(int u, int v) const;
  std::span<const int> Neighbors(int v) const { return neighbors_[v]; }
  int Degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  std::vector<int> DegreeSequence() const;  // non-increasing

  // Disconnected graphs are representable; bound computations that assume
  // connectivity check this flag and refuse them.
  bool connected() const { return connected_; }

  const std::string& family_tag() const { return family_tag_; }
  const RoleMap& roles() const { return roles_; }

  // Same graph with a different descriptor.
  Graph WithProvenance(std::string family_tag, RoleMap roles) const;

  // Structural equality: same vertex count and edge sequence.
  bool SameStructure(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<unsigned char> adjacency_;
  std::vector<int> edge_index_;  // vertex_count^2 matrix, -1 when absent
  std::vector<std::vector<int>> neighbors_;
  bool connected_ = true;
  std::string family_tag_;
  RoleMap roles_;
};

// Image of every edge index under the vertex permutation `p`. Throws
// not-an-automorphism if some edge is sent to a non-edge.
std::vector<int> InducedEdgePermutation(const Graph& g, const Permutation& p);

}  // namespace symbreak

#endif  // SYMBREAK_GRAPH_H_
