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

#include "symbreak/graph.h"

#include <algorithm>
#include <queue>

#include "symbreak/error.h"

namespace symbreak {

void RoleMap::AddVertex(const std::string& name, int vertex) {
  if (!vertices_.emplace(name, vertex).second) {
    ThrowInvalidParameter("duplicate vertex role '" + name + "'");
  }
}

void RoleMap::AddEdge(const std::string& name, int edge) {
  if (!edges_.emplace(name, edge).second) {
    ThrowInvalidParameter("duplicate edge role '" + name + "'");
  }
}

int RoleMap::Vertex(const std::string& name) const {
  auto it = vertices_.find(name);
  if (it == vertices_.end()) {
    ThrowInvalidParameter("unknown vertex role '" + name + "'");
  }
  return it->second;
}

int RoleMap::EdgeIndex(const std::string& name) const {
  auto it = edges_.find(name);
  if (it == edges_.end()) {
    ThrowInvalidParameter("unknown edge role '" + name + "'");
  }
  return it->second;
}

bool RoleMap::HasVertex(const std::string& name) const {
  return vertices_.contains(name);
}

bool RoleMap::HasEdge(const std::string& name) const {
  return edges_.contains(name);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::string family_tag,
             RoleMap roles)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      family_tag_(std::move(family_tag)),
      roles_(std::move(roles)) {
  if (vertex_count_ < 0) ThrowInvalidParameter("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count_ || e.v >= vertex_count_) {
      ThrowInvalidParameter("edge endpoint out of range");
    }
    if (e.u == e.v) ThrowInvalidParameter("self-loop at vertex " +
                                          std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    ThrowInvalidParameter("duplicate edge");
  }

  const size_t n = static_cast<size_t>(vertex_count_);
  adjacency_.assign(n * n, 0);
  edge_index_.assign(n * n, -1);
  neighbors_.assign(n, {});
  for (int i = 0; i < edge_count(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.u * n + e.v] = adjacency_[e.v * n + e.u] = 1;
    edge_index_[e.u * n + e.v] = edge_index_[e.v * n + e.u] = i;
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nbrs : neighbors_) std::sort(nbrs.begin(), nbrs.end());

  if (vertex_count_ > 0) {
    std::vector<bool> seen(n, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : neighbors_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          queue.push(w);
        }
      }
    }
    connected_ = reached == vertex_count_;
  }
}

std::optional<int> Graph::EdgeIndex(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    return std::nullopt;
  }
  int idx = edge_index_[static_cast<size_t>(u) * vertex_count_ + v];
  if (idx < 0) return std::nullopt;
  return idx;
}

std::vector<int> Graph::DegreeSequence() const {
  std::vector<int> degrees;
  degrees.reserve(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v) degrees.push_back(Degree(v));
  std::sort(degrees.rbegin(), degrees.rend());
  return degrees;
}

Graph Graph::WithProvenance(std::string family_tag, RoleMap roles) const {
  Graph out = *this;
  out.family_tag_ = std::move(family_tag);
  out.roles_ = std::move(roles);
  return out;
}

std::vector<int> InducedEdgePermutation(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) {
    ThrowInvalidParameter("permutation size does not match vertex count");
  }
  std::vector<int> image(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    std::optional<int> j = g.EdgeIndex(p[e.u], p[e.v]);
    if (!j.has_value()) {
      throw Error(ErrorCode::kNotAnAutomorphism,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is mapped to a non-edge");
    }
    image[i] = *j;
  }
  return image;
}

}  // namespace symbreak
