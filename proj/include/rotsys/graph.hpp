// Copyright 2026 The rotsys Authors
//
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

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace rotsys {

using Vertex = int;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A simple, loop-free, unembedded graph on vertices 0..n-1. Neighbor lists
/// are kept sorted. Connectivity is not required here; the operations that
/// need it check it themselves.
class Graph {
 public:
  Graph() = default;

  /// Throws EmbeddingError listing every BadVertexId, LoopEdge and
  /// DuplicateNeighbor found.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;

  /// Sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  /// Connectivity after deleting the listed vertices.
  bool is_connected_without(std::span<const Vertex> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

}  // namespace rotsys
