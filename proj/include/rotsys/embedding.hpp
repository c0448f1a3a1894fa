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

// Combinatorial maps on orientable surfaces.
//
// An embedding is stored as a rotation system: for every vertex the clockwise
// cyclic order of its neighbors. Each undirected edge {u,v} yields two darts
// (u,v) and (v,u). The successor of a dart d = (t,h) around its tail is
// next_dart(d); following next_dart(inverse(d)) repeatedly traces a face.

#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "rotsys/graph.hpp"

namespace rotsys {

struct Dart {
  Vertex tail = 0;
  Vertex head = 0;

  Dart inverse() const noexcept { return {head, tail}; }

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

std::ostream& operator<<(std::ostream& os, const Dart& d);

/// Face of an embedding as a cyclic dart sequence. The sequence is rotated
/// so that it starts at its smallest dart; two walks compare equal iff they
/// are the same face.
class FaceWalk {
 public:
  /// `darts` must be nonempty and free of repeats; it is rotated to the
  /// canonical start. Closure under the face rule is the caller's concern
  /// (trace_faces guarantees it).
  explicit FaceWalk(std::vector<Dart> darts);

  std::span<const Dart> darts() const noexcept { return darts_; }
  std::size_t size() const noexcept { return darts_.size(); }
  const Dart& front() const { return darts_.front(); }
  const Dart& operator[](std::size_t i) const { return darts_[i]; }

  /// Tails of the darts, in walk order (vertices repeat for non-simple faces).
  std::vector<Vertex> vertices() const;

  bool contains(const Dart& d) const;

  /// Position of `d` in the walk, or size() if absent.
  std::size_t index_of(const Dart& d) const;

  friend bool operator==(const FaceWalk&, const FaceWalk&) = default;
  friend auto operator<=>(const FaceWalk& a, const FaceWalk& b) {
    return a.darts_ <=> b.darts_;
  }

 private:
  std::vector<Dart> darts_;
};

std::ostream& operator<<(std::ostream& os, const FaceWalk& w);

/// A validated rotation system on a connected simple graph. Immutable.
///
/// Darts are also addressable by a dense index: the darts leaving v occupy
/// indices offset(v) .. offset(v)+degree(v)-1 in rotation order.
class EmbeddedGraph {
 public:
  int num_vertices() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t num_edges() const noexcept { return heads_.size() / 2; }
  std::size_t num_darts() const noexcept { return heads_.size(); }
  int degree(Vertex v) const;

  /// Clockwise neighbor order at v, as given at construction.
  std::span<const Vertex> rotation(Vertex v) const;
  std::vector<std::vector<Vertex>> rotations() const;

  bool has_dart(const Dart& d) const noexcept;

  /// Dense index of d; throws Error(UnknownDart).
  std::size_t dart_index(const Dart& d) const;
  Dart dart_at(std::size_t index) const;
  std::size_t inverse_index(std::size_t index) const { return twin_.at(index); }
  std::size_t next_index(std::size_t index) const;

  Graph underlying() const;

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  friend EmbeddedGraph build_embedding(int n, const std::vector<std::vector<Vertex>>& rotations);

  EmbeddedGraph() = default;

  std::size_t position(Vertex tail, Vertex head) const noexcept;

  std::vector<std::size_t> offsets_;  // n+1 entries
  std::vector<Vertex> heads_;         // heads_[offsets_[v] + i] = rotation(v)[i]
  std::vector<Vertex> tails_;
  std::vector<std::size_t> twin_;
};

/// Validates and builds an embedding. Throws EmbeddingError listing every
/// problem found: BadVertexId, LoopEdge, DuplicateNeighbor,
/// AsymmetricAdjacency, Disconnected, EmptyGraph (fewer than two vertices).
EmbeddedGraph build_embedding(int n, const std::vector<std::vector<Vertex>>& rotations);

/// The dart following d in the rotation around d.tail.
Dart next_dart(const EmbeddedGraph& g, const Dart& d);

/// All faces, each starting at its smallest dart, sorted by that dart.
std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g);

/// Number of faces, without materializing the walks.
std::size_t count_faces(const EmbeddedGraph& g);

/// Euler genus (2 - (v - e + f)) / 2 of the orientable surface.
int genus(const EmbeddedGraph& g);

/// Every rotation reversed.
EmbeddedGraph mirror(const EmbeddedGraph& g);

/// True iff a and b are consecutive around their common tail, in either
/// direction. Throws DifferentTails, UnknownDart.
bool is_angle(const EmbeddedGraph& g, const Dart& a, const Dart& b);

}  // namespace rotsys
