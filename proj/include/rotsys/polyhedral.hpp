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

// Polyhedrality of an embedding: every face is a simple cycle and any two
// faces meet in nothing, one vertex, or one edge. For cubic graphs the same
// property is equivalent to the dual being simple; both are provided here as
// separate computations so one can be checked against the other.

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "rotsys/embedding.hpp"

namespace rotsys {

struct IntersectionKind {
  enum class Tag { Empty, OneVertex, OneEdge, Violation };

  Tag tag = Tag::Empty;
  std::vector<Vertex> shared_vertices;  // sorted
  std::vector<Edge> shared_edges;       // sorted

  bool violates() const noexcept { return tag == Tag::Violation; }

  friend bool operator==(const IntersectionKind&, const IntersectionKind&) = default;
};

std::string_view to_string(IntersectionKind::Tag tag);

/// Classifies two vertex/edge sets (both sorted and deduplicated).
IntersectionKind classify_intersection(std::vector<Vertex> shared_vertices,
                                       std::vector<Edge> shared_edges);

/// True iff no vertex repeats along the walk. Length-2 walks (the two darts
/// of one edge) repeat their edge and are reported non-simple.
bool is_simple_face(const FaceWalk& w);

/// Throws Error(SameFace) when f1 == f2.
IntersectionKind face_intersection(const FaceWalk& f1, const FaceWalk& f2);

struct NonSimpleFace {
  std::size_t face_index = 0;  // position in trace_faces order
  FaceWalk face;
};

struct BadPair {
  std::size_t first_index = 0;
  std::size_t second_index = 0;
  FaceWalk first;
  FaceWalk second;
  IntersectionKind kind;
};

using PolyhedralViolation = std::variant<NonSimpleFace, BadPair>;

struct PolyhedralVerdict {
  bool polyhedral = true;
  std::optional<PolyhedralViolation> violation;
};

/// Reports the first non-simple face in face order; if every face is simple,
/// the first offending pair (i, j), i < j, in lexicographic order.
PolyhedralVerdict check_polyhedral(const EmbeddedGraph& g);

struct DualEdge {
  std::size_t face_a = 0;  // face_a <= face_b; indices into trace_faces order
  std::size_t face_b = 0;
  Edge primal;

  bool is_loop() const noexcept { return face_a == face_b; }
};

/// Multigraph with one vertex per face and one edge per primal edge.
struct DualGraph {
  std::size_t num_vertices = 0;
  std::vector<DualEdge> edges;  // in primal edge order

  std::size_t loop_count() const;
  /// Number of non-loop edges sharing their endpoints with another edge.
  std::size_t parallel_count() const;
  bool is_simple() const { return loop_count() == 0 && parallel_count() == 0; }
};

DualGraph build_dual(const EmbeddedGraph& g);

bool dual_is_simple(const EmbeddedGraph& g);

}  // namespace rotsys
