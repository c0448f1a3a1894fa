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

// Certificates that an embedding of a 3-connected planar graph which is not
// equivalent to its plane embedding fails to be polyhedral.
//
// Given the plane reference embedding and a candidate, the candidate either
// has a vertex whose rotation is neither the reference's nor its reversal
// (a type-2 vertex), or it has an edge joining a vertex that agrees with the
// reference to one that agrees with the mirror. In the first case two angles
// of the candidate at that vertex interleave in the reference rotation; in
// the second the two faces on either side of the edge cross along it. Either
// way the two candidate faces through these spots, read as closed curves in
// the plane embedding, cross and must meet again, so their intersection is
// more than a vertex or an edge.

#pragma once

#include <cstddef>
#include <variant>

#include "rotsys/embedding.hpp"
#include "rotsys/polyhedral.hpp"

namespace rotsys {

/// Two darts at a common tail with next_dart(cand, first) == second.
struct Angle {
  Dart first;
  Dart second;

  friend bool operator==(const Angle&, const Angle&) = default;
};

struct Type2Vertex {
  Vertex vertex = 0;
  Angle first_angle;
  Angle second_angle;
  // Audit trail of the construction: rotation offset applied to the
  // candidate's order so the first angle sits at positions 0,1, and the
  // position y of the second angle's first dart after that offset.
  std::size_t shift = 0;
  std::size_t y = 0;
};

/// Dart from a type +1 vertex to a type -1 vertex.
struct MixedEdge {
  Dart edge;
};

using ProofAnchor = std::variant<Type2Vertex, MixedEdge>;

struct CrossingPair {
  FaceWalk face;   // through the first angle, or through the mixed edge
  FaceWalk other;  // through the second angle, or through its inverse
  IntersectionKind kind;
};

struct Witness {
  ProofAnchor anchor;
  std::variant<NonSimpleFace, CrossingPair> evidence;
};

/// Throws PreconditionError when `ref` is not a plane polyhedral embedding of
/// a 3-connected graph or the graphs differ, and Error(EquivalentInput) when
/// `cand` is `ref` or its mirror.
void check_witness_preconditions(const EmbeddedGraph& ref, const EmbeddedGraph& cand);

/// Type2Vertex at the smallest type-2 vertex if there is one, otherwise the
/// lexicographically smallest MixedEdge.
ProofAnchor find_proof_anchor(const EmbeddedGraph& ref, const EmbeddedGraph& cand);

/// True iff the heads of p1 separate the heads of p2 in ref's rotation at
/// their common tail. Throws DifferentTails, SharedDart, UnknownDart.
bool crossing_at_vertex(const EmbeddedGraph& ref, const Angle& p1, const Angle& p2);

/// Anchor plus evidence, re-verified before returning. Throws InternalError
/// if no violation materializes.
Witness extract_witness(const EmbeddedGraph& ref, const EmbeddedGraph& cand);

/// Recomputes every claim in `w` from scratch against ref and cand.
bool verify_witness(const EmbeddedGraph& ref, const EmbeddedGraph& cand, const Witness& w);

}  // namespace rotsys
