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

#include "rotsys/witness.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rotsys/compare.hpp"
#include "rotsys/enumerate.hpp"
#include "rotsys/error.hpp"

namespace rotsys {

void check_witness_preconditions(const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
  if (ref.num_vertices() != cand.num_vertices() || ref.underlying() != cand.underlying()) {
    throw PreconditionError(Precondition::UnderlyingMismatch);
  }
  if (genus(ref) != 0) throw PreconditionError(Precondition::NotPlane);
  if (!check_polyhedral(ref).polyhedral) throw PreconditionError(Precondition::NotPolyhedralRef);
  if (!is_three_connected(ref.underlying())) throw PreconditionError(Precondition::Not3Connected);
  if (equivalent(ref, cand)) {
    throw Error(Errc::EquivalentInput, "candidate is the reference embedding or its mirror");
  }
}

namespace {

std::size_t position_in(std::span<const Vertex> rot, Vertex x) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), x) - rot.begin());
}

Type2Vertex type2_anchor(const EmbeddedGraph& ref, const EmbeddedGraph& cand, Vertex v) {
  const auto c = cand.rotation(v);
  const std::size_t d = c.size();
  const auto r = ref.rotation(v);
  auto dart = [v](Vertex to) { return Dart{v, to}; };

  // Move to an angle {c[j], c[j+1]} of the candidate that is not an angle of
  // the reference.
  std::size_t shift = 0;
  if (is_angle(ref, dart(c[0]), dart(c[1]))) {
    // Read the reference in the direction where c[1] follows c[0].
    const bool forward = next_dart(ref, dart(c[0])) == dart(c[1]);
    auto follows = [&](Vertex x) {
      std::size_t p = position_in(r, x);
      return forward ? r[(p + 1) % d] : r[(p + d - 1) % d];
    };
    std::size_t j = 1;
    while (j < d && follows(c[j]) == c[(j + 1) % d]) ++j;
    if (j == d) internal_error("type-2 vertex " + std::to_string(v) + " matches the reference");
    shift = j;
  }
  std::vector<Vertex> e(d);
  for (std::size_t k = 0; k < d; ++k) e[k] = c[(k + shift) % d];
  if (is_angle(ref, dart(e[0]), dart(e[1]))) internal_error("first angle is a reference angle");

  // The reference order read from e[0]: e[0], block A, e[1], block B.
  // Reflect so that e[d-1] lies in block B.
  std::vector<Vertex> order(d);
  const std::size_t p0 = position_in(r, e[0]);
  for (std::size_t k = 0; k < d; ++k) order[k] = r[(p0 + k) % d];
  auto split = std::find(order.begin(), order.end(), e[1]);
  if (std::find(order.begin() + 1, split, e[d - 1]) != split) {
    std::reverse(order.begin() + 1, order.end());
    split = std::find(order.begin(), order.end(), e[1]);
  }
  std::vector<std::size_t> label(static_cast<std::size_t>(cand.num_vertices()), 0);
  for (std::size_t k = 0; k < d; ++k) label[e[k]] = k;

  std::size_t y = 0;
  for (auto it = order.begin() + 1; it != split; ++it) y = std::max(y, label[*it]);
  const bool in_b = y + 1 < d && std::find(split + 1, order.end(), e[y + 1]) != order.end();
  if (y == 0 || !in_b) internal_error("second angle construction failed at vertex " + std::to_string(v));

  return Type2Vertex{v, Angle{dart(e[0]), dart(e[1])}, Angle{dart(e[y]), dart(e[y + 1])}, shift, y};
}

}  // namespace

ProofAnchor find_proof_anchor(const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
  check_witness_preconditions(ref, cand);
  const TypeAssignment types = classify_types(ref, cand);
  for (Vertex v = 0; v < ref.num_vertices(); ++v) {
    if (types.types[v] == VertexType::Other) return type2_anchor(ref, cand, v);
  }
  const Graph graph = ref.underlying();
  for (Vertex a = 0; a < ref.num_vertices(); ++a) {
    if (types.types[a] != VertexType::Same) continue;
    for (Vertex b : graph.neighbors(a)) {
      if (types.types[b] == VertexType::Reversed) return MixedEdge{{a, b}};
    }
  }
  internal_error("non-equivalent candidate without a type-2 vertex or mixed edge");
}

bool crossing_at_vertex(const EmbeddedGraph& ref, const Angle& p1, const Angle& p2) {
  const Vertex v = p1.first.tail;
  if (p1.second.tail != v || p2.first.tail != v || p2.second.tail != v) {
    throw Error(Errc::DifferentTails, "angle darts do not share a tail");
  }
  std::vector<Dart> all{p1.first, p1.second, p2.first, p2.second};
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(Errc::SharedDart, "angle pairs share a dart");
  }
  for (const Dart& x : all) ref.dart_index(x);

  const auto r = ref.rotation(v);
  const std::size_t d = r.size();
  const std::size_t base = position_in(r, p1.first.head);
  auto offset = [&](const Dart& x) { return (position_in(r, x.head) + d - base) % d; };
  const std::size_t end = offset(p1.second);
  const bool c_inside = offset(p2.first) < end;
  const bool d_inside = offset(p2.second) < end;
  return c_inside != d_inside;
}

namespace {

const FaceWalk* face_containing(const std::vector<FaceWalk>& faces, const Dart& d) {
  for (const auto& f : faces) {
    if (f.contains(d)) return &f;
  }
  return nullptr;
}

/// True iff `seq` occurs as consecutive darts of the cyclic walk.
bool contains_run(const FaceWalk& w, std::span<const Dart> seq) {
  const std::size_t start = w.index_of(seq.front());
  if (start == w.size()) return false;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (w[(start + k) % w.size()] != seq[k]) return false;
  }
  return true;
}

Dart previous_dart(const EmbeddedGraph& g, const Dart& d) {
  const auto r = g.rotation(d.tail);
  const std::size_t p = position_in(r, d.head);
  return {d.tail, r[(p + r.size() - 1) % r.size()]};
}

struct Runs {
  std::vector<Dart> face;
  std::vector<Dart> other;
};

// The dart runs each face of the evidence must traverse, derived from the
// anchor and the reference rotation only.
Runs expected_runs(const EmbeddedGraph& ref, const ProofAnchor& anchor) {
  if (const auto* t2 = std::get_if<Type2Vertex>(&anchor)) {
    return {{t2->first_angle.first.inverse(), t2->first_angle.second},
            {t2->second_angle.first.inverse(), t2->second_angle.second}};
  }
  const Dart e0 = std::get<MixedEdge>(anchor).edge;
  const Dart e1 = next_dart(ref, e0);
  const Dart ed = previous_dart(ref, e0);
  const Dart f1 = next_dart(ref, e0.inverse());
  const Dart fd = previous_dart(ref, e0.inverse());
  return {{ed.inverse(), e0, fd}, {f1.inverse(), e0.inverse(), e1}};
}

bool anchor_is_valid(const EmbeddedGraph& ref, const EmbeddedGraph& cand,
                     const ProofAnchor& anchor) {
  const TypeAssignment types = classify_types(ref, cand);
  if (const auto* t2 = std::get_if<Type2Vertex>(&anchor)) {
    if (types.types.at(t2->vertex) != VertexType::Other) return false;
    for (const Angle& a : {t2->first_angle, t2->second_angle}) {
      if (a.first.tail != t2->vertex) return false;
      if (next_dart(cand, a.first) != a.second) return false;
      if (is_angle(ref, a.first, a.second)) return false;
    }
    return crossing_at_vertex(ref, t2->first_angle, t2->second_angle);
  }
  const Dart e = std::get<MixedEdge>(anchor).edge;
  return ref.has_dart(e) && types.types.at(e.tail) == VertexType::Same &&
         types.types.at(e.head) == VertexType::Reversed;
}

}  // namespace

Witness extract_witness(const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
  ProofAnchor anchor = find_proof_anchor(ref, cand);
  const auto faces = trace_faces(cand);

  std::optional<Witness> witness;
  for (std::size_t i = 0; i < faces.size() && !witness; ++i) {
    if (!is_simple_face(faces[i])) witness = Witness{anchor, NonSimpleFace{i, faces[i]}};
  }
  if (!witness) {
    const Runs runs = expected_runs(ref, anchor);
    const FaceWalk* f = face_containing(faces, runs.face[1]);
    const FaceWalk* g = face_containing(faces, runs.other[1]);
    if (f == nullptr || g == nullptr || *f == *g) {
      internal_error("crossing faces coincide although every face is simple");
    }
    witness = Witness{anchor, CrossingPair{*f, *g, face_intersection(*f, *g)}};
  }
  if (!verify_witness(ref, cand, *witness)) {
    internal_error("extracted certificate does not verify");
  }
  return *std::move(witness);
}

bool verify_witness(const EmbeddedGraph& ref, const EmbeddedGraph& cand, const Witness& w) {
  if (!anchor_is_valid(ref, cand, w.anchor)) return false;
  const auto faces = trace_faces(cand);
  auto is_face = [&](const FaceWalk& f) {
    return std::find(faces.begin(), faces.end(), f) != faces.end();
  };
  if (const auto* ns = std::get_if<NonSimpleFace>(&w.evidence)) {
    return is_face(ns->face) && !is_simple_face(ns->face);
  }
  const auto& cp = std::get<CrossingPair>(w.evidence);
  if (!is_face(cp.face) || !is_face(cp.other) || cp.face == cp.other) return false;
  const Runs runs = expected_runs(ref, w.anchor);
  if (!contains_run(cp.face, runs.face) || !contains_run(cp.other, runs.other)) return false;
  const IntersectionKind kind = face_intersection(cp.face, cp.other);
  return kind == cp.kind && kind.violates();
}

}  // namespace rotsys
