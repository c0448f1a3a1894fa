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

#include "rotsys/polyhedral.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <utility>

#include "rotsys/error.hpp"

namespace rotsys {

std::string_view to_string(IntersectionKind::Tag tag) {
  switch (tag) {
    case IntersectionKind::Tag::Empty: return "Empty";
    case IntersectionKind::Tag::OneVertex: return "OneVertex";
    case IntersectionKind::Tag::OneEdge: return "OneEdge";
    case IntersectionKind::Tag::Violation: return "Violation";
  }
  return "Unknown";
}

IntersectionKind classify_intersection(std::vector<Vertex> shared_vertices,
                                       std::vector<Edge> shared_edges) {
  using Tag = IntersectionKind::Tag;
  IntersectionKind kind;
  if (shared_vertices.empty()) {
    kind.tag = Tag::Empty;
  } else if (shared_vertices.size() == 1) {
    kind.tag = Tag::OneVertex;
  } else if (shared_vertices.size() == 2 && shared_edges.size() == 1 &&
             shared_edges.front() == Edge(shared_vertices[0], shared_vertices[1])) {
    kind.tag = Tag::OneEdge;
  } else {
    kind.tag = Tag::Violation;
  }
  kind.shared_vertices = std::move(shared_vertices);
  kind.shared_edges = std::move(shared_edges);
  return kind;
}

bool is_simple_face(const FaceWalk& w) {
  if (w.size() < 3) return false;
  auto verts = w.vertices();
  std::sort(verts.begin(), verts.end());
  return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

namespace {

std::vector<Vertex> vertex_set(const FaceWalk& w) {
  auto v = w.vertices();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Edge> edge_set(const FaceWalk& w) {
  std::vector<Edge> e;
  e.reserve(w.size());
  for (const Dart& d : w.darts()) e.emplace_back(d.tail, d.head);
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return e;
}

struct FaceSets {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

IntersectionKind intersect(const FaceSets& a, const FaceSets& b) {
  std::vector<Vertex> sv;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                        b.vertices.end(), std::back_inserter(sv));
  std::vector<Edge> se;
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::back_inserter(se));
  return classify_intersection(std::move(sv), std::move(se));
}

}  // namespace

IntersectionKind face_intersection(const FaceWalk& f1, const FaceWalk& f2) {
  if (f1 == f2) throw Error(Errc::SameFace, "a face is not intersected with itself");
  return intersect({vertex_set(f1), edge_set(f1)}, {vertex_set(f2), edge_set(f2)});
}

PolyhedralVerdict check_polyhedral(const EmbeddedGraph& g) {
  auto faces = trace_faces(g);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (!is_simple_face(faces[i])) {
      return {false, NonSimpleFace{i, faces[i]}};
    }
  }
  std::vector<FaceSets> sets;
  sets.reserve(faces.size());
  for (const auto& f : faces) sets.push_back({vertex_set(f), edge_set(f)});
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      auto kind = intersect(sets[i], sets[j]);
      if (kind.violates()) {
        return {false, BadPair{i, j, faces[i], faces[j], std::move(kind)}};
      }
    }
  }
  return {true, std::nullopt};
}

std::size_t DualGraph::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const DualEdge& e) { return e.is_loop(); }));
}

std::size_t DualGraph::parallel_count() const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> multiplicity;
  for (const auto& e : edges) {
    if (!e.is_loop()) ++multiplicity[{e.face_a, e.face_b}];
  }
  std::size_t count = 0;
  for (const auto& [ends, m] : multiplicity) {
    if (m > 1) count += m;
  }
  return count;
}

DualGraph build_dual(const EmbeddedGraph& g) {
  // Face label per dart index, following the same face order as trace_faces.
  auto faces = trace_faces(g);
  std::vector<std::size_t> face_of(g.num_darts());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const Dart& d : faces[f].darts()) face_of[g.dart_index(d)] = f;
  }
  DualGraph dual;
  dual.num_vertices = faces.size();
  for (const Edge& e : g.underlying().edges()) {
    std::size_t a = face_of[g.dart_index({e.u, e.v})];
    std::size_t b = face_of[g.dart_index({e.v, e.u})];
    dual.edges.push_back({std::min(a, b), std::max(a, b), e});
  }
  return dual;
}

bool dual_is_simple(const EmbeddedGraph& g) { return build_dual(g).is_simple(); }

}  // namespace rotsys
