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

#include "rotsys/report.hpp"

namespace rotsys::report {

Json dart(const Dart& d) { return Json::array({d.tail, d.head}); }

Json face(const FaceWalk& w) {
  Json darts = Json::array();
  for (const Dart& d : w.darts()) darts.push_back(dart(d));
  Json j;
  j["length"] = w.size();
  j["vertices"] = w.vertices();
  j["darts"] = std::move(darts);
  return j;
}

Json rotations(const EmbeddedGraph& g) { return g.rotations(); }

Json intersection(const IntersectionKind& kind) {
  Json edges = Json::array();
  for (const Edge& e : kind.shared_edges) edges.push_back(Json::array({e.u, e.v}));
  Json j;
  j["tag"] = std::string(to_string(kind.tag));
  j["shared_vertices"] = kind.shared_vertices;
  j["shared_edges"] = std::move(edges);
  return j;
}

Json violation(const PolyhedralViolation& v) {
  Json j;
  if (const auto* ns = std::get_if<NonSimpleFace>(&v)) {
    j["type"] = "NonSimpleFace";
    j["face_index"] = ns->face_index;
    j["face"] = face(ns->face);
  } else {
    const auto& bp = std::get<BadPair>(v);
    j["type"] = "BadPair";
    j["face_indices"] = Json::array({bp.first_index, bp.second_index});
    j["faces"] = Json::array({face(bp.first), face(bp.second)});
    j["intersection"] = intersection(bp.kind);
  }
  return j;
}

Json dual(const DualGraph& d) {
  Json edges = Json::array();
  for (const DualEdge& e : d.edges) {
    Json je;
    je["primal"] = Json::array({e.primal.u, e.primal.v});
    je["faces"] = Json::array({e.face_a, e.face_b});
    edges.push_back(std::move(je));
  }
  Json j;
  j["vertices"] = d.num_vertices;
  j["edges"] = d.edges.size();
  j["loops"] = d.loop_count();
  j["parallel_edges"] = d.parallel_count();
  j["simple"] = d.is_simple();
  j["dual_edges"] = std::move(edges);
  return j;
}

Json types(const TypeAssignment& t) {
  Json arr = Json::array();
  for (VertexType vt : t.types) arr.push_back(static_cast<int>(vt));
  Json j;
  j["relation"] = std::string(to_string(t.relation));
  j["types"] = std::move(arr);
  return j;
}

namespace {

Json angle(const Angle& a) { return Json::array({dart(a.first), dart(a.second)}); }

}  // namespace

Json anchor(const ProofAnchor& a) {
  Json j;
  if (const auto* t2 = std::get_if<Type2Vertex>(&a)) {
    j["type"] = "Type2Vertex";
    j["vertex"] = t2->vertex;
    j["first_angle"] = angle(t2->first_angle);
    j["second_angle"] = angle(t2->second_angle);
  } else {
    j["type"] = "MixedEdge";
    j["edge"] = dart(std::get<MixedEdge>(a).edge);
  }
  return j;
}

Json witness(const Witness& w) {
  Json evidence;
  if (const auto* ns = std::get_if<NonSimpleFace>(&w.evidence)) {
    evidence["type"] = "NonSimpleFace";
    evidence["face_index"] = ns->face_index;
    evidence["face"] = face(ns->face);
  } else {
    const auto& cp = std::get<CrossingPair>(w.evidence);
    evidence["type"] = "CrossingPair";
    evidence["face"] = face(cp.face);
    evidence["other"] = face(cp.other);
    evidence["intersection"] = intersection(cp.kind);
  }
  Json j;
  j["anchor"] = anchor(w.anchor);
  j["evidence"] = std::move(evidence);
  return j;
}

namespace {

Json genus_map(const std::map<int, std::uint64_t>& m) {
  Json j = Json::object();
  for (const auto& [g, count] : m) j[std::to_string(g)] = count;
  return j;
}

}  // namespace

Json census(const CensusReport& c) {
  Json reps = Json::array();
  for (const auto& g : c.polyhedral_representatives) {
    Json r;
    r["genus"] = genus(g);
    r["rotations"] = rotations(g);
    reps.push_back(std::move(r));
  }
  Json j;
  j["graph"] = c.graph_id;
  j["total"] = c.total;
  j["raw_by_genus"] = genus_map(c.raw_by_genus);
  j["classes_by_genus"] = genus_map(c.classes_by_genus);
  j["polyhedral_classes"] = c.polyhedral_classes;
  j["polyhedral_representatives"] = std::move(reps);
  return j;
}

Json verification(const VerificationResult& r) {
  Json j;
  j["claim"] = std::string(to_string(r.claim));
  j["pass"] = r.pass;
  j["systems_checked"] = r.systems_checked;
  j["hypothesis_systems"] = r.hypothesis_systems;
  j["hypothesis_classes"] = r.hypothesis_classes;
  j["hypothesis_genera"] = r.hypothesis_genera;
  if (r.counterexample) {
    Json ce;
    ce["index"] = *r.counterexample_index;
    ce["genus"] = genus(*r.counterexample);
    ce["rotations"] = rotations(*r.counterexample);
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rotsys::report
