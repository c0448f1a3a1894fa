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

#include "rotsys/compare.hpp"

#include <algorithm>
#include <string>

#include "rotsys/error.hpp"

namespace rotsys {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Equal: return "Equal";
    case Relation::Mirror: return "Mirror";
    case Relation::Distinct: return "Distinct";
  }
  return "Unknown";
}

std::string_view to_string(VertexType t) {
  switch (t) {
    case VertexType::Same: return "+1";
    case VertexType::Reversed: return "-1";
    case VertexType::Other: return "2";
  }
  return "?";
}

namespace {

std::vector<Vertex> normalized(std::span<const Vertex> seq) {
  std::vector<Vertex> out(seq.begin(), seq.end());
  if (!out.empty()) std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> normalized_reverse(std::span<const Vertex> seq) {
  return normalized(std::vector<Vertex>(seq.rbegin(), seq.rend()));
}

}  // namespace

bool same_cyclic_order(std::span<const Vertex> a, std::span<const Vertex> b) {
  return a.size() == b.size() && normalized(a) == normalized(b);
}

void require_same_graph(const EmbeddedGraph& a, const EmbeddedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.underlying() != b.underlying()) {
    throw Error(Errc::UnderlyingMismatch, "embeddings are on different labeled graphs");
  }
}

namespace {

VertexType type_unchecked(const EmbeddedGraph& ref, const EmbeddedGraph& cand, Vertex v) {
  auto c = normalized(cand.rotation(v));
  if (c == normalized(ref.rotation(v))) return VertexType::Same;
  if (c == normalized_reverse(ref.rotation(v))) return VertexType::Reversed;
  return VertexType::Other;
}

void require_degree(const EmbeddedGraph& g, Vertex v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw Error(Errc::BadVertexId, "vertex " + std::to_string(v) + " is out of range");
  }
  if (g.degree(v) <= 2) {
    throw Error(Errc::LowDegree, "vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(g.degree(v)) +
                                     "; its rotation equals its reversal");
  }
}

}  // namespace

VertexType vertex_type(const EmbeddedGraph& ref, const EmbeddedGraph& cand, Vertex v) {
  require_same_graph(ref, cand);
  require_degree(ref, v);
  return type_unchecked(ref, cand, v);
}

TypeAssignment classify_types(const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
  require_same_graph(ref, cand);
  const int n = ref.num_vertices();
  for (Vertex v = 0; v < n; ++v) require_degree(ref, v);

  TypeAssignment out;
  out.types.reserve(n);
  for (Vertex v = 0; v < n; ++v) out.types.push_back(type_unchecked(ref, cand, v));

  auto all = [&](VertexType t) {
    return std::all_of(out.types.begin(), out.types.end(), [t](VertexType x) { return x == t; });
  };
  if (all(VertexType::Same)) {
    out.relation = Relation::Equal;
  } else if (all(VertexType::Reversed)) {
    out.relation = Relation::Mirror;
  } else {
    out.relation = Relation::Distinct;
    // Not all equal and not all reversed: either some vertex is of type 2, or
    // both +1 and -1 occur, and connectivity forces an edge joining them.
    bool anchored = std::find(out.types.begin(), out.types.end(), VertexType::Other) !=
                    out.types.end();
    for (std::size_t i = 0; !anchored && i < ref.num_darts(); ++i) {
      Dart d = ref.dart_at(i);
      anchored = out.types[d.tail] == VertexType::Same && out.types[d.head] == VertexType::Reversed;
    }
    if (!anchored) internal_error("distinct embeddings without a type-2 vertex or mixed edge");
  }
  return out;
}

bool equivalent(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
  require_same_graph(g1, g2);
  bool equal = true;
  bool mirrored = true;
  for (Vertex v = 0; v < g1.num_vertices() && (equal || mirrored); ++v) {
    auto a = normalized(g1.rotation(v));
    if (equal && a != normalized(g2.rotation(v))) equal = false;
    if (mirrored && a != normalized_reverse(g2.rotation(v))) mirrored = false;
  }
  return equal || mirrored;
}

}  // namespace rotsys
