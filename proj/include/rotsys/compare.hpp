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

#include <span>
#include <string_view>
#include <vector>

#include "rotsys/embedding.hpp"

namespace rotsys {

/// How a candidate rotation at a vertex relates to a reference rotation:
/// same cyclic order (+1), reversed order (-1), or neither (2).
enum class VertexType : int { Same = 1, Reversed = -1, Other = 2 };

enum class Relation { Equal, Mirror, Distinct };

std::string_view to_string(Relation r);

/// "+1", "-1" or "2".
std::string_view to_string(VertexType t);

struct TypeAssignment {
  std::vector<VertexType> types;  // indexed by vertex
  Relation relation = Relation::Equal;
};

/// Cyclic-sequence equality: both sequences are rotated to start at their
/// smallest element before comparing.
bool same_cyclic_order(std::span<const Vertex> a, std::span<const Vertex> b);

/// Throws Error(UnderlyingMismatch) unless both embeddings live on the same
/// labeled graph.
void require_same_graph(const EmbeddedGraph& a, const EmbeddedGraph& b);

/// Throws UnderlyingMismatch, or LowDegree when degree(v) <= 2.
VertexType vertex_type(const EmbeddedGraph& ref, const EmbeddedGraph& cand, Vertex v);

/// Types of every vertex. Requires minimum degree 3.
TypeAssignment classify_types(const EmbeddedGraph& ref, const EmbeddedGraph& cand);

/// True iff g1 equals g2 or mirror(g2), vertex by vertex as cyclic orders.
bool equivalent(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

}  // namespace rotsys
