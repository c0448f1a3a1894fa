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

#include "rotsys/embedding.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "rotsys/error.hpp"

namespace rotsys {

std::ostream& operator<<(std::ostream& os, const Dart& d) {
  return os << '(' << d.tail << ',' << d.head << ')';
}

FaceWalk::FaceWalk(std::vector<Dart> darts) : darts_(std::move(darts)) {
  if (darts_.empty()) internal_error("empty face walk");
  auto smallest = std::min_element(darts_.begin(), darts_.end());
  std::rotate(darts_.begin(), smallest, darts_.end());
}

std::vector<Vertex> FaceWalk::vertices() const {
  std::vector<Vertex> out;
  out.reserve(darts_.size());
  for (const Dart& d : darts_) out.push_back(d.tail);
  return out;
}

bool FaceWalk::contains(const Dart& d) const { return index_of(d) != darts_.size(); }

std::size_t FaceWalk::index_of(const Dart& d) const {
  return static_cast<std::size_t>(std::find(darts_.begin(), darts_.end(), d) - darts_.begin());
}

std::ostream& operator<<(std::ostream& os, const FaceWalk& w) {
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i];
  }
  return os << ']';
}

int EmbeddedGraph::degree(Vertex v) const {
  return static_cast<int>(offsets_.at(v + 1) - offsets_.at(v));
}

std::span<const Vertex> EmbeddedGraph::rotation(Vertex v) const {
  return std::span<const Vertex>(heads_).subspan(offsets_.at(v), degree(v));
}

std::vector<std::vector<Vertex>> EmbeddedGraph::rotations() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_vertices());
  for (Vertex v = 0; v < num_vertices(); ++v) {
    auto r = rotation(v);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

std::size_t EmbeddedGraph::position(Vertex tail, Vertex head) const noexcept {
  if (tail < 0 || tail >= num_vertices()) return heads_.size();
  auto first = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[tail]);
  auto last = heads_.begin() + static_cast<std::ptrdiff_t>(offsets_[tail + 1]);
  auto it = std::find(first, last, head);
  return it == last ? heads_.size() : static_cast<std::size_t>(it - heads_.begin());
}

bool EmbeddedGraph::has_dart(const Dart& d) const noexcept {
  return position(d.tail, d.head) != heads_.size();
}

std::size_t EmbeddedGraph::dart_index(const Dart& d) const {
  std::size_t i = position(d.tail, d.head);
  if (i == heads_.size()) {
    throw Error(Errc::UnknownDart, "dart (" + std::to_string(d.tail) + "," +
                                       std::to_string(d.head) + ") is not in the embedding");
  }
  return i;
}

Dart EmbeddedGraph::dart_at(std::size_t index) const { return {tails_.at(index), heads_.at(index)}; }

std::size_t EmbeddedGraph::next_index(std::size_t index) const {
  Vertex t = tails_.at(index);
  return index + 1 == offsets_[t + 1] ? offsets_[t] : index + 1;
}

Graph EmbeddedGraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (std::size_t i = 0; i < heads_.size(); ++i) {
    if (tails_[i] < heads_[i]) edges.emplace_back(tails_[i], heads_[i]);
  }
  return Graph::from_edges(num_vertices(), edges);
}

EmbeddedGraph build_embedding(int n, const std::vector<std::vector<Vertex>>& rotations) {
  std::vector<Issue> issues;
  auto pair_str = [](Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  if (n < 0) {
    throw EmbeddingError({{Errc::BadVertexId, "negative vertex count " + std::to_string(n)}});
  }
  if (rotations.size() != static_cast<std::size_t>(n)) {
    issues.push_back({Errc::BadVertexId, "rotation table has " + std::to_string(rotations.size()) +
                                             " entries for " + std::to_string(n) + " vertices"});
    throw EmbeddingError(std::move(issues));
  }
  if (n < 2) {
    issues.push_back({Errc::EmptyGraph, "an embedding needs at least one edge"});
  }

  // Adjacency restricted to in-range, non-loop entries; drives the symmetry
  // and connectivity checks.
  std::vector<std::vector<Vertex>> clean(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : rotations[v]) {
      if (u < 0 || u >= n) {
        issues.push_back({Errc::BadVertexId, "vertex " + std::to_string(v) +
                                                 " lists out-of-range neighbor " + std::to_string(u),
                          v});
      } else if (u == v) {
        issues.push_back({Errc::LoopEdge, "vertex " + std::to_string(v) + " lists itself", v});
      } else {
        clean[v].push_back(u);
      }
    }
    auto sorted = clean[v];
    std::sort(sorted.begin(), sorted.end());
    for (auto it = sorted.begin(); (it = std::adjacent_find(it, sorted.end())) != sorted.end();) {
      Vertex dup = *it;
      issues.push_back({Errc::DuplicateNeighbor,
                        "vertex " + std::to_string(v) + " lists neighbor " + std::to_string(dup) +
                            " more than once",
                        v});
      it = std::upper_bound(it, sorted.end(), dup);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : clean[v]) {
      if (std::find(clean[u].begin(), clean[u].end(), v) == clean[u].end()) {
        issues.push_back({Errc::AsymmetricAdjacency,
                          "dart " + pair_str(v, u) + " has no inverse " + pair_str(u, v), v});
      }
    }
  }
  if (n >= 2) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : clean[v]) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end()) {
      const Vertex lost = static_cast<Vertex>(missing - seen.begin());
      issues.push_back(
          {Errc::Disconnected, "vertex " + std::to_string(lost) + " is unreachable from vertex 0", lost});
    }
  }
  if (!issues.empty()) throw EmbeddingError(std::move(issues));

  EmbeddedGraph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + rotations[v].size();
  g.heads_.reserve(g.offsets_.back());
  g.tails_.reserve(g.offsets_.back());
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : rotations[v]) {
      g.heads_.push_back(u);
      g.tails_.push_back(v);
    }
  }
  g.twin_.resize(g.heads_.size());
  for (std::size_t i = 0; i < g.heads_.size(); ++i) {
    g.twin_[i] = g.position(g.heads_[i], g.tails_[i]);
  }
  return g;
}

Dart next_dart(const EmbeddedGraph& g, const Dart& d) {
  return g.dart_at(g.next_index(g.dart_index(d)));
}

std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g) {
  std::vector<char> seen(g.num_darts(), 0);
  std::vector<FaceWalk> faces;
  for (std::size_t start = 0; start < g.num_darts(); ++start) {
    if (seen[start]) continue;
    std::vector<Dart> walk;
    std::size_t d = start;
    do {
      seen[d] = 1;
      walk.push_back(g.dart_at(d));
      d = g.next_index(g.inverse_index(d));
    } while (d != start);
    faces.emplace_back(std::move(walk));
  }
  std::sort(faces.begin(), faces.end(),
            [](const FaceWalk& a, const FaceWalk& b) { return a.front() < b.front(); });
  return faces;
}

std::size_t count_faces(const EmbeddedGraph& g) {
  std::vector<char> seen(g.num_darts(), 0);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < g.num_darts(); ++start) {
    if (seen[start]) continue;
    ++faces;
    for (std::size_t d = start; !seen[d]; d = g.next_index(g.inverse_index(d))) seen[d] = 1;
  }
  return faces;
}

int genus(const EmbeddedGraph& g) {
  const long long v = g.num_vertices();
  const long long e = static_cast<long long>(g.num_edges());
  const long long f = static_cast<long long>(count_faces(g));
  const long long defect = 2 - (v - e + f);
  if (defect < 0 || defect % 2 != 0) {
    internal_error("Euler defect " + std::to_string(defect) + " is negative or odd");
  }
  return static_cast<int>(defect / 2);
}

EmbeddedGraph mirror(const EmbeddedGraph& g) {
  auto rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return build_embedding(g.num_vertices(), rot);
}

bool is_angle(const EmbeddedGraph& g, const Dart& a, const Dart& b) {
  if (a.tail != b.tail) {
    throw Error(Errc::DifferentTails, "darts do not share a tail");
  }
  if (a == b) throw Error(Errc::SharedDart, "an angle needs two distinct darts");
  std::size_t ia = g.dart_index(a);
  std::size_t ib = g.dart_index(b);
  return g.next_index(ia) == ib || g.next_index(ib) == ia;
}

}  // namespace rotsys
