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

#include "rotsys/graph.hpp"

#include <algorithm>
#include <string>

#include "rotsys/error.hpp"

namespace rotsys {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  std::vector<Issue> issues;
  if (n < 0) {
    issues.push_back({Errc::BadVertexId, "negative vertex count " + std::to_string(n)});
    throw EmbeddingError(std::move(issues));
  }
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      issues.push_back({Errc::BadVertexId, "edge {" + std::to_string(e.u) + "," +
                                               std::to_string(e.v) + "} outside 0.." +
                                               std::to_string(n - 1)});
      continue;
    }
    if (e.u == e.v) {
      issues.push_back({Errc::LoopEdge, "loop at vertex " + std::to_string(e.u)});
      continue;
    }
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end() && v < *dup) {
      issues.push_back({Errc::DuplicateNeighbor, "parallel edges between " + std::to_string(v) +
                                                     " and " + std::to_string(*dup)});
    }
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.num_edges_ += nb.size();
  }
  if (!issues.empty()) throw EmbeddingError(std::move(issues));
  g.num_edges_ /= 2;
  return g;
}

int Graph::min_degree() const noexcept {
  int best = 0;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    int d = static_cast<int>(adj_[v].size());
    if (v == 0 || d < best) best = d;
  }
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= num_vertices()) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const { return is_connected_without({}); }

bool Graph::is_connected_without(std::span<const Vertex> removed_vertices) const {
  const int n = num_vertices();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed_vertices) removed.at(v) = 1;
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v]) {
      if (removed[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == alive;
}

}  // namespace rotsys
