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

#include "rotsys/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "rotsys/error.hpp"
#include "rotsys/polyhedral.hpp"

namespace rotsys {

std::uint64_t rotation_system_count(const Graph& graph) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    for (std::uint64_t k = 2; k < static_cast<std::uint64_t>(graph.degree(v)); ++k) {
      if (total > kMax / k) return kMax;
      total *= k;
    }
  }
  return total;
}

RotationEnumerator::RotationEnumerator(const Graph& graph, std::uint64_t budget)
    : graph_(graph) {
  const int n = graph.num_vertices();
  if (n < 2 || graph.num_edges() == 0) throw Error(Errc::EmptyGraph, "graph has no edges");
  if (!graph.is_connected()) throw Error(Errc::Disconnected, "graph is not connected");
  total_ = rotation_system_count(graph);
  if (total_ > budget) {
    throw Error(Errc::TooLarge, std::to_string(total_) + " rotation systems exceed the budget of " +
                                    std::to_string(budget));
  }

  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + graph.degree(v);
  tail_.resize(offset_.back());
  twin_.resize(offset_.back());
  succ_.resize(offset_.back());
  perm_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto nb = graph.neighbors(v);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      auto back = graph.neighbors(nb[k]);
      tail_[offset_[v] + k] = v;
      twin_[offset_[v] + k] =
          offset_[nb[k]] + static_cast<std::size_t>(std::lower_bound(back.begin(), back.end(), v) -
                                                    back.begin());
    }
    perm_[v].resize(nb.size());
    std::iota(perm_[v].begin(), perm_[v].end(), std::size_t{0});
    load_vertex(v);
  }
}

void RotationEnumerator::load_vertex(Vertex v) {
  const auto& p = perm_[v];
  const std::size_t base = offset_[v];
  for (std::size_t i = 0; i < p.size(); ++i) {
    succ_[base + p[i]] = base + p[(i + 1) % p.size()];
  }
}

void RotationEnumerator::advance() {
  if (done_) return;
  ++index_;
  for (Vertex v = graph_.num_vertices() - 1; v >= 0; --v) {
    auto& p = perm_[v];
    const bool more = p.size() > 2 && std::next_permutation(p.begin() + 1, p.end());
    load_vertex(v);
    if (more) return;
  }
  done_ = true;
}

std::vector<std::vector<Vertex>> RotationEnumerator::rotations() const {
  std::vector<std::vector<Vertex>> rot(perm_.size());
  for (Vertex v = 0; v < static_cast<Vertex>(perm_.size()); ++v) {
    auto nb = graph_.neighbors(v);
    for (std::size_t slot : perm_[v]) rot[v].push_back(nb[slot]);
  }
  return rot;
}

EmbeddedGraph RotationEnumerator::embedding() const {
  return build_embedding(graph_.num_vertices(), rotations());
}

std::size_t RotationEnumerator::face_count() const {
  std::vector<char> seen(succ_.size(), 0);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < succ_.size(); ++start) {
    if (seen[start]) continue;
    ++faces;
    for (std::size_t d = start; !seen[d]; d = succ_[twin_[d]]) seen[d] = 1;
  }
  return faces;
}

int RotationEnumerator::genus() const {
  const long long defect = 2 - (static_cast<long long>(graph_.num_vertices()) -
                                static_cast<long long>(graph_.num_edges()) +
                                static_cast<long long>(face_count()));
  if (defect < 0 || defect % 2 != 0) {
    internal_error("Euler defect " + std::to_string(defect) + " is negative or odd");
  }
  return static_cast<int>(defect / 2);
}

bool RotationEnumerator::all_faces_simple() const {
  std::vector<char> seen(succ_.size(), 0);
  std::vector<std::size_t> stamp(static_cast<std::size_t>(graph_.num_vertices()), 0);
  std::size_t face = 0;
  for (std::size_t start = 0; start < succ_.size(); ++start) {
    if (seen[start]) continue;
    ++face;
    std::size_t length = 0;
    for (std::size_t d = start; !seen[d]; d = succ_[twin_[d]]) {
      seen[d] = 1;
      ++length;
      if (stamp[tail_[d]] == face) return false;
      stamp[tail_[d]] = face;
    }
    if (length < 3) return false;
  }
  return true;
}

void for_each_rotation(const Graph& graph,
                       const std::function<bool(const EmbeddedGraph&, std::uint64_t)>& visit,
                       std::uint64_t budget) {
  for (RotationEnumerator it(graph, budget); !it.done(); it.advance()) {
    if (!visit(it.embedding(), it.index())) return;
  }
}

std::vector<EmbeddedGraph> enumerate_rotations(const Graph& graph, std::uint64_t budget) {
  std::vector<EmbeddedGraph> out;
  for_each_rotation(
      graph,
      [&](const EmbeddedGraph& g, std::uint64_t) {
        out.push_back(g);
        return true;
      },
      budget);
  return out;
}

std::string normalized_serialization(const EmbeddedGraph& g) {
  std::string out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto r = g.rotation(v);
    const std::size_t start =
        static_cast<std::size_t>(std::min_element(r.begin(), r.end()) - r.begin());
    out += std::to_string(v);
    out += ':';
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(r[(start + k) % r.size()]);
    }
    out += ';';
  }
  return out;
}

std::string canonical_key(const EmbeddedGraph& g) {
  return std::min(normalized_serialization(g), normalized_serialization(mirror(g)));
}

CensusReport genus_census(const Graph& graph, std::string graph_id, std::uint64_t budget) {
  CensusReport report;
  report.graph_id = std::move(graph_id);
  std::set<std::string> polyhedral_keys;
  RotationEnumerator it(graph, budget);
  report.total = it.total();
  for (; !it.done(); it.advance()) {
    ++report.raw_by_genus[it.genus()];
    if (!it.all_faces_simple()) continue;
    EmbeddedGraph g = it.embedding();
    if (check_polyhedral(g).polyhedral && polyhedral_keys.insert(canonical_key(g)).second) {
      report.polyhedral_representatives.push_back(std::move(g));
    }
  }
  // With a vertex of degree >= 3 no rotation system is its own mirror, and a
  // system and its mirror share their genus, so classes pair up exactly.
  const bool paired = graph.max_degree() >= 3;
  for (const auto& [g, raw] : report.raw_by_genus) {
    report.classes_by_genus[g] = paired ? raw / 2 : raw;
  }
  report.polyhedral_classes = report.polyhedral_representatives.size();
  return report;
}

bool is_three_connected(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n < 4 || !graph.is_connected()) return false;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const Vertex removed[] = {a, b};
      if (!graph.is_connected_without(removed)) return false;
    }
  }
  return true;
}

std::optional<EmbeddedGraph> find_planar_embedding(const Graph& graph, std::uint64_t budget) {
  for (RotationEnumerator it(graph, budget); !it.done(); it.advance()) {
    if (it.genus() == 0) return it.embedding();
  }
  return std::nullopt;
}

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::WhitneyUnique: return "WhitneyUnique";
    case Claim::CubicSimpleDualPlaneOnly: return "CubicSimpleDualPlaneOnly";
    case Claim::NoPolyhedralHigherGenus: return "NoPolyhedralHigherGenus";
    case Claim::NoPolyhedralLowConnectivity: return "NoPolyhedralLowConnectivity";
  }
  return "Unknown";
}

namespace {

// Shared bookkeeping for the verifiers: counts the systems meeting the
// claim's hypothesis and keeps the first counterexample.
struct Tally {
  VerificationResult result;
  std::set<std::string> keys;
  std::set<int> genera;

  void hypothesis(const EmbeddedGraph& g, int genus) {
    ++result.hypothesis_systems;
    keys.insert(canonical_key(g));
    genera.insert(genus);
  }

  void counterexample(const EmbeddedGraph& g, std::uint64_t index) {
    if (!result.counterexample) {
      result.counterexample = g;
      result.counterexample_index = index;
    }
  }

  VerificationResult finish(std::uint64_t checked) {
    result.systems_checked = checked;
    result.hypothesis_classes = keys.size();
    result.hypothesis_genera.assign(genera.begin(), genera.end());
    result.pass = !result.counterexample.has_value();
    return std::move(result);
  }
};

}  // namespace

VerificationResult verify_whitney(const Graph& graph, std::uint64_t budget) {
  if (!is_three_connected(graph)) throw Error(Errc::Not3Connected, "graph is not 3-connected");
  Tally tally;
  tally.result.claim = Claim::WhitneyUnique;
  std::optional<std::string> plane_key;
  std::optional<EmbeddedGraph> first_plane;
  std::uint64_t first_plane_index = 0;

  RotationEnumerator it(graph, budget);
  for (; !it.done(); it.advance()) {
    const int genus = it.genus();
    if (genus == 0 && !first_plane) {
      first_plane = it.embedding();
      first_plane_index = it.index();
    }
    if (!it.all_faces_simple()) continue;
    EmbeddedGraph g = it.embedding();
    if (!check_polyhedral(g).polyhedral) continue;
    tally.hypothesis(g, genus);
    std::string key = canonical_key(g);
    if (!plane_key) plane_key = key;
    if (genus != 0 || key != *plane_key) tally.counterexample(g, it.index());
  }
  if (!first_plane) throw Error(Errc::NotPlanar, "graph has no genus-0 rotation system");
  if (tally.keys.empty()) tally.counterexample(*first_plane, first_plane_index);
  return tally.finish(it.total());
}

VerificationResult verify_cubic_corollary(const Graph& graph, std::uint64_t budget) {
  if (graph.num_vertices() == 0 || graph.min_degree() != 3 || graph.max_degree() != 3) {
    throw Error(Errc::NotCubic, "graph is not 3-regular");
  }
  if (!is_three_connected(graph)) throw Error(Errc::Not3Connected, "graph is not 3-connected");
  Tally tally;
  tally.result.claim = Claim::CubicSimpleDualPlaneOnly;
  bool planar = false;
  RotationEnumerator it(graph, budget);
  for (; !it.done(); it.advance()) {
    const int genus = it.genus();
    planar = planar || genus == 0;
    EmbeddedGraph g = it.embedding();
    if (!dual_is_simple(g)) continue;
    tally.hypothesis(g, genus);
    if (genus != 0) tally.counterexample(g, it.index());
  }
  if (!planar) throw Error(Errc::NotPlanar, "graph has no genus-0 rotation system");
  return tally.finish(it.total());
}

VerificationResult verify_low_connectivity(const Graph& graph, std::uint64_t budget) {
  if (!graph.is_connected()) throw Error(Errc::Disconnected, "graph is not connected");
  if (is_three_connected(graph)) {
    throw Error(Errc::Is3Connected, "graph is 3-connected; the claim does not apply");
  }
  Tally tally;
  tally.result.claim = Claim::NoPolyhedralLowConnectivity;
  RotationEnumerator it(graph, budget);
  for (; !it.done(); it.advance()) {
    if (!it.all_faces_simple()) continue;
    EmbeddedGraph g = it.embedding();
    if (!check_polyhedral(g).polyhedral) continue;
    tally.hypothesis(g, it.genus());
    tally.counterexample(g, it.index());
  }
  return tally.finish(it.total());
}

VerificationResult verify_no_polyhedral_higher_genus(const Graph& graph, std::uint64_t budget) {
  Tally tally;
  tally.result.claim = Claim::NoPolyhedralHigherGenus;
  bool planar = false;
  RotationEnumerator it(graph, budget);
  for (; !it.done(); it.advance()) {
    const int genus = it.genus();
    planar = planar || genus == 0;
    if (!it.all_faces_simple()) continue;
    EmbeddedGraph g = it.embedding();
    if (!check_polyhedral(g).polyhedral) continue;
    tally.hypothesis(g, genus);
    if (genus != 0) tally.counterexample(g, it.index());
  }
  if (!planar) throw Error(Errc::NotPlanar, "graph has no genus-0 rotation system");
  return tally.finish(it.total());
}

}  // namespace rotsys
