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

// Exhaustive enumeration of rotation systems and the verifiers built on it.
//
// A graph with degrees d_v has prod_v (d_v - 1)! rotation systems. They are
// produced in a fixed order: every vertex lists its smallest neighbor first,
// the remaining neighbors of each vertex run through their permutations in
// lexicographic order, and the tuple of per-vertex permutations advances like
// an odometer with the highest vertex id turning fastest.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rotsys/embedding.hpp"
#include "rotsys/graph.hpp"

namespace rotsys {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// prod_v (deg(v) - 1)!, saturating at UINT64_MAX.
std::uint64_t rotation_system_count(const Graph& graph);

/// Walks the rotation systems of a connected graph in enumeration order.
///
///   RotationEnumerator it(graph);
///   for (; !it.done(); it.advance()) use(it.embedding());
///
/// face_count() and all_faces_simple() work on the cursor's own dart arrays
/// and are much cheaper than materializing the embedding.
class RotationEnumerator {
 public:
  /// Throws Error(Disconnected), Error(EmptyGraph), or Error(TooLarge) when
  /// the system count exceeds `budget`.
  explicit RotationEnumerator(const Graph& graph, std::uint64_t budget = kDefaultBudget);

  bool done() const noexcept { return done_; }
  void advance();

  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t total() const noexcept { return total_; }

  std::vector<std::vector<Vertex>> rotations() const;
  EmbeddedGraph embedding() const;

  std::size_t face_count() const;
  int genus() const;
  bool all_faces_simple() const;

 private:
  void load_vertex(Vertex v);

  Graph graph_;
  std::vector<std::size_t> offset_;           // first dart id of each vertex
  std::vector<Vertex> tail_;                  // by dart id
  std::vector<std::size_t> twin_;             // by dart id
  std::vector<std::vector<std::size_t>> perm_;  // neighbor slots per vertex
  std::vector<std::size_t> succ_;             // rotation successor by dart id
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
  bool done_ = false;
};

/// Calls `visit(embedding, index)` for every rotation system; stops early
/// when `visit` returns false.
void for_each_rotation(const Graph& graph,
                       const std::function<bool(const EmbeddedGraph&, std::uint64_t)>& visit,
                       std::uint64_t budget = kDefaultBudget);

/// All rotation systems, materialized.
std::vector<EmbeddedGraph> enumerate_rotations(const Graph& graph,
                                               std::uint64_t budget = kDefaultBudget);

/// Rotation system written with every rotation starting at its smallest
/// neighbor, e.g. "0:1,3,2;1:0,2,3;".
std::string normalized_serialization(const EmbeddedGraph& g);

/// The smaller of the normalized serializations of g and mirror(g). Equal
/// keys mean equivalent embeddings of the same labeled graph.
std::string canonical_key(const EmbeddedGraph& g);

struct CensusReport {
  std::string graph_id;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> raw_by_genus;
  std::map<int, std::uint64_t> classes_by_genus;
  std::size_t polyhedral_classes = 0;
  /// First enumerated member of each polyhedral class, in enumeration order.
  std::vector<EmbeddedGraph> polyhedral_representatives;
};

CensusReport genus_census(const Graph& graph, std::string graph_id,
                          std::uint64_t budget = kDefaultBudget);

/// At least 4 vertices, and connected after deleting any two of them.
bool is_three_connected(const Graph& graph);

/// The first enumerated rotation system of genus 0, if any.
std::optional<EmbeddedGraph> find_planar_embedding(const Graph& graph,
                                                   std::uint64_t budget = kDefaultBudget);

enum class Claim {
  WhitneyUnique,
  CubicSimpleDualPlaneOnly,
  NoPolyhedralHigherGenus,
  NoPolyhedralLowConnectivity,
};

std::string_view to_string(Claim c);

struct VerificationResult {
  Claim claim = Claim::WhitneyUnique;
  bool pass = false;
  std::optional<EmbeddedGraph> counterexample;
  std::optional<std::uint64_t> counterexample_index;
  std::uint64_t systems_checked = 0;
  /// Rotation systems satisfying the claim's hypothesis: polyhedral ones for
  /// Whitney, the low-connectivity note and the higher-genus check; those
  /// with a simple dual for the cubic check.
  std::uint64_t hypothesis_systems = 0;
  std::size_t hypothesis_classes = 0;
  /// Genera met among those systems.
  std::vector<int> hypothesis_genera;
};

/// Exactly one polyhedral mirror class, and it is plane. Throws
/// Not3Connected, NotPlanar, TooLarge.
VerificationResult verify_whitney(const Graph& graph, std::uint64_t budget = kDefaultBudget);

/// Every rotation system with a simple dual has genus 0. Throws NotCubic,
/// Not3Connected, NotPlanar, TooLarge.
VerificationResult verify_cubic_corollary(const Graph& graph,
                                          std::uint64_t budget = kDefaultBudget);

/// No rotation system is polyhedral. Throws Is3Connected, Disconnected,
/// TooLarge.
VerificationResult verify_low_connectivity(const Graph& graph,
                                           std::uint64_t budget = kDefaultBudget);

/// No polyhedral rotation system has positive genus. Throws NotPlanar,
/// TooLarge.
VerificationResult verify_no_polyhedral_higher_genus(const Graph& graph,
                                                     std::uint64_t budget = kDefaultBudget);

}  // namespace rotsys
