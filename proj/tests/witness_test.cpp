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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rotsys/compare.hpp"
#include "rotsys/enumerate.hpp"
#include "rotsys/error.hpp"
#include "test_graphs.hpp"

namespace rotsys {
namespace {

using testing::k4f;
using testing::k4p;

EmbeddedGraph with_rotation(const EmbeddedGraph& g, Vertex v, std::vector<Vertex> order) {
  auto rot = g.rotations();
  rot[v] = std::move(order);
  return build_embedding(g.num_vertices(), rot);
}

EmbeddedGraph plane_octahedron() { return *find_planar_embedding(testing::octahedron()); }

bool interleave_oracle(const EmbeddedGraph& ref, const Angle& p, const Angle& q) {
  auto r = ref.rotation(p.first.tail);
  return oracle::interleaves({r.begin(), r.end()}, p.first.head, p.second.head, q.first.head,
                             q.second.head);
}

TEST(FindProofAnchorTest, CubicGivesMixedEdge) {
  ProofAnchor a = find_proof_anchor(k4p(), k4f());
  ASSERT_TRUE(std::holds_alternative<MixedEdge>(a));
  EXPECT_EQ(std::get<MixedEdge>(a).edge, (Dart{0, 3}));
}

TEST(FindProofAnchorTest, SwappedPairGivesType2) {
  EmbeddedGraph ref = plane_octahedron();
  auto r = ref.rotation(0);
  ASSERT_EQ(r.size(), 4u);
  EmbeddedGraph cand = with_rotation(ref, 0, {r[0], r[2], r[1], r[3]});
  ProofAnchor a = find_proof_anchor(ref, cand);
  ASSERT_TRUE(std::holds_alternative<Type2Vertex>(a));
  const auto& t2 = std::get<Type2Vertex>(a);
  EXPECT_EQ(t2.vertex, 0);
  for (const Angle& angle : {t2.first_angle, t2.second_angle}) {
    EXPECT_EQ(next_dart(cand, angle.first), angle.second);
    EXPECT_FALSE(is_angle(ref, angle.first, angle.second));
  }
  EXPECT_TRUE(crossing_at_vertex(ref, t2.first_angle, t2.second_angle));
  EXPECT_TRUE(interleave_oracle(ref, t2.first_angle, t2.second_angle));
}

// Rotation (a,b,c,d) in the reference, (a,c,b,d) in the candidate. With
// e0..e3 = a,c,b,d the pair {a,c} is no reference angle, so the first angle
// is {a,c}. The reference order from a is a, b, c, d: block A = {b}, block
// B = {d}, and e3 = d already lies in B. Then y = index of b = 2 and the
// second angle is {e2, e3} = {b, d}.
TEST(FindProofAnchorTest, HandTracedType2Construction) {
  EmbeddedGraph ref = plane_octahedron();
  auto r = ref.rotation(0);
  const Vertex a = r[0], b = r[1], c = r[2], d = r[3];
  EmbeddedGraph cand = with_rotation(ref, 0, {a, c, b, d});
  const auto t2 = std::get<Type2Vertex>(find_proof_anchor(ref, cand));
  EXPECT_EQ(t2.first_angle, (Angle{{0, a}, {0, c}}));
  EXPECT_EQ(t2.second_angle, (Angle{{0, b}, {0, d}}));
  EXPECT_EQ(t2.shift, 0u);
  EXPECT_EQ(t2.y, 2u);
}

// Candidate (a,b,d,c): {a,b} is a reference angle, so the scan re-anchors.
// Reading the reference forward (b follows a), j = 1 is the first place
// where nx(e_j) = c differs from e_2 = d. Shifted: e0..e3 = b,d,c,a. The
// reference from b is b, c, d, a: block A = {c} (index 2), block B = {a}
// (index 3) holds e3. So y = 2, second angle {c, a}.
TEST(FindProofAnchorTest, HandTracedReanchoring) {
  EmbeddedGraph ref = plane_octahedron();
  auto r = ref.rotation(0);
  const Vertex a = r[0], b = r[1], c = r[2], d = r[3];
  EmbeddedGraph cand = with_rotation(ref, 0, {a, b, d, c});
  const auto t2 = std::get<Type2Vertex>(find_proof_anchor(ref, cand));
  EXPECT_EQ(t2.shift, 1u);
  EXPECT_EQ(t2.first_angle, (Angle{{0, b}, {0, d}}));
  EXPECT_EQ(t2.second_angle, (Angle{{0, c}, {0, a}}));
  EXPECT_EQ(t2.y, 2u);
}

TEST(FindProofAnchorTest, EquivalentInputs) {
  for (const EmbeddedGraph& cand : {k4p(), mirror(k4p())}) {
    try {
      find_proof_anchor(k4p(), cand);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::EquivalentInput);
    }
  }
}

Precondition reason_of(const EmbeddedGraph& ref, const EmbeddedGraph& cand) {
  try {
    extract_witness(ref, cand);
  } catch (const PreconditionError& e) {
    return e.reason();
  }
  throw std::runtime_error("no precondition error");
}

TEST(ExtractWitnessTest, Preconditions) {
  EXPECT_EQ(reason_of(k4f(), k4p()), Precondition::NotPlane);
  EXPECT_EQ(reason_of(k4p(), testing::c4_embedding()), Precondition::UnderlyingMismatch);
  const auto c4 = testing::c4_embedding();
  EXPECT_EQ(reason_of(c4, c4), Precondition::NotPolyhedralRef);
}

TEST(CrossingAtVertexTest, Examples) {
  EmbeddedGraph w = build_embedding(5, {{1, 2, 3, 4}, {0, 2, 4}, {0, 3, 1}, {0, 4, 2}, {0, 1, 3}});
  EXPECT_TRUE(crossing_at_vertex(w, {{0, 1}, {0, 3}}, {{0, 2}, {0, 4}}));
  EXPECT_FALSE(crossing_at_vertex(w, {{0, 1}, {0, 2}}, {{0, 3}, {0, 4}}));
  EXPECT_FALSE(crossing_at_vertex(w, {{0, 4}, {0, 1}}, {{0, 2}, {0, 3}}));
}

TEST(CrossingAtVertexTest, Errors) {
  EmbeddedGraph w = build_embedding(5, {{1, 2, 3, 4}, {0, 2, 4}, {0, 3, 1}, {0, 4, 2}, {0, 1, 3}});
  try {
    crossing_at_vertex(w, {{0, 1}, {0, 3}}, {{0, 1}, {0, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SharedDart);
  }
  try {
    crossing_at_vertex(w, {{0, 1}, {0, 3}}, {{1, 2}, {1, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DifferentTails);
  }
}

TEST(ExtractWitnessTest, TorusK4) {
  Witness w = extract_witness(k4p(), k4f());
  ASSERT_TRUE(std::holds_alternative<MixedEdge>(w.anchor));
  EXPECT_EQ(std::get<MixedEdge>(w.anchor).edge, (Dart{0, 3}));
  const auto* ns = std::get_if<NonSimpleFace>(&w.evidence);
  ASSERT_NE(ns, nullptr);
  EXPECT_EQ(ns->face.size(), 9u);
  EXPECT_TRUE(verify_witness(k4p(), k4f(), w));
}

TEST(ExtractWitnessTest, EquivalentInput) {
  try {
    extract_witness(k4p(), mirror(k4p()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EquivalentInput);
  }
}

TEST(ExtractWitnessTest, CubeSingleVertexReversed) {
  EmbeddedGraph ref = *find_planar_embedding(testing::cube());
  for (Vertex v = 0; v < 8; ++v) {
    auto r = ref.rotation(v);
    EmbeddedGraph cand = with_rotation(ref, v, {r.rbegin(), r.rend()});
    Witness w = extract_witness(ref, cand);
    EXPECT_TRUE(verify_witness(ref, cand, w));
    EXPECT_FALSE(check_polyhedral(cand).polyhedral);
    EXPECT_TRUE(std::holds_alternative<MixedEdge>(w.anchor));
  }
}

TEST(ExtractWitnessTest, EveryCubeCandidate) {
  EmbeddedGraph ref = *find_planar_embedding(testing::cube());
  std::size_t certified = 0;
  for_each_rotation(testing::cube(), [&](const EmbeddedGraph& cand, std::uint64_t) {
    if (equivalent(ref, cand)) return true;
    Witness w = extract_witness(ref, cand);
    EXPECT_TRUE(verify_witness(ref, cand, w));
    ++certified;
    return true;
  });
  EXPECT_EQ(certified, 254u);
}

// Whenever every candidate face is simple the evidence is a crossing pair;
// exercise that branch explicitly on the octahedron.
TEST(ExtractWitnessTest, CrossingPairsOnOctahedron) {
  EmbeddedGraph ref = plane_octahedron();
  std::size_t crossing = 0, type2 = 0, checked = 0;
  for_each_rotation(testing::octahedron(), [&](const EmbeddedGraph& cand, std::uint64_t i) {
    if (i % 7 != 0 || equivalent(ref, cand)) return true;
    Witness w = extract_witness(ref, cand);
    EXPECT_TRUE(verify_witness(ref, cand, w));
    ++checked;
    if (const auto* cp = std::get_if<CrossingPair>(&w.evidence)) {
      ++crossing;
      EXPECT_TRUE(cp->kind.violates());
      EXPECT_NE(cp->face, cp->other);
    }
    if (const auto* t2 = std::get_if<Type2Vertex>(&w.anchor)) {
      ++type2;
      EXPECT_TRUE(interleave_oracle(ref, t2->first_angle, t2->second_angle));
    }
    return true;
  });
  EXPECT_GT(checked, 6000u);
  EXPECT_GT(type2, 0u);
  EXPECT_GT(crossing, 0u);
}

TEST(VerifyWitnessTest, RejectsTamperedCertificates) {
  Witness w = extract_witness(k4p(), k4f());
  Witness wrong_anchor = w;
  wrong_anchor.anchor = MixedEdge{{0, 1}};
  EXPECT_FALSE(verify_witness(k4p(), k4f(), wrong_anchor));

  Witness simple_face = w;
  simple_face.evidence = NonSimpleFace{0, trace_faces(k4f())[0]};
  EXPECT_FALSE(verify_witness(k4p(), k4f(), simple_face));
}

}  // namespace
}  // namespace rotsys
