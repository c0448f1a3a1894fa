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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rotsys/enumerate.hpp"
#include "rotsys/error.hpp"
#include "test_graphs.hpp"

namespace rotsys {
namespace {

using ::testing::ElementsAre;
using Tag = IntersectionKind::Tag;
using testing::c4_embedding;
using testing::k4f;
using testing::k4p;
using testing::single_edge;

const FaceWalk& face_with(const std::vector<FaceWalk>& faces, Dart d) {
  for (const auto& f : faces)
    if (f.contains(d)) return f;
  throw std::runtime_error("no face");
}

TEST(IsSimpleFaceTest, Examples) {
  auto plane = trace_faces(k4p());
  EXPECT_TRUE(is_simple_face(plane[0]));
  auto torus = trace_faces(k4f());
  EXPECT_TRUE(is_simple_face(torus[0]));
  EXPECT_FALSE(is_simple_face(torus[1]));
  EXPECT_FALSE(is_simple_face(trace_faces(single_edge())[0]));
}

TEST(FaceIntersectionTest, AdjacentTrianglesShareOneEdge) {
  auto faces = trace_faces(k4p());
  // (0,1,2) and (0,3,1)
  auto kind = face_intersection(face_with(faces, {0, 1}), face_with(faces, {1, 0}));
  EXPECT_EQ(kind.tag, Tag::OneEdge);
  EXPECT_THAT(kind.shared_vertices, ElementsAre(0, 1));
  EXPECT_THAT(kind.shared_edges, ElementsAre(Edge(0, 1)));
}

TEST(FaceIntersectionTest, TorusFacesViolate) {
  auto faces = trace_faces(k4f());
  auto kind = face_intersection(faces[0], faces[1]);
  EXPECT_EQ(kind.tag, Tag::Violation);
  EXPECT_THAT(kind.shared_vertices, ElementsAre(0, 1, 2));
  EXPECT_THAT(kind.shared_edges, ElementsAre(Edge(0, 1), Edge(0, 2), Edge(1, 2)));
}

TEST(FaceIntersectionTest, EmptyAndSingleVertex) {
  // Plane prism: the two triangles are vertex-disjoint.
  auto prism = find_planar_embedding(testing::prism());
  ASSERT_TRUE(prism);
  auto faces = trace_faces(*prism);
  auto tri_a = face_with(faces, {0, 1});
  auto tri_b = face_with(faces, {3, 4});
  if (tri_a.size() != 3) tri_a = face_with(faces, {1, 0});
  if (tri_b.size() != 3) tri_b = face_with(faces, {4, 3});
  ASSERT_EQ(tri_a.size(), 3u);
  ASSERT_EQ(tri_b.size(), 3u);
  EXPECT_EQ(face_intersection(tri_a, tri_b).tag, Tag::Empty);

  // Plane octahedron: some pair of triangles meets in exactly one vertex.
  auto octa = find_planar_embedding(testing::octahedron());
  ASSERT_TRUE(octa);
  auto of = trace_faces(*octa);
  int one_vertex = 0;
  for (std::size_t i = 0; i < of.size(); ++i)
    for (std::size_t j = i + 1; j < of.size(); ++j)
      if (face_intersection(of[i], of[j]).tag == Tag::OneVertex) ++one_vertex;
  // 8 triangles; around each vertex 4 faces, the 2 opposite pairs meet only there.
  EXPECT_EQ(one_vertex, 12);
}

TEST(FaceIntersectionTest, SameFaceIsAnError) {
  auto faces = trace_faces(k4p());
  try {
    face_intersection(faces[0], faces[0]);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SameFace);
  }
}

TEST(ClassifyIntersectionTest, TwoVerticesWithoutTheirEdgeViolate) {
  EXPECT_EQ(classify_intersection({1, 4}, {}).tag, Tag::Violation);
  EXPECT_EQ(classify_intersection({1, 4}, {Edge(1, 4)}).tag, Tag::OneEdge);
  EXPECT_EQ(classify_intersection({7}, {}).tag, Tag::OneVertex);
  EXPECT_EQ(classify_intersection({}, {}).tag, Tag::Empty);
}

TEST(CheckPolyhedralTest, Examples) {
  EXPECT_TRUE(check_polyhedral(k4p()).polyhedral);
  EXPECT_FALSE(check_polyhedral(k4p()).violation.has_value());

  auto torus = check_polyhedral(k4f());
  EXPECT_FALSE(torus.polyhedral);
  ASSERT_TRUE(torus.violation);
  const auto* ns = std::get_if<NonSimpleFace>(&*torus.violation);
  ASSERT_NE(ns, nullptr);
  EXPECT_EQ(ns->face.size(), 9u);
  EXPECT_EQ(ns->face_index, 1u);

  auto cycle = check_polyhedral(c4_embedding());
  EXPECT_FALSE(cycle.polyhedral);
  const auto* bp = std::get_if<BadPair>(&*cycle.violation);
  ASSERT_NE(bp, nullptr);
  EXPECT_EQ(bp->kind.tag, Tag::Violation);
  EXPECT_THAT(bp->kind.shared_vertices, ElementsAre(0, 1, 2, 3));
}

TEST(BuildDualTest, TetrahedronIsSelfDual) {
  DualGraph d = build_dual(k4p());
  EXPECT_EQ(d.num_vertices, 4u);
  EXPECT_EQ(d.edges.size(), 6u);
  EXPECT_EQ(d.loop_count(), 0u);
  EXPECT_EQ(d.parallel_count(), 0u);
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& e : d.edges) pairs.insert({e.face_a, e.face_b});
  EXPECT_EQ(pairs.size(), 6u);  // every pair of the 4 faces: K4
}

TEST(BuildDualTest, TorusDualHasLoopsAndParallels) {
  DualGraph d = build_dual(k4f());
  EXPECT_EQ(d.num_vertices, 2u);
  EXPECT_EQ(d.edges.size(), 6u);
  EXPECT_EQ(d.loop_count(), 3u);
  EXPECT_EQ(d.parallel_count(), 3u);
  for (const auto& e : d.edges) {
    if (e.is_loop()) {
      EXPECT_EQ(e.face_a, 1u);  // the length-9 face
      EXPECT_EQ(e.primal.v, 3);
    }
  }
}

TEST(BuildDualTest, SingleEdge) {
  DualGraph d = build_dual(single_edge());
  EXPECT_EQ(d.num_vertices, 1u);
  EXPECT_EQ(d.edges.size(), 1u);
  EXPECT_EQ(d.loop_count(), 1u);
}

TEST(DualIsSimpleTest, Examples) {
  EXPECT_TRUE(dual_is_simple(k4p()));
  EXPECT_FALSE(dual_is_simple(k4f()));
  EXPECT_FALSE(dual_is_simple(c4_embedding()));
  EXPECT_EQ(build_dual(c4_embedding()).parallel_count(), 4u);
}

// Both predicates over every rotation system of small cubic graphs.
TEST(CubicEquivalenceTest, DualSimpleIffPolyhedral) {
  for (const Graph& g : {testing::complete(4), testing::cube(), testing::prism(), testing::k33()}) {
    std::size_t agree = 0;
    for_each_rotation(g, [&](const EmbeddedGraph& e, std::uint64_t) {
      EXPECT_EQ(dual_is_simple(e), check_polyhedral(e).polyhedral) << normalized_serialization(e);
      ++agree;
      return true;
    });
    EXPECT_EQ(agree, rotation_system_count(g));
  }
}

TEST(CheckPolyhedralTest, MatchesOracleAndMirror) {
  for (const Graph& g : {testing::complete(4), testing::wheel(4), testing::bowtie(),
                         testing::k4_minus_edge(), testing::prism()}) {
    for_each_rotation(g, [&](const EmbeddedGraph& e, std::uint64_t) {
      const bool p = check_polyhedral(e).polyhedral;
      EXPECT_EQ(p, oracle::polyhedral(oracle::faces(e.rotations())));
      EXPECT_EQ(p, check_polyhedral(mirror(e)).polyhedral);
      return true;
    });
  }
}

TEST(CheckPolyhedralTest, BadPairReverifies) {
  for_each_rotation(testing::wheel(4), [&](const EmbeddedGraph& e, std::uint64_t) {
    auto v = check_polyhedral(e);
    if (v.violation) {
      if (const auto* bp = std::get_if<BadPair>(&*v.violation)) {
        auto faces = trace_faces(e);
        EXPECT_EQ(faces[bp->first_index], bp->first);
        EXPECT_EQ(faces[bp->second_index], bp->second);
        EXPECT_EQ(face_intersection(bp->first, bp->second), bp->kind);
        std::set<Vertex> a, b, shared;
        for (const Dart& d : bp->first.darts()) a.insert(d.tail);
        for (const Dart& d : bp->second.darts()) b.insert(d.tail);
        for (Vertex x : a)
          if (b.count(x)) shared.insert(x);
        EXPECT_EQ(std::vector<Vertex>(shared.begin(), shared.end()), bp->kind.shared_vertices);
        EXPECT_GE(shared.size(), 2u);
      }
    }
    return true;
  });
}

}  // namespace
}  // namespace rotsys
