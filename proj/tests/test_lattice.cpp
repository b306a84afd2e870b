#include <gtest/gtest.h>

#include "latpair/lattice.hpp"
#include "support.hpp"

using namespace latpair;

namespace {

PathPair pair(const char* a, const char* b) { return {PathNE::parse(a), PathNE::parse(b)}; }

}  // namespace

TEST(PathNE, VerticesFollowSteps) {
  const PathNE p = PathNE::parse("ENNE", {2, 3});
  const auto v = p.vertices();
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v[0], (Point{2, 3}));
  EXPECT_EQ(v[4], (Point{4, 5}));
  EXPECT_EQ(p.end(), (Point{4, 5}));
  EXPECT_EQ(p.east_count(), 2);
  EXPECT_EQ(p.word(), "ENNE");
  for (std::size_t t = 0; t < v.size(); ++t) {
    EXPECT_EQ(v[t].x + v[t].y, 5 + static_cast<long>(t));
    EXPECT_EQ(p.vertex(t), v[t]);
  }
}

TEST(PathNE, RejectsBadInput) {
  EXPECT_THROW(PathNE::parse("ENX"), std::invalid_argument);
  EXPECT_THROW(pair("EN", "E"), std::invalid_argument);
  EXPECT_THROW(PathPair(PathNE::parse("E"), PathNE::parse("E", {0, 1})), std::invalid_argument);
}

TEST(Interior, WorkedExamples) {
  EXPECT_EQ(intersections_interior(pair("EN", "NE")), 0u);
  EXPECT_EQ(intersections_interior(pair("EN", "EN")), 1u);
  EXPECT_EQ(intersections_interior(pair("ENN", "NEN")), 1u);
}

TEST(Interior, RejectsDifferentEnds) {
  EXPECT_THROW(intersections_interior(pair("EN", "NN")), std::invalid_argument);
}

TEST(ExcludingOrigin, WorkedExamples) {
  EXPECT_EQ(intersections_excluding_origin(pair("E", "E")), 1u);
  EXPECT_EQ(intersections_excluding_origin(pair("E", "N")), 0u);
  EXPECT_EQ(intersections_excluding_origin(pair("EN", "NE")), 1u);
  EXPECT_THROW(intersections_excluding_origin(
                   PathPair(PathNE::parse("E", {1, 0}), PathNE::parse("N", {1, 0}))),
               std::invalid_argument);
}

TEST(ExcludingStart, WorkedExamples) {
  EXPECT_EQ(intersections_excluding_start(pair("NN", "EN")), 0u);
  EXPECT_EQ(intersections_excluding_start(pair("NN", "NE")), 1u);
  for (const char* p : {"EE", "EN", "NE", "NN"}) EXPECT_EQ(intersections_excluding_start(pair(p, p)), 2u);
}

TEST(ExcludingStart, AllowsShiftedStart) {
  const PathPair pp(PathNE::parse("EN", {3, 4}), PathNE::parse("NE", {3, 4}));
  EXPECT_EQ(intersections_excluding_start(pp), 1u);
}

TEST(DegenerateRectangle, SinglePathMeetsItselfEverywhere) {
  EXPECT_EQ(intersections_interior(pair("NNNN", "NNNN")), 3u);
  EXPECT_EQ(intersections_interior(pair("EEE", "EEE")), 2u);
}

// Every pair of free walks up to 6 steps: vertex-set counts agree with
// stepwise coincidences, all three conventions are symmetric and related.
TEST(Conventions, PropertiesOverAllShortWalks) {
  for (int n = 0; n <= 6; ++n) {
    const auto ws = testsupport::free_words(n);
    for (const auto& a : ws) {
      for (const auto& b : ws) {
        const PathNE pa = PathNE::parse(a);
        const PathNE pb = PathNE::parse(b);
        const PathPair ab(pa, pb);
        const PathPair ba(pb, pa);
        const long shared = testsupport::shared_vertices(a, b);
        EXPECT_EQ(static_cast<long>(stepwise_coincidences(pa, pb)), shared - 1);
        EXPECT_EQ(intersections_excluding_origin(ab), intersections_excluding_origin(ba));
        EXPECT_EQ(intersections_excluding_start(ab), intersections_excluding_start(ba));
        EXPECT_EQ(static_cast<long>(intersections_excluding_start(ab)), shared - 1);
        if (pa.end() == pb.end() && n > 0) {
          EXPECT_EQ(intersections_interior(ab), intersections_interior(ba));
          EXPECT_EQ(intersections_interior(ab) + 1, intersections_excluding_start(ab));
        }
      }
    }
  }
}
