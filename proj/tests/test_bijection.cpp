#include <gtest/gtest.h>

#include <set>

#include "latpair/bijection.hpp"
#include "latpair/closed_forms.hpp"
#include "support.hpp"

using namespace latpair;

namespace {

RectPair rp(const char* a, const char* b) { return make_rect_pair(PathNE::parse(a), PathNE::parse(b)); }

}  // namespace

TEST(RectPair, CanonicalOrderAndKind) {
  const RectPair p = rp("ENN", "NNE");
  EXPECT_EQ(p.upper.word(), "NNE");
  EXPECT_EQ(p.lower.word(), "ENN");
  EXPECT_EQ(p.kind, PairKind::NonIntersecting);
  EXPECT_EQ(p, rp("NNE", "ENN"));
  const RectPair q = rp("NEN", "ENN");
  EXPECT_EQ(q.kind, PairKind::OneIntersection);
  EXPECT_EQ(q.meeting, (Point{1, 1}));
  EXPECT_THROW(rp("EENN", "EENN"), std::invalid_argument);
  EXPECT_THROW(rp("EN", "NN"), std::invalid_argument);
}

TEST(DistAtX, Examples) {
  const PathNE p = PathNE::parse("NNNENN");  // column 1: y in {3,4,5}
  const PathNE q = PathNE::parse("ENNNNN");  // column 1: y in {0..5}
  EXPECT_EQ(dist_at_x(p, q, 1), 0);
  EXPECT_EQ(dist_at_x(p, p, 0), 0);
  const PathNE a = PathNE::parse("NNNENE");  // column 1: {3,4}
  const PathNE b = PathNE::parse("NENNNE");  // column 1: {1,2,3,4}
  EXPECT_EQ(dist_at_x(a, b, 1), 0);
  const PathNE c = PathNE::parse("NNNNEE");  // column 1: {4}
  const PathNE d = PathNE::parse("NEENNN");  // column 1: {1}
  EXPECT_EQ(dist_at_x(c, d, 1), 3);
  const PathNE e = PathNE::parse("NNNENE");  // column 1: {3,4}
  const PathNE f = PathNE::parse("NEENNN");  // column 1: {1}
  EXPECT_EQ(dist_at_x(e, f, 1), 2);
  const PathNE g = PathNE::parse("NNNENNEE");  // column 1: {3,4,5}
  const PathNE h = PathNE::parse("NEENNNNE");  // column 1: {1}
  EXPECT_EQ(dist_at_x(g, h, 1), 2);
  EXPECT_THROW(dist_at_x(g, h, 4), std::invalid_argument);
}

TEST(Phi, OneByOne) {
  const PhiImage img = phi_map(rp("NE", "EN"));
  EXPECT_EQ(img.which, PhiCase::A);
  EXPECT_EQ(img.first, rp("EN", "EN"));
  EXPECT_EQ(img.first.meeting, (Point{1, 0}));
  EXPECT_EQ(img.second, rp("NE", "NE"));
  EXPECT_EQ(img.second.meeting, (Point{0, 1}));
}

TEST(Phi, OneByTwo) {
  const PhiImage img = phi_map(rp("NNE", "ENN"));
  EXPECT_EQ(img.which, PhiCase::A);
  EXPECT_EQ(img.first, rp("NEN", "ENN"));
  EXPECT_EQ(img.first.meeting, (Point{1, 1}));
  EXPECT_EQ(img.second, rp("NNE", "NEN"));
  EXPECT_EQ(img.second.meeting, (Point{0, 1}));
}

TEST(Phi, RejectsIntersectingInput) {
  EXPECT_THROW(phi_map(rp("NEN", "ENN")), std::invalid_argument);
}

TEST(Psi, InvertsTheExamples) {
  const PsiResult a = psi_map(rp("EN", "EN"));
  EXPECT_EQ(a.source, rp("NE", "EN"));
  const PsiResult b = psi_map(rp("NEN", "ENN"));
  EXPECT_EQ(b.source, rp("NNE", "ENN"));
  EXPECT_THROW(psi_map(rp("NE", "EN")), std::invalid_argument);
}

TEST(Psi, GroupFollowsMeetingPoint) {
  for (long r = 1; r <= 5; ++r) {
    for (long s = 1; r + s <= 8; ++s) {
      for (const RectPair& p : rect_pairs_with(r, s, 1)) {
        const Point m = *p.meeting;
        const GroupTag tag = psi_map(p).tag;
        const bool two = m == Point{0, 1} || m == Point{r, s - 1};
        const bool one = m == Point{1, 0} || m == Point{r - 1, s};
        if (two) {
          EXPECT_EQ(tag.group, Group::II);
        } else if (one) {
          EXPECT_EQ(tag.group, Group::I);
        } else {
          EXPECT_EQ(tag.group, Group::III);
          EXPECT_TRUE(m.x > 0 && m.x < r && m.y > 0 && m.y < s);
        }
      }
    }
  }
}

TEST(Verify, WorkedExamples) {
  const auto a = verify_bijection(1, 2);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.nonintersecting, 1);
  EXPECT_EQ(a.one_intersection, 2);
  const auto b = verify_bijection(2, 2);
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.nonintersecting, 3);
  EXPECT_EQ(b.one_intersection, 6);
  const auto c = verify_bijection(1, 1);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.nonintersecting, 1);
  EXPECT_EQ(c.one_intersection, 2);
  EXPECT_FALSE(verify_bijection(0, 3).passed());
}

// Exhaustive properties, independently of verify_bijection's own bookkeeping.
TEST(Properties, TwoToOneOnEveryRectangleUpToNine) {
  for (long r = 1; r <= 8; ++r) {
    for (long s = 1; r + s <= 9; ++s) {
      const auto sources = rect_pairs_with(r, s, 0);
      const auto targets = rect_pairs_with(r, s, 1);
      std::set<std::pair<std::string, std::string>> target_set, seen;
      for (const auto& t : targets) target_set.insert({t.upper.word(), t.lower.word()});
      ASSERT_EQ(target_set.size(), targets.size());
      for (const auto& src : sources) {
        const PhiImage img = phi_map(src);
        for (const RectPair* im : {&img.first, &img.second}) {
          ASSERT_EQ(im->kind, PairKind::OneIntersection);
          EXPECT_EQ(intersections_interior(PathPair(im->upper, im->lower)), 1u);
          EXPECT_TRUE(seen.insert({im->upper.word(), im->lower.word()}).second) << "duplicate image";
          EXPECT_EQ(psi_map(*im).source, src);
        }
      }
      EXPECT_EQ(seen, target_set) << r << "x" << s;
      if (r + s >= 3) {
        EXPECT_EQ(nkr_formula_a(r + s, r, 0), 2 * static_cast<long>(sources.size()));
        EXPECT_EQ(nkr_formula_a(r + s, r, 1), 2 * static_cast<long>(targets.size()));
      }
    }
  }
}

TEST(Properties, ReportTableIsComplete) {
  const auto rep = verify_bijection(3, 3, true);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(static_cast<long>(rep.table.size()), rep.nonintersecting);
  std::set<PhiCase> cases;
  for (const auto& c : rep.table) cases.insert(c.images.which);
  EXPECT_EQ(cases.size(), 3u);
}
