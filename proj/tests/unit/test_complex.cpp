#include <gtest/gtest.h>

#include "baa/error.hpp"
#include "baa/complex.hpp"
#include "baa/homology.hpp"
#include "baa/qcomplex.hpp"
#include "baa/tits.hpp"

namespace baa {
namespace {

const Ring Z = Ring::integers();

Line L(std::vector<long> c, Ring r = Ring::integers()) { return canonical_line(std::move(c), r); }

TEST(FullSubcomplex, TwoAdditiveTriangle) {
  Complex c = full_subcomplex({L({1, 0}), L({0, 1}), L({1, 1})}, Z, 2, {});
  EXPECT_EQ(c.count(0), 3u);
  EXPECT_EQ(c.count(1), 3u);
  ASSERT_EQ(c.count(2), 1u);
  EXPECT_EQ(c.type(2, 0), SimplexType::TwoAdditive);
  EXPECT_EQ(c.type(1, 0), SimplexType::Standard);
  EXPECT_TRUE(c.is_downward_closed());
}

TEST(FullSubcomplex, VertexInFrameSpan) {
  try {
    full_subcomplex({L({1, 0}), L({0, 1})}, Z, 2, {L({1, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolation);
  }
}

TEST(FullSubcomplex, TypeFilter) {
  Complex c = full_subcomplex({L({1, 0}), L({0, 1}), L({1, 1})}, Z, 2, {}, {}, family_filter(Family::B));
  EXPECT_EQ(c.count(1), 3u);
  EXPECT_EQ(c.dimension(), 1);
}

TEST(FullSubcomplex, VertexCeiling) {
  BuildLimits lim;
  lim.max_vertices = 2;
  EXPECT_THROW(full_subcomplex({L({1, 0}), L({0, 1}), L({1, 1})}, Z, 2, {}, lim), Error);
}

TEST(BuildFamily, BAA2OverF3IsASphere) {
  Complex c = build_family(2, 3, Family::BAA, false);
  EXPECT_EQ(c.vertices().size(), 4u);
  EXPECT_EQ(euler_characteristic(c), 2);
}

TEST(BuildFamily, BAA3OverF3) { EXPECT_EQ(build_family(3, 3, Family::BAA, false).vertices().size(), 13u); }

TEST(BuildFamily, BEdgesAreFrames) {
  const Ring F3 = Ring::prime_field(3);
  Complex c = build_family(2, 3, Family::B, false);
  EXPECT_EQ(c.vertices().size(), 4u);
  EXPECT_EQ(c.dimension(), 1);
  for (const auto& e : c.simplices(1)) EXPECT_TRUE(is_partial_basis(c.lines(e), F3, 2));
  // every pair of distinct lines of F_3^2 has determinant +-1
  EXPECT_EQ(c.count(1), 6u);
}

TEST(BuildFamily, PrimedDropsSpanningSimplices) {
  Complex c = build_family(2, 3, Family::BAA, true);
  EXPECT_EQ(c.dimension(), 0);
  ComplexPair pr = build_pair(3, 3);
  EXPECT_EQ(pr.total.vertices().size(), pr.sub.vertices().size());
  EXPECT_LT(pr.sub.total(), pr.total.total());
}

TEST(Link, MaximalSimplexHasEmptyLink) {
  Complex c = full_subcomplex({L({1, 0}), L({0, 1}), L({1, 1})}, Z, 2, {});
  Complex k = link(c, c.simplices(2)[0], LinkVariant::Plain);
  EXPECT_EQ(k.total(), 0u);
}

TEST(Link, EdgeOfTwoAdditiveTriangle) {
  Complex c = full_subcomplex({L({1, 0, 0}), L({0, 1, 0}), L({1, 1, 0})}, Z, 3, {});
  auto e1 = c.vertex_index(L({1, 0, 0}));
  ASSERT_TRUE(e1);
  Complex k = link(c, {*e1}, LinkVariant::Plain);
  ASSERT_EQ(k.count(1), 1u);
  EXPECT_EQ(k.type(1, 0), SimplexType::TwoAdditive);
  EXPECT_EQ(k.frame().size(), 1u);
}

TEST(Link, HatLessKeepsSmallLastCoordinates) {
  Complex c = full_subcomplex({L({1, 0, 0}), L({0, 1, 0}), L({0, 0, 1}), L({0, 1, 1})}, Z, 3, {});
  auto e1 = c.vertex_index(L({1, 0, 0}));
  Complex k = link(c, {*e1}, LinkVariant::HatLess, 1);
  ASSERT_EQ(k.vertices().size(), 1u);
  EXPECT_EQ(k.vertices()[0], L({0, 1, 0}));
}

TEST(Link, MissingSimplex) {
  Complex c = full_subcomplex({L({1, 0}), L({0, 1})}, Z, 2, {});
  EXPECT_THROW(link(c, {0, 5}, LinkVariant::Plain), Error);
}

TEST(BuildQ, VertexCounts) {
  EXPECT_EQ(build_q(parse_tuple("0,0,0,0,0,0")).vertices().size(), 6u);
  EXPECT_EQ(build_q(parse_tuple("-1,-1,-1,-3,-5,-3")).vertices().size(), 12u);
}

TEST(BuildQ, InfeasibleTuple) {
  try {
    build_q(parse_tuple("0,0,0,1,0,0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleTuple);
  }
}

TEST(BuildQ, MatchesFullSubcomplexOfLink) {
  const IntervalTuple t = parse_tuple("0,0,0,0,0,0");
  Complex q = build_q(t);
  const Line e4 = L({0, 0, 0, 1});
  Complex direct = full_subcomplex(q.vertices(), Z, 4, {e4});
  std::vector<std::uint32_t> id(q.vertices().size());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  std::string why;
  EXPECT_TRUE(is_isomorphism(q, direct, id, &why)) << why;
}

TEST(BuildQ, IsomorphicToRealization) {
  for (const char* s : {"0,0,0,0,0,0", "-1,-1,-1,-3,-5,-3", "0,-1,1,-1,-1,1"}) {
    const IntervalTuple t = parse_tuple(s);
    Complex a = build_q(t);
    Complex b = build_q_realized(realize_tuple(t));
    EXPECT_TRUE(find_isomorphism(a, b)) << s;
  }
}

TEST(Tits, LinesOfPlane) {
  TitsBuilding t = build_tits(2, 3, false);
  EXPECT_EQ(t.faces().size(0), 4u);
  EXPECT_EQ(t.faces().dimension(), 0);
}

TEST(Tits, IncidenceGraphOfPlane) {
  TitsBuilding t = build_tits(3, 3, false);
  std::size_t lines = 0, planes = 0;
  for (const auto& v : t.vertices()) (v.dim() == 1 ? lines : planes)++;
  EXPECT_EQ(lines, 13u);
  EXPECT_EQ(planes, 13u);
  // each line lies in 4 planes
  EXPECT_EQ(t.faces().size(1), 52u);
}

TEST(Tits, OrientedCopies) {
  EXPECT_EQ(build_tits(2, 3, true).faces().size(0), 4u);
  EXPECT_EQ(build_tits(2, 5, true).faces().size(0), 12u);
}

TEST(Tits, VertexCeiling) { EXPECT_THROW(build_tits(3, 5, false, 10), Error); }

}  // namespace
}  // namespace baa
