#include <gtest/gtest.h>

#include "baa/error.hpp"
#include "baa/lattice.hpp"

namespace baa {
namespace {

const Ring Z = Ring::integers();

Line L(std::vector<long> c, Ring r = Ring::integers()) { return canonical_line(std::move(c), r); }

TEST(CanonicalLine, FlipsSignOverZ) { EXPECT_EQ(L({0, -3, 1}).coords(), (std::vector<long>{0, 3, -1})); }

TEST(CanonicalLine, ReducesOverPrimeField) {
  EXPECT_EQ(L({3, 0}, Ring::prime_field(5)).coords(), (std::vector<long>{2, 0}));
}

TEST(CanonicalLine, RejectsImprimitive) {
  try {
    L({-2, 4, -6});
    FAIL() << "expected NotPrimitive";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitive);
  }
}

TEST(CanonicalLine, RejectsZeroModP) { EXPECT_THROW(L({5, 10}, Ring::prime_field(5)), Error); }

TEST(CanonicalLine, SignClassesAgree) {
  EXPECT_EQ(L({1, -2, 3}), L({-1, 2, -3}));
  EXPECT_EQ(L({1, 2}, Ring::prime_field(7)), L({6, 5}, Ring::prime_field(7)));
}

TEST(Ring, OnlyOddPrimes) {
  EXPECT_THROW(Ring::prime_field(2), Error);
  EXPECT_THROW(Ring::prime_field(9), Error);
  EXPECT_EQ(Ring::prime_field(7).reduce(-1), 6);
}

TEST(PartialBasis, UnimodularPair) { EXPECT_TRUE(is_partial_basis({L({1, 2}), L({3, 5})}, Z, 2)); }

TEST(PartialBasis, IndexTwoSublattice) { EXPECT_FALSE(is_partial_basis({L({1, 0}), L({1, 2})}, Z, 2)); }

TEST(PartialBasis, MinorsWithUnitGcd) { EXPECT_TRUE(is_partial_basis({L({1, 0, 0}), L({0, 2, 1})}, Z, 3)); }

TEST(PartialBasis, DeterminantModP) {
  const Ring F3 = Ring::prime_field(3);
  EXPECT_TRUE(is_partial_basis({L({1, 0}, F3), L({0, 1}, F3)}, F3, 2));
  // det 2 = -1 mod 3
  EXPECT_TRUE(is_partial_basis({L({1, 0}, F3), L({0, 2}, F3)}, F3, 2));
  const Ring F5 = Ring::prime_field(5);
  // det 2 is not +-1 mod 5
  EXPECT_FALSE(is_partial_basis({L({1, 0}, F5), L({0, 2}, F5)}, F5, 2));
}

TEST(PartialBasis, DimensionMismatch) {
  try {
    is_partial_basis({L({1, 0, 0})}, Z, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(PartialBasis, RingMismatch) {
  try {
    is_partial_basis({L({1, 0}, Ring::prime_field(3))}, Z, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(SpanContains, Examples) {
  EXPECT_TRUE(span_contains({L({1, 0})}, L({1, 0}), Z));
  EXPECT_FALSE(span_contains({L({1, 0})}, L({1, 1}), Z));
  EXPECT_TRUE(span_contains({L({1, 0, 0}), L({0, 1, 0})}, L({1, -1, 0}), Z));
}

TEST(SpanContains, SaturationMatters) {
  // (1,0) lies in the rational span of (1,1), (1,-1) but not in their integer span
  EXPECT_FALSE(span_contains({L({1, 1}), L({1, -1})}, L({1, 0}), Z));
}

TEST(CoordinatesIn, IntegerAndRational) {
  auto c = coordinates_in({{1, 0, 0}, {1, 1, 0}}, {3, 2, 0}, Z);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::vector<long>{1, 2}));
  EXPECT_FALSE(coordinates_in({{2, 0}}, {1, 0}, Z));
  EXPECT_FALSE(coordinates_in({{1, 0}}, {0, 1}, Z));
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant({{1, 2}, {3, 5}}), -1);
  EXPECT_EQ(determinant({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), 1);
  EXPECT_EQ(determinant({{2, 4}, {1, 2}}), 0);
}

TEST(AllLines, CountsMatch) {
  EXPECT_EQ(all_lines(2, 3).size(), 4u);
  EXPECT_EQ(all_lines(3, 3).size(), 13u);
  EXPECT_EQ(line_count(3, 5), 62);
  auto ls = all_lines(2, 5);
  EXPECT_TRUE(std::is_sorted(ls.begin(), ls.end()));
}

TEST(VectorRank, OverZAndFp) {
  EXPECT_EQ(vector_rank({{1, 1}, {1, -1}}, Z), 2u);
  EXPECT_EQ(vector_rank({{1, 1}, {1, -1}}, Ring::prime_field(3)), 2u);
  EXPECT_EQ(vector_rank({{1, 2}, {2, 1}}, Ring::prime_field(3)), 1u);
}

}  // namespace
}  // namespace baa
