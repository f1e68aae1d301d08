#include <gtest/gtest.h>

#include "baa/error.hpp"
#include "baa/reduction.hpp"

namespace baa {
namespace {

const Ring Z = Ring::integers();

Line L(std::vector<long> c) { return canonical_line(std::move(c), Z); }

ReductionContext ctx10() { return ReductionContext({1, 0, 0, 10}, 0); }

TEST(ReduceLine, AlreadyReduced) { EXPECT_EQ(reduce_line(L({0, 1, 0, 9}), ctx10()), L({0, 1, 0, 9})); }

TEST(ReduceLine, OneStep) { EXPECT_EQ(reduce_line(L({0, 0, 1, 16}), ctx10()), L({-1, 0, 1, 6})); }

TEST(ReduceLine, SumOfReducedVertices) { EXPECT_EQ(reduce_line(L({0, 1, 1, 15}), ctx10()), L({-1, 1, 1, 5})); }

TEST(ReduceLine, NegativeRepresentative) {
  // bar flips the sign to make the last coordinate nonnegative
  EXPECT_EQ(reduce_line(L({0, 0, -1, -16}), ctx10()), L({-1, 0, 1, 6}));
  EXPECT_EQ(bar(L({0, 0, -1, -16})), (std::vector<long>{0, 0, 1, 16}));
}

TEST(ReduceLine, FrameSpanIsInvalid) {
  try {
    reduce_line(L({1, 0, 0, 10}), ctx10());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidVertex);
  }
}

TEST(ReduceLine, DimensionMismatch) { EXPECT_THROW(reduce_line(L({0, 1, 9}), ctx10()), Error); }

TEST(Context, Preconditions) {
  EXPECT_THROW(ReductionContext({1, 0, 0, 0}, 0), Error);
  EXPECT_THROW(ReductionContext({1, 0, 0, 10}, 1), Error);  // e_1, w is not a partial basis
  ReductionContext c({0, 3, 1, 7}, 1);
  EXPECT_EQ(c.frame().size(), 2u);
  EXPECT_EQ(c.R(), 7);
}

TEST(Carrying, TwoAdditiveExample) {
  EXPECT_EQ(carrying_status({L({0, 1, 0, 9}), L({0, 0, 1, 6}), L({0, 1, 1, 15})}, ctx10()), CarryingStatus::Carrying);
  EXPECT_EQ(carrying_closed_form({L({0, 1, 0, 9}), L({0, 0, 1, 6}), L({0, 1, 1, 15})}, ctx10()),
            CarryingStatus::Carrying);
}

TEST(Carrying, SmallRemainders) {
  const std::vector<Line> s{L({0, 1, 0, 2}), L({0, 0, 1, 3}), L({0, 1, 1, 5})};
  EXPECT_EQ(carrying_status(s, ctx10()), CarryingStatus::NotCarrying);
  EXPECT_EQ(carrying_closed_form(s, ctx10()), CarryingStatus::NotCarrying);
}

TEST(Carrying, InternalThreeAdditiveWithSmallSum) {
  ReductionContext c({1, 0, 0, 0, 10}, 0);
  const std::vector<Line> s{L({0, 1, 0, 0, 2}), L({0, 0, 1, 0, 3}), L({0, 0, 0, 1, 4}), L({0, 1, 1, 1, 9})};
  EXPECT_EQ(carrying_status(s, c), CarryingStatus::NotCarrying);
  EXPECT_EQ(carrying_closed_form(s, c), CarryingStatus::NotCarrying);
}

TEST(Carrying, InternalThreeAdditiveOverflowing) {
  ReductionContext c({1, 0, 0, 0, 10}, 0);
  const std::vector<Line> s{L({0, 1, 0, 0, 4}), L({0, 0, 1, 0, 5}), L({0, 0, 0, 1, 6}), L({0, 1, 1, 1, 15})};
  EXPECT_EQ(carrying_status(s, c), CarryingStatus::Carrying);
  EXPECT_EQ(carrying_closed_form(s, c), CarryingStatus::Carrying);
}

TEST(Carrying, StandardIsNotApplicable) {
  EXPECT_EQ(carrying_status({L({0, 1, 0, 9}), L({0, 0, 1, 6})}, ctx10()), CarryingStatus::NotApplicable);
}

TEST(Carrying, NonMinimalIsRejected) {
  try {
    carrying_status({L({0, 1, 0, 9}), L({0, 0, 1, 6}), L({0, 1, 1, 15}), L({0, 0, 0, 1})}, ctx10());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMinimal);
  }
}

TEST(Carrying, DoubleTripleWithCarryingFacet) {
  // {x, y, x+y, x+y+w} with b(x) + b(y) = R: the facet {x, y, x+y} carries, but
  // the reduced image {x, y, x+y-w} is a w-related 3-additive simplex
  ReductionContext c({-7, -4, 5}, 0);
  const std::vector<Line> s{L({7, 3, -4}), L({8, 9, -10}), L({1, 5, -5}), L({6, -2, 1})};
  EXPECT_EQ(carrying_facet_status(s, c), CarryingStatus::Carrying);
  EXPECT_EQ(carrying_closed_form(s, c), CarryingStatus::Carrying);
  EXPECT_EQ(carrying_status(s, c), CarryingStatus::NotCarrying);
}

TEST(LinkCore, TwoAdditive) {
  auto core = link_core({L({0, 1, 0, 9}), L({0, 0, 1, 6}), L({0, 1, 1, 15})}, ctx10().frame(), Z, 4);
  EXPECT_EQ(core.size(), 3u);
  EXPECT_TRUE(link_core({L({0, 1, 0, 9})}, ctx10().frame(), Z, 4).empty());
}

}  // namespace
}  // namespace baa
