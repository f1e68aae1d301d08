#include <gtest/gtest.h>

#include <algorithm>

#include "baa/error.hpp"
#include "baa/rinterval.hpp"

namespace baa {
namespace {

TEST(Interval, SmallValues) {
  EXPECT_EQ(interval(0, 3), 0);
  EXPECT_EQ(interval(2, 3), 1);
  EXPECT_EQ(interval(3, 3), 2);
  EXPECT_EQ(interval(-1, 3), -1);
  EXPECT_EQ(interval(5, 4), 3);
  EXPECT_EQ(interval(-3, 3), -2);
  EXPECT_EQ(interval(-4, 3), -3);
}

TEST(Interval, BigIntegers) {
  Integer R = Integer("100000000000000000000");
  EXPECT_EQ(interval(R * 7, R), 14);
  EXPECT_EQ(interval(-R * 7 - 1, R), -15);
}

TEST(Interval, RejectsNonpositiveR) { EXPECT_THROW(interval(1, 0), Error); }

TEST(Tuples, ContainsAndExcludes) {
  auto ts = enumerate_tuples();
  auto has = [&](const char* s) { return std::binary_search(ts.begin(), ts.end(), parse_tuple(s)); };
  EXPECT_TRUE(has("0,0,0,0,0,0"));
  EXPECT_TRUE(has("-1,-1,-1,-3,-5,-3"));
  EXPECT_FALSE(has("0,0,0,1,0,0"));
  EXPECT_EQ(ts.size(), 147u);
}

TEST(Tuples, CanonicalOrbit) {
  for (const auto& t : enumerate_tuples()) {
    EXPECT_EQ(canonicalize(swap_tuple(t)), canonicalize(t));
    EXPECT_EQ(canonicalize(negate_tuple(t)), canonicalize(t));
    EXPECT_LE(canonicalize(t), t);
  }
}

TEST(Tuples, CanonicalCount) {
  // the published table has 48 rows, two of which share a canonical form
  EXPECT_EQ(canonical_tuples().size(), 47u);
}

TEST(Tuples, CsvRoundTrip) {
  auto ts = canonical_tuples();
  auto csv = tuples_csv(ts);
  EXPECT_EQ(csv.rfind("r1,r2,r3,r12,r123,r13\n", 0), 0u);
  EXPECT_EQ(parse_tuples_csv(csv), ts);
}

TEST(Tuples, ParseErrors) {
  EXPECT_THROW(parse_tuple("1,2,3"), Error);
  EXPECT_THROW(parse_tuple("a,0,0,0,0,0"), Error);
}

TEST(Realize, Zero) {
  auto r = realize_tuple(parse_tuple("0,0,0,0,0,0"));
  EXPECT_EQ(r.z, (std::array<long, 3>{0, 0, 0}));
  EXPECT_EQ(r.R, 1);
}

TEST(Realize, AllNegative) {
  auto r = realize_tuple(parse_tuple("-1,-1,-1,-3,-5,-3"));
  const long R = r.R;
  EXPECT_EQ(interval(r.z[0], R), -1);
  EXPECT_EQ(interval(r.z[0] + r.z[1], R), -3);
  EXPECT_EQ(interval(r.z[0] + r.z[1] + r.z[2], R), -5);
  EXPECT_EQ(interval(r.z[0] + r.z[2], R), -3);
  EXPECT_EQ(r.w[3], R);
}

TEST(Realize, EveryCanonicalTuple) {
  for (const auto& t : canonical_tuples()) {
    auto r = realize_tuple(t);
    const auto& z = r.z;
    IntervalTuple got{{interval(z[0], r.R), interval(z[1], r.R), interval(z[2], r.R), interval(z[0] + z[1], r.R),
                       interval(z[0] + z[1] + z[2], r.R), interval(z[0] + z[2], r.R)}};
    EXPECT_EQ(got, t) << t.str();
  }
}

TEST(Realize, Infeasible) {
  try {
    realize_tuple(parse_tuple("0,0,0,1,0,0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleTuple);
  }
}

}  // namespace
}  // namespace baa
