#include <gtest/gtest.h>

#include "baa/error.hpp"
#include "baa/steinberg.hpp"

namespace baa {
namespace {

Line F(std::vector<long> c, long p) { return canonical_line(std::move(c), Ring::prime_field(p)); }

TEST(Grassmannian, Counts) {
  EXPECT_EQ(grassmannian_count(1, 2, 3), 4);
  EXPECT_EQ(grassmannian_count(2, 3, 3), 13);
  EXPECT_EQ(grassmannian_count(2, 4, 3), 130);
  EXPECT_EQ(grassmannian_count(0, 4, 3), 1);
}

TEST(LowerBound, Values) {
  EXPECT_EQ(codim1_lower_bound(3, 3), 13);
  EXPECT_EQ(codim1_lower_bound(3, 5), 62);
  EXPECT_EQ(codim1_lower_bound(4, 3), 390);
}

TEST(LowerBound, UnsupportedPrime) {
  try {
    codim1_lower_bound(3, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedPrime);
  }
}

TEST(Apartment, PlaneIsDifferenceOfPoints) {
  TitsBuilding t = build_tits(2, 3, false);
  Chain c = apartment_class(t, {F({1, 0}, 3), F({0, 1}, 3)});
  EXPECT_EQ(c.degree, 0);
  ASSERT_EQ(c.coefficients.size(), 2u);
  Integer sum = 0;
  for (const auto& [i, k] : c.coefficients) {
    EXPECT_EQ(abs(k), 1);
    sum += k;
  }
  EXPECT_EQ(sum, 0);
}

TEST(Apartment, SwappingTheBasisNegates) {
  TitsBuilding t = build_tits(3, 3, false);
  const Line a = F({1, 0, 0}, 3), b = F({0, 1, 0}, 3), c = F({1, 1, 1}, 3);
  Chain x = apartment_class(t, {a, b, c});
  Chain y = apartment_class(t, {b, a, c});
  EXPECT_EQ(x.degree, 1);
  EXPECT_EQ(x.coefficients.size(), 6u);
  EXPECT_EQ((-x).coefficients, y.coefficients);
  EXPECT_TRUE(boundary(t.faces(), x).is_zero());
}

TEST(Apartment, NotABasis) {
  TitsBuilding t = build_tits(2, 3, false);
  try {
    apartment_class(t, {F({1, 0}, 3), F({1, 0}, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotABasis);
  }
}

TEST(SteinbergRank, SolomonTits) {
  EXPECT_EQ(steinberg_rank(2, 3), 3u);
  EXPECT_EQ(steinberg_rank(2, 5), 5u);
  EXPECT_EQ(steinberg_rank(2, 7), 7u);
  EXPECT_EQ(steinberg_rank(3, 3), 27u);
}

TEST(SteinbergRank, ApartmentsSpan) {
  EXPECT_EQ(apartment_span_rank(build_tits(2, 5, false)), 5u);
  EXPECT_EQ(apartment_span_rank(build_tits(3, 3, false)), 27u);
  EXPECT_EQ(apartment_span_rank(build_tits(3, 3, false), 10), 10u);
}

TEST(Report, PlaneOverF3) {
  SteinbergReport r = resolution_report(2, 3);
  EXPECT_TRUE(r.passed());
  ASSERT_GE(r.total_reduced_homology.size(), 3u);
  EXPECT_EQ(r.total_reduced_homology[2].rank, 1u);
  EXPECT_TRUE(r.total_reduced_homology[1].trivial());
}

TEST(Report, SpaceOverF3) {
  SteinbergReport r = resolution_report(3, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.relative_dims, (std::vector<std::size_t>{234, 702, 702}));
  EXPECT_GE(r.h_n_pair.rank, 13u);
  EXPECT_EQ(r.bound, 13);
  EXPECT_FALSE(r.not_verified.empty());
}

TEST(Report, UnsupportedPrime) { EXPECT_THROW(resolution_report(2, 7), Error); }

}  // namespace
}  // namespace baa
