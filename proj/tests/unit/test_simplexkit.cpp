#include <gtest/gtest.h>

#include "baa/error.hpp"
#include "baa/simplexkit.hpp"

namespace baa {
namespace {

const Ring Z = Ring::integers();

Line L(std::vector<long> c, Ring r = Ring::integers()) { return canonical_line(std::move(c), r); }

// sum of unit vectors e_i (one-based) in Z^n
Line E(std::size_t n, std::initializer_list<int> idx) {
  std::vector<long> c(n, 0);
  for (int i : idx) c[static_cast<std::size_t>(i - 1)] += 1;
  return L(c);
}

TEST(Classify, TwoAdditive) {
  auto c = classify({E(3, {1}), E(3, {2}), E(3, {1, 2})}, Z, 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->type, SimplexType::TwoAdditive);
  EXPECT_EQ(c->core.size(), 3u);
  ASSERT_EQ(c->witness.size(), 1u);
  EXPECT_EQ(c->witness[0].terms.size(), 2u);
}

TEST(Classify, ThreeAdditive) {
  EXPECT_EQ(simplex_type({E(4, {1, 2, 3}), E(4, {1}), E(4, {2}), E(4, {3})}, Z, 4), SimplexType::ThreeAdditive);
}

TEST(Classify, DoubleTriple) {
  EXPECT_EQ(simplex_type({E(5, {1, 2}), E(5, {1, 3}), E(5, {1}), E(5, {2}), E(5, {3})}, Z, 5),
            SimplexType::DoubleTriple);
}

TEST(Classify, DoubleDouble) {
  EXPECT_EQ(simplex_type({E(6, {1, 2}), E(6, {3, 4}), E(6, {1}), E(6, {2}), E(6, {3}), E(6, {4})}, Z, 6),
            SimplexType::DoubleDouble);
}

TEST(Classify, CoefficientTwoIsNoSimplex) {
  EXPECT_FALSE(classify({E(3, {1}), E(3, {2}), L({2, 1, 0})}, Z, 3));
}

TEST(Classify, StandardHasEmptyCore) {
  auto c = classify({E(3, {1}), E(3, {2})}, Z, 3);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->type, SimplexType::Standard);
  EXPECT_TRUE(c->core.empty());
}

TEST(Classify, NonSummandIsNoSimplex) { EXPECT_FALSE(classify({L({1, 1}), L({1, -1})}, Z, 2)); }

TEST(Classify, CoreOfLargerSimplex) {
  auto c = classify({E(4, {1}), E(4, {2}), E(4, {1, 2}), E(4, {4})}, Z, 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->type, SimplexType::TwoAdditive);
  EXPECT_EQ(c->core.size(), 3u);
}

TEST(Classify, OverPrimeField) {
  const Ring F3 = Ring::prime_field(3);
  EXPECT_EQ(simplex_type({L({1, 0}, F3), L({0, 1}, F3), L({1, 1}, F3)}, F3, 2), SimplexType::TwoAdditive);
  // every pair of distinct lines in F_3^2 is a frame up to sign
  EXPECT_EQ(simplex_type({L({1, 1}, F3), L({1, 2}, F3)}, F3, 2), SimplexType::Standard);
}

TEST(Classify, RejectsDuplicates) { EXPECT_THROW(classify({E(2, {1}), E(2, {1})}, Z, 2), Error); }

TEST(RelativeType, FrameCounts) {
  EXPECT_EQ(relative_type({E(3, {2}), E(3, {1, 2})}, {E(3, {1})}, Z, 3), SimplexType::TwoAdditive);
  EXPECT_TRUE(is_minimal({E(3, {2}), E(3, {1, 2})}, {E(3, {1})}, SimplexType::TwoAdditive, Z, 3));
  EXPECT_FALSE(is_minimal({E(3, {2}), E(3, {1, 2}), E(3, {3})}, {E(3, {1})}, SimplexType::TwoAdditive, Z, 3));
}

TEST(FacetType, TwoAdditivePlusStandardVertex) {
  auto f = facet_type({E(4, {1}), E(4, {2}), E(4, {1, 2}), E(4, {3})}, Z, 4);
  EXPECT_EQ(f.of(SimplexType::Standard), 3u);
  EXPECT_EQ(f.of(SimplexType::TwoAdditive), 1u);
  EXPECT_EQ(f.total(), 4u);
}

TEST(FacetType, Independent) {
  auto f = facet_type({E(3, {1}), E(3, {2}), E(3, {3})}, Z, 3);
  EXPECT_EQ(f.of(SimplexType::Standard), 3u);
}

TEST(FacetType, DoubleTriplePlusVertex) {
  auto f = facet_type({E(6, {1, 2}), E(6, {1, 3}), E(6, {1}), E(6, {2}), E(6, {3}), E(6, {4})}, Z, 6);
  EXPECT_EQ(f.of(SimplexType::TwoAdditive), 4u);
  EXPECT_EQ(f.of(SimplexType::ThreeAdditive), 1u);
  EXPECT_EQ(f.of(SimplexType::DoubleTriple), 1u);
  EXPECT_EQ(f.non_simplex, 0u);
}

TEST(ClassifyByFacets, Examples) {
  FacetType a;
  a.of(SimplexType::Standard) = 3;
  a.of(SimplexType::TwoAdditive) = 1;
  auto v = classify_by_facets(4, a);
  ASSERT_TRUE(v.determined());
  EXPECT_EQ(v.type, SimplexType::TwoAdditive);

  FacetType b;
  b.of(SimplexType::TwoAdditive) = 4;
  b.of(SimplexType::ThreeAdditive) = 1;
  v = classify_by_facets(5, b);
  ASSERT_TRUE(v.determined());
  EXPECT_EQ(v.type, SimplexType::DoubleTriple);

  FacetType c;
  c.of(SimplexType::Standard) = 3;
  EXPECT_EQ(classify_by_facets(3, c).kind, FacetVerdict::Kind::Undetermined);

  FacetType d;
  d.of(SimplexType::Standard) = 3;
  d.non_simplex = 1;
  EXPECT_EQ(classify_by_facets(4, d).kind, FacetVerdict::Kind::NotASimplex);
}

TEST(SimplexTypeNames, RoundTrip) {
  for (auto t : kAllSimplexTypes) EXPECT_EQ(simplex_type_from_string(to_string(t)), t);
  EXPECT_FALSE(simplex_type_from_string("Triangle"));
}

}  // namespace
}  // namespace baa
