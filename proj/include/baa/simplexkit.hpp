#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baa/lattice.hpp"

namespace baa {

enum class SimplexType { Standard, TwoAdditive, ThreeAdditive, DoubleTriple, DoubleDouble };

inline constexpr std::array<SimplexType, 5> kAllSimplexTypes = {
    SimplexType::Standard, SimplexType::TwoAdditive, SimplexType::ThreeAdditive,
    SimplexType::DoubleTriple, SimplexType::DoubleDouble};

const char* to_string(SimplexType t);
std::optional<SimplexType> simplex_type_from_string(const std::string& s);

// rep(target) = sum sign * rep(term), with rep the canonical coordinates;
// indices refer to ClassifiedSimplex::vertices.
struct Relation {
  std::size_t target = 0;
  std::vector<std::pair<std::size_t, int>> terms;
};

struct ClassifiedSimplex {
  std::vector<Line> vertices;  // sorted
  SimplexType type = SimplexType::Standard;
  std::vector<std::size_t> core;  // empty for standard simplices
  std::vector<Relation> witness;
};

// Classifies a set of distinct lines as a simplex of BAA_n over `ring`;
// nullopt when no simplex type applies.
std::optional<ClassifiedSimplex> classify(std::vector<Line> vs, Ring ring, std::size_t n);
std::optional<SimplexType> simplex_type(std::vector<Line> vs, Ring ring, std::size_t n);

// Type of sigma relative to a frame: the type of sigma together with the frame.
std::optional<SimplexType> relative_type(const std::vector<Line>& sigma, const std::vector<Line>& frame,
                                         Ring ring, std::size_t n);

// True when sigma has the given relative type and no facet of sigma does.
bool is_minimal(const std::vector<Line>& sigma, const std::vector<Line>& frame, SimplexType type,
                Ring ring, std::size_t n);

// Multiset of facet classifications, kept as counts per type.
struct FacetType {
  std::array<std::size_t, 5> count{};
  std::size_t non_simplex = 0;

  std::size_t of(SimplexType t) const { return count[static_cast<std::size_t>(t)]; }
  std::size_t& of(SimplexType t) { return count[static_cast<std::size_t>(t)]; }
  std::size_t total() const;
  std::string str() const;
  friend bool operator==(const FacetType& a, const FacetType& b) {
    return a.count == b.count && a.non_simplex == b.non_simplex;
  }
};

FacetType facet_type(const std::vector<Line>& vs, Ring ring, std::size_t n);

struct FacetVerdict {
  enum class Kind { Determined, Undetermined, NotASimplex };
  Kind kind = Kind::Undetermined;
  SimplexType type = SimplexType::Standard;

  bool determined() const { return kind == Kind::Determined; }
};

// Decides the type of a vertex set of the given size from its facet type
// alone, where that is possible.
FacetVerdict classify_by_facets(std::size_t vertex_count, const FacetType& facets);

}  // namespace baa
