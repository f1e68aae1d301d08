#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "baa/complex.hpp"
#include "baa/homology.hpp"
#include "baa/integer.hpp"
#include "baa/tits.hpp"

namespace baa {

// Number of k-dimensional subspaces of F_p^n (Gaussian binomial).
Integer grassmannian_count(std::size_t k, std::size_t n, long p);

// p^C(n-2,2) * #Gr(2, n, F_p) * ((p-1)/2)^(n-2), the lower bound for the
// codimension-one rational cohomology of the level-p congruence subgroup.
// Only p = 3 and p = 5 are supported.
Integer codim1_lower_bound(std::size_t n, long p);

// Integer chain on the simplices of one dimension of a complex.
struct Chain {
  int degree = 0;
  std::map<std::size_t, Integer> coefficients;  // simplex index -> coefficient

  bool is_zero() const { return coefficients.empty(); }
  Chain operator-() const;
};

// Boundary of a chain inside the given face table (empty chain for degree 0).
Chain boundary(const SimplexTable& faces, const Chain& c);

// Fundamental class of the apartment of an ordered basis of F_p^n inside the
// (unoriented) Tits building: the signed sum over orderings of the basis of
// the flag of prefix spans.
Chain apartment_class(const TitsBuilding& tits, const std::vector<Line>& basis);

// Rank of the top reduced homology of the Tits building; throws when torsion
// shows up.
std::size_t steinberg_rank(std::size_t n, long p, std::size_t max_vertices = 1024);

// Rank over Q of the span of the apartment classes of all frames of lines
// with determinant +-1. Stops early once `stop_at` is reached (0: never).
std::size_t apartment_span_rank(const TitsBuilding& tits, std::size_t stop_at = 0);

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SteinbergReport {
  std::size_t n = 0;
  long p = 0;
  // Relative chain groups of (BAA_n^+-(F_p), BAA'_n^+-(F_p)): ranks in degrees
  // n-1, n, n+1, and simplex type counts in every degree.
  std::vector<std::size_t> relative_dims;
  std::map<int, std::array<std::size_t, 5>> relative_types;
  std::vector<HomologyGroup> pair_homology;  // degrees 0..n+1
  HomologyGroup h_n_pair;
  std::vector<HomologyGroup> total_reduced_homology;  // degrees 0..n+1
  Integer bound = 0;
  std::size_t steinberg_rank = 0;
  std::size_t apartment_rank = 0;
  std::vector<NamedCheck> checks;
  std::vector<std::string> not_verified;

  bool passed() const;
};

// Builds the pair for (n, p) and collects the finite checks of the partial
// resolution of the Steinberg module. p must be 3 or 5.
SteinbergReport resolution_report(std::size_t n, long p, const BuildLimits& limits = {});

}  // namespace baa
