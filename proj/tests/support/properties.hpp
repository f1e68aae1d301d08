#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "baa/complex.hpp"
#include "baa/rinterval.hpp"
#include "baa/simplexkit.hpp"
#include "baa/tits.hpp"

namespace baa::props {

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> examples;  // first few failures
  std::string note;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& what);
  std::string summary() const;
};

// Negation, the three-way sum window and exact additivity when a summand has
// even interval; also the coefficient window |z + aR| < R per parity.
SuiteResult interval_suite(std::size_t cases, std::uint64_t seed);

// Whenever the facet type decides a vertex set, it agrees with classify, and
// it decides every non-minimal additive simplex.
SuiteResult facet_suite(std::size_t cases, std::uint64_t seed);

// Closed-form carrying test against the image test on random minimal simplices
// of one type (TwoAdditive, ThreeAdditive or DoubleTriple).
SuiteResult carrying_suite(SimplexType type, std::size_t cases, std::uint64_t seed);

// reduce_line lands in [0, R), is idempotent, and follows the three rules for
// sums with lines of last coordinate zero, with +-w, and of two vertices.
SuiteResult reduction_suite(std::size_t cases, std::uint64_t seed);

// Classification ignores vertex order and survives elementary changes of
// basis and coordinate permutations, over Z and F_p.
SuiteResult invariance_suite(std::size_t cases, std::uint64_t seed);

// Smith form against permuted and transposed input, the dense and machine
// integer variants, and mod-p ranks.
SuiteResult smith_suite(std::size_t cases, std::uint64_t seed);

// Euler characteristic from faces against homology, vanishing boundary of
// boundary, and Euler additivity on the pair.
SuiteResult euler_suite();

inline constexpr std::size_t kCases = 10000;
inline constexpr std::uint64_t kSeed = 20240917;

// Complexes the acceptance suite works with.
struct NamedComplex {
  std::string name;
  Complex complex;
};
std::vector<NamedComplex> q_complexes();
std::vector<NamedComplex> family_complexes();  // BAA_2 over F_3, F_5, F_7 and BAA_3 over F_3
struct NamedTits {
  std::string name;
  TitsBuilding tits;
};
std::vector<NamedTits> tits_buildings();  // (2,3), (2,5), (2,7), (3,3)

}  // namespace baa::props
