#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "baa/reduction.hpp"

namespace baa {

struct SamplerBounds {
  std::size_t max_m = 2;
  std::size_t min_n = 2;
  std::size_t max_n = 4;
  long max_R = 12;
};

// Random w and partial basis e_1..e_m, w, f_1..f_{n-1} of Z^{m+n}, rejection
// sampled with entries in [-2R, 2R].
struct RandomFrame {
  std::vector<long> w_bar;
  std::size_t m = 0;
  std::vector<std::vector<long>> f;
};
std::optional<RandomFrame> sample_frame(std::mt19937_64& rng, const SamplerBounds& b = {});

struct MinimalSample {
  ReductionContext ctx;
  std::vector<Line> sigma;
  SimplexType type;
};

// One attempt at a minimal 2-additive, 3-additive or double-triple simplex of
// the link of w built from signed sums of basis vectors; nullopt on rejection.
std::optional<MinimalSample> sample_minimal(std::mt19937_64& rng, SimplexType type, const SamplerBounds& b = {});

// Repeats sample_minimal until it succeeds.
MinimalSample draw_minimal(std::mt19937_64& rng, SimplexType type, const SamplerBounds& b = {});

struct CarryingTally {
  std::size_t samples = 0;
  std::size_t carrying = 0;
  std::size_t disagreements = 0;
  // closed form against carrying_facet_status; informational
  std::size_t facet_disagreements = 0;
};

struct CarryingTestReport {
  std::array<CarryingTally, 3> tally;  // TwoAdditive, ThreeAdditive, DoubleTriple
  std::vector<std::string> failures;   // first few disagreements, described
  bool ok() const;
};

// Compares the closed-form carrying test with the definition on random
// minimal simplices of each of the three types.
CarryingTestReport run_carrying_test(std::size_t samples_per_type, std::uint64_t seed);

}  // namespace baa
