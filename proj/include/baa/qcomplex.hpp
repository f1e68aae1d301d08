#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "baa/complex.hpp"
#include "baa/rinterval.hpp"

namespace baa {

// Six families of lines, in tuple order: v1, v2, v3, v1+v2, v1+v2+v3, v1+v3.
inline constexpr std::size_t kQFamilies = 6;

struct QVertex {
  std::size_t family = 0;
  long a = 0;  // multiple of the last basis vector (e_4 or w) added
};

// Coefficients a allowed by an interval value r: -k for r = 2k, and
// -(k+1), -k for r = 2k+1.
std::vector<long> q_coefficients(long r);

std::vector<QVertex> q_labels(const IntervalTuple& t);

// Full subcomplex of the link of e_4 in BAA_4 on e_f + a e_4.
Complex build_q(const IntervalTuple& t, const BuildLimits& limits = {});

// Same construction from explicit vectors: lines u_f + a w with last
// coordinate below R in absolute value, relative to the frame {w}. Vertex
// order matches q_labels(t) for the tuple the vectors realize.
Complex build_q_realized(const Realization& real, const BuildLimits& limits = {});
std::vector<QVertex> q_labels_realized(const Realization& real);

// Typed isomorphism test for a given vertex bijection (vertex i of a maps to
// vertex map[i] of b). Reports the first difference through *why.
bool is_isomorphism(const Complex& a, const Complex& b, const std::vector<std::uint32_t>& map,
                    std::string* why = nullptr);

// Brute-force search for any typed isomorphism; for small complexes only.
bool find_isomorphism(const Complex& a, const Complex& b);

}  // namespace baa
