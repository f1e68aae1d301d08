#pragma once

#include <cstddef>
#include <vector>

#include "baa/complex.hpp"
#include "baa/homology.hpp"

namespace baa {

enum class CertStatus { Certified, Inconclusive };
const char* to_string(CertStatus s);

struct DensityEvidence {
  std::size_t k = 0;          // vertices
  std::size_t m = 0;          // vertex triples without a 2-simplex
  std::size_t missing_edges = 0;
  CertStatus status = CertStatus::Inconclusive;
};

// Complete 1-skeleton and fewer than k - 2 missing triangles imply simple
// connectivity; the converse does not hold.
DensityEvidence density_evidence(const SimplexTable& c);
CertStatus simply_connected_by_density(const Complex& c);

struct ConnectivityVerdict {
  int level = 0;
  CertStatus status = CertStatus::Inconclusive;
  DensityEvidence density;
  std::vector<HomologyGroup> homology;  // reduced, degrees 0..level
};

// Certified when the density criterion holds and reduced homology vanishes in
// degrees 1..n, which by Hurewicz gives n-connectivity.
ConnectivityVerdict certify_n_connected(const Complex& c, int n);
ConnectivityVerdict certify_n_connected(const SimplexTable& c, int n);

}  // namespace baa
