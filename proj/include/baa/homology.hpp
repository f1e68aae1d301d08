#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "baa/complex.hpp"
#include "baa/smith.hpp"

namespace baa {

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // entries > 1, each dividing the next

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;  // e.g. "Z^2 + Z/2"
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Boundary from degree d to d-1. Relative to `rel` (same vertex indexing)
// simplices of rel are dropped from both sides. With augmented, d = 0 maps to
// a single row of ones.
IntMatrix boundary_matrix(const SimplexTable& c, int d, const SimplexTable* rel = nullptr, bool augmented = false);

HomologyGroup homology(const SimplexTable& c, int d, bool reduced = false, const SimplexTable* rel = nullptr);

// Degrees 0..top in one pass (each boundary reduced once).
std::vector<HomologyGroup> homology_all(const SimplexTable& c, bool reduced = false,
                                        const SimplexTable* rel = nullptr, int top = -1);

// Complex wrappers; a relative sub-complex is matched to c by its lines.
IntMatrix boundary_matrix(const Complex& c, int d, const Complex* rel = nullptr, bool augmented = false);
HomologyGroup homology(const Complex& c, int d, bool reduced = false, const Complex* rel = nullptr);
std::vector<HomologyGroup> homology_all(const Complex& c, bool reduced = false, const Complex* rel = nullptr,
                                        int top = -1);

// Re-indexes sub's simplices by c's vertex numbering.
SimplexTable relative_faces(const Complex& c, const Complex& sub);

long euler_characteristic(const SimplexTable& c);
long euler_characteristic(const Complex& c);
long euler_from_homology(const std::vector<HomologyGroup>& h);

}  // namespace baa
