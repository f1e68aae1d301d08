#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "baa/complex.hpp"

namespace baa {

using ModRows = std::vector<std::vector<long>>;

// Reduced row echelon form over F_p with zero rows dropped.
ModRows rref_mod(ModRows rows, long p);

struct Subspace {
  ModRows basis;  // reduced row echelon form
  unsigned orientation = 0;
  std::size_t dim() const { return basis.size(); }
};

// Order complex of the proper nonzero subspaces of F_p^n. The oriented
// variant has (p-1)/2 copies of every subspace, pairwise incomparable.
class TitsBuilding {
 public:
  TitsBuilding(std::size_t n, long p, bool oriented) : n_(n), p_(p), oriented_(oriented) {}

  std::size_t n() const { return n_; }
  long p() const { return p_; }
  bool oriented() const { return oriented_; }
  const std::vector<Subspace>& vertices() const { return vertices_; }
  const SimplexTable& faces() const { return faces_; }

  // Vertex for the span of the given vectors (orientation class 0).
  std::optional<std::uint32_t> span_vertex(const ModRows& vectors, unsigned orientation = 0) const;

 private:
  friend TitsBuilding build_tits(std::size_t, long, bool, std::size_t);
  std::size_t n_;
  long p_;
  bool oriented_;
  std::vector<Subspace> vertices_;
  SimplexTable faces_;
  std::map<std::pair<ModRows, unsigned>, std::uint32_t> ids_;
};

TitsBuilding build_tits(std::size_t n, long p, bool oriented, std::size_t max_vertices = 1024);

}  // namespace baa
