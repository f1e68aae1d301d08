#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "baa/lattice.hpp"
#include "baa/simplexkit.hpp"

namespace baa {

// Sorted vertex indices.
using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

// Faces of a finite simplicial complex, grouped by dimension, with index
// lookup. Shared by typed complexes of lines and by Tits buildings.
class SimplexTable {
 public:
  // Returns the index of s within its dimension (inserting if new).
  std::size_t add(const Simplex& s);
  std::optional<std::size_t> find(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  // Highest dimension present; -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size(int d) const;
  std::size_t total() const;
  const std::vector<Simplex>& of_dim(int d) const;

 private:
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

struct BuildLimits {
  std::size_t max_vertices = 128;
  std::size_t max_simplices = 1'000'000;
};

// Which simplex types a build may contain.
struct TypeFilter {
  std::array<bool, 5> allowed{true, true, true, true, true};
  bool allows(SimplexType t) const { return allowed[static_cast<std::size_t>(t)]; }
};

enum class Family { B, BA, BAA };
const char* to_string(Family f);
TypeFilter family_filter(Family f);

// Finite simplicial complex on lines. Each simplex carries the type of the
// simplex formed together with the frame.
class Complex {
 public:
  Complex(Ring ring, std::size_t n, std::vector<Line> vertices, std::vector<Line> frame);

  Ring ring() const { return ring_; }
  std::size_t ambient_dim() const { return n_; }
  const std::vector<Line>& vertices() const { return vertices_; }
  const std::vector<Line>& frame() const { return frame_; }
  const SimplexTable& faces() const { return faces_; }

  int dimension() const { return faces_.dimension(); }
  std::size_t count(int d) const { return faces_.size(d); }
  std::size_t total() const { return faces_.total(); }
  const std::vector<Simplex>& simplices(int d) const { return faces_.of_dim(d); }
  SimplexType type(int d, std::size_t i) const { return types_[static_cast<std::size_t>(d)][i]; }
  std::optional<SimplexType> type_of(const Simplex& s) const;
  std::array<std::size_t, 5> type_counts(int d) const;

  std::vector<Line> lines(const Simplex& s) const;
  std::optional<std::uint32_t> vertex_index(const Line& v) const;

  // Builder entry point; faces must be added before cofaces.
  void add_simplex(const Simplex& s, SimplexType t);

  // Same vertex list, simplices satisfying keep. The predicate must select a
  // downward closed family.
  Complex filtered(const std::function<bool(const Simplex&, SimplexType)>& keep) const;

  bool is_downward_closed() const;

 private:
  Ring ring_;
  std::size_t n_;
  std::vector<Line> vertices_;
  std::vector<Line> frame_;
  SimplexTable faces_;
  std::vector<std::vector<SimplexType>> types_;
  std::unordered_map<Line, std::uint32_t> vertex_ids_;
};

struct ComplexPair {
  Complex total;
  Complex sub;
};

// Full subcomplex of BAA_n on the given lines relative to a frame: a set is a
// simplex when it forms a simplex together with the frame.
Complex full_subcomplex(std::vector<Line> vertices, Ring ring, std::size_t n, std::vector<Line> frame,
                        const BuildLimits& limits = {}, const TypeFilter& filter = {});

// B, BA or BAA over F_p on all lines of F_p^n; primed drops every simplex
// whose lines span F_p^n.
Complex build_family(std::size_t n, long p, Family family, bool primed, const BuildLimits& limits = {});
ComplexPair build_pair(std::size_t n, long p, const BuildLimits& limits = {});

enum class LinkVariant { Plain, Hat, HatLess };

// Link of sigma; the result's frame is the old frame plus sigma's lines.
Complex link(const Complex& c, const Simplex& sigma, LinkVariant variant, long R = 0);

}  // namespace baa
