#include "baa/homology.hpp"

#include <algorithm>
#include <sstream>

#include "baa/error.hpp"

namespace baa {

namespace {

// Positions of the simplices of c that are not in rel, in degree d.
std::vector<long> kept_positions(const SimplexTable& c, int d, const SimplexTable* rel, std::size_t* count) {
  std::vector<long> pos(c.size(d), -1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < c.size(d); ++i)
    if (!rel || !rel->contains(c.of_dim(d)[i])) pos[i] = static_cast<long>(k++);
  *count = k;
  return pos;
}

void check_subcomplex(const SimplexTable& c, const SimplexTable* rel) {
  if (!rel) return;
  for (int d = 0; d <= rel->dimension(); ++d)
    for (const auto& s : rel->of_dim(d))
      if (!c.contains(s)) throw Error(ErrorKind::NotASubcomplex, "relative simplex missing from the total complex");
}

bool use_augmentation(bool reduced, const SimplexTable* rel) {
  return reduced && (!rel || rel->total() == 0);
}

}  // namespace

std::string HomologyGroup::str() const {
  std::ostringstream os;
  bool any = false;
  if (rank) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    any = true;
  }
  for (const auto& t : torsion) {
    os << (any ? " + " : "") << "Z/" << t.get_str();
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

IntMatrix boundary_matrix(const SimplexTable& c, int d, const SimplexTable* rel, bool augmented) {
  check_subcomplex(c, rel);
  std::size_t ncols = 0, nrows = 0;
  auto cols = kept_positions(c, d, rel, &ncols);
  if (d == 0) {
    IntMatrix m(augmented ? 1 : 0, ncols);
    if (augmented)
      for (std::size_t i = 0; i < cols.size(); ++i)
        if (cols[i] >= 0) m.set(0, static_cast<std::size_t>(cols[i]), Integer(1));
    return m;
  }
  if (d < 0) return IntMatrix(0, 0);
  auto rows = kept_positions(c, d - 1, rel, &nrows);
  IntMatrix m(nrows, ncols);
  Simplex face;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 0) continue;
    const Simplex& s = c.of_dim(d)[i];
    for (std::size_t k = 0; k < s.size(); ++k) {
      face.clear();
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != k) face.push_back(s[j]);
      auto r = c.find(face);
      if (!r) throw Error(ErrorKind::PreconditionViolation, "complex is not downward closed");
      if (rows[*r] < 0) continue;  // face lies in rel
      m.set(static_cast<std::size_t>(rows[*r]), static_cast<std::size_t>(cols[i]), Integer(k % 2 ? -1 : 1));
    }
  }
  return m;
}

std::vector<HomologyGroup> homology_all(const SimplexTable& c, bool reduced, const SimplexTable* rel, int top) {
  check_subcomplex(c, rel);
  if (top < 0) top = c.dimension();
  const bool aug = use_augmentation(reduced, rel);
  // divisors[d] for boundary d -> d-1, d = 0..top+1
  std::vector<std::vector<Integer>> div(static_cast<std::size_t>(top) + 2);
  for (int d = 0; d <= top + 1; ++d) div[static_cast<std::size_t>(d)] = smith(boundary_matrix(c, d, rel, aug));
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= top; ++d) {
    std::size_t cells = 0;
    kept_positions(c, d, rel, &cells);
    HomologyGroup h;
    h.degree = d;
    h.rank = cells - div[static_cast<std::size_t>(d)].size() - div[static_cast<std::size_t>(d) + 1].size();
    for (const auto& x : div[static_cast<std::size_t>(d) + 1])
      if (x > 1) h.torsion.push_back(x);
    out.push_back(std::move(h));
  }
  return out;
}

HomologyGroup homology(const SimplexTable& c, int d, bool reduced, const SimplexTable* rel) {
  check_subcomplex(c, rel);
  HomologyGroup h;
  h.degree = d;
  const bool aug = use_augmentation(reduced, rel);
  if (d < -1) return h;
  if (d == -1) {
    // reduced homology of the empty complex lives here
    if (aug && c.size(0) == 0) h.rank = 1;
    return h;
  }
  std::size_t cells = 0;
  kept_positions(c, d, rel, &cells);
  auto lower = smith(boundary_matrix(c, d, rel, aug));
  auto upper = smith(boundary_matrix(c, d + 1, rel, aug));
  h.rank = cells - lower.size() - upper.size();
  for (const auto& x : upper)
    if (x > 1) h.torsion.push_back(x);
  return h;
}

SimplexTable relative_faces(const Complex& c, const Complex& sub) {
  std::vector<std::uint32_t> map(sub.vertices().size());
  for (std::size_t i = 0; i < sub.vertices().size(); ++i) {
    auto j = c.vertex_index(sub.vertices()[i]);
    if (!j) throw Error(ErrorKind::NotASubcomplex, "vertex " + sub.vertices()[i].str() + " is not in the total complex");
    map[i] = *j;
  }
  SimplexTable t;
  for (int d = 0; d <= sub.dimension(); ++d) {
    for (const auto& s : sub.simplices(d)) {
      Simplex m;
      for (auto v : s) m.push_back(map[v]);
      std::sort(m.begin(), m.end());
      if (!c.faces().contains(m)) throw Error(ErrorKind::NotASubcomplex, "simplex missing from the total complex");
      t.add(m);
    }
  }
  return t;
}

IntMatrix boundary_matrix(const Complex& c, int d, const Complex* rel, bool augmented) {
  if (!rel) return boundary_matrix(c.faces(), d, nullptr, augmented);
  auto r = relative_faces(c, *rel);
  return boundary_matrix(c.faces(), d, &r, augmented);
}

HomologyGroup homology(const Complex& c, int d, bool reduced, const Complex* rel) {
  if (!rel) return homology(c.faces(), d, reduced, nullptr);
  auto r = relative_faces(c, *rel);
  return homology(c.faces(), d, reduced, &r);
}

std::vector<HomologyGroup> homology_all(const Complex& c, bool reduced, const Complex* rel, int top) {
  if (!rel) return homology_all(c.faces(), reduced, nullptr, top);
  auto r = relative_faces(c, *rel);
  return homology_all(c.faces(), reduced, &r, top);
}

long euler_characteristic(const SimplexTable& c) {
  long chi = 0;
  for (int d = 0; d <= c.dimension(); ++d) chi += (d % 2 ? -1L : 1L) * static_cast<long>(c.size(d));
  return chi;
}

long euler_characteristic(const Complex& c) { return euler_characteristic(c.faces()); }

long euler_from_homology(const std::vector<HomologyGroup>& h) {
  long chi = 0;
  for (const auto& g : h) chi += (g.degree % 2 ? -1L : 1L) * static_cast<long>(g.rank);
  return chi;
}

}  // namespace baa
