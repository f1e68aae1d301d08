#include "baa/simplexkit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "baa/error.hpp"

namespace baa {

namespace {

using Rows = std::vector<std::vector<long>>;

// Coefficient as a sign, or 0 when it is not +-1 in the ring.
int unit_sign(long c, Ring ring) {
  if (c == 1) return 1;
  if (ring.is_integers() ? c == -1 : c == ring.p() - 1) return -1;
  return 0;
}

Rows rows_except(const std::vector<Line>& vs, std::size_t skip_a, std::size_t skip_b) {
  Rows r;
  r.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i != skip_a && i != skip_b) r.push_back(vs[i].coords());
  return r;
}

std::vector<Line> lines_except(const std::vector<Line>& vs, std::size_t skip_a, std::size_t skip_b) {
  std::vector<Line> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (i != skip_a && i != skip_b) out.push_back(vs[i]);
  return out;
}

// Expresses vs[target] in the remaining lines (indices outside `skip`) with
// all coefficients +-1; returns the terms as original indices.
std::optional<std::vector<std::pair<std::size_t, int>>> unit_relation(const std::vector<Line>& vs,
                                                                      const Rows& basis,
                                                                      const std::vector<std::size_t>& basis_idx,
                                                                      std::size_t target, Ring ring) {
  auto c = coordinates_in(basis, vs[target].coords(), ring);
  if (!c) return std::nullopt;
  std::vector<std::pair<std::size_t, int>> terms;
  for (std::size_t k = 0; k < c->size(); ++k) {
    if ((*c)[k] == 0) continue;
    int s = unit_sign((*c)[k], ring);
    if (s == 0) return std::nullopt;
    terms.emplace_back(basis_idx[k], s);
  }
  return terms;
}

std::vector<std::size_t> indices_except(std::size_t s, std::size_t a, std::size_t b) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s; ++i)
    if (i != a && i != b) idx.push_back(i);
  return idx;
}

void check_input(const std::vector<Line>& vs, Ring ring, std::size_t n) {
  if (vs.empty()) throw Error(ErrorKind::PreconditionViolation, "cannot classify an empty set");
  for (const auto& v : vs) {
    if (v.dim() != n)
      throw Error(ErrorKind::DimensionMismatch, "line " + v.str() + " does not have length " + std::to_string(n));
    if (v.ring() != ring) throw Error(ErrorKind::RingMismatch, "line " + v.str() + " is over " + v.ring().name());
  }
}

}  // namespace

const char* to_string(SimplexType t) {
  switch (t) {
    case SimplexType::Standard: return "Standard";
    case SimplexType::TwoAdditive: return "TwoAdditive";
    case SimplexType::ThreeAdditive: return "ThreeAdditive";
    case SimplexType::DoubleTriple: return "DoubleTriple";
    case SimplexType::DoubleDouble: return "DoubleDouble";
  }
  return "?";
}

std::optional<SimplexType> simplex_type_from_string(const std::string& s) {
  for (auto t : kAllSimplexTypes)
    if (s == to_string(t)) return t;
  return std::nullopt;
}

std::optional<ClassifiedSimplex> classify(std::vector<Line> vs, Ring ring, std::size_t n) {
  check_input(vs, ring, n);
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw Error(ErrorKind::PreconditionViolation, "repeated line in candidate simplex");

  const std::size_t s = vs.size();
  Rows all;
  all.reserve(s);
  for (const auto& v : vs) all.push_back(v.coords());
  const std::size_t rank = vector_rank(all, ring);
  const std::size_t deficiency = s - rank;

  ClassifiedSimplex out;
  if (deficiency == 0) {
    if (!is_partial_basis(vs, ring, n)) return std::nullopt;
    out.vertices = std::move(vs);
    return out;
  }
  if (deficiency > 2) return std::nullopt;

  std::optional<ClassifiedSimplex> found;
  auto record = [&](SimplexType t, std::vector<Relation> witness) {
    if (found) {
      if (found->type != t)
        throw Error(ErrorKind::Internal, std::string("vertex set is both ") + to_string(found->type) + " and " +
                                             to_string(t));
      return;
    }
    ClassifiedSimplex c;
    c.type = t;
    std::set<std::size_t> core;
    for (const auto& r : witness) {
      core.insert(r.target);
      for (const auto& [k, sg] : r.terms) core.insert(k);
    }
    c.core.assign(core.begin(), core.end());
    c.witness = std::move(witness);
    found = std::move(c);
  };

  if (deficiency == 1) {
    for (std::size_t i = 0; i < s; ++i) {
      Rows basis = rows_except(vs, i, s);
      if (vector_rank(basis, ring) != s - 1) continue;
      auto idx = indices_except(s, i, s);
      auto terms = unit_relation(vs, basis, idx, i, ring);
      if (!terms || (terms->size() != 2 && terms->size() != 3)) continue;
      if (!is_partial_basis(lines_except(vs, i, s), ring, n)) continue;
      const auto t = terms->size() == 2 ? SimplexType::TwoAdditive : SimplexType::ThreeAdditive;
      record(t, {Relation{i, std::move(*terms)}});
    }
  } else {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = i + 1; j < s; ++j) {
        Rows basis = rows_except(vs, i, j);
        if (vector_rank(basis, ring) != s - 2) continue;
        auto idx = indices_except(s, i, j);
        auto ti = unit_relation(vs, basis, idx, i, ring);
        if (!ti || ti->size() != 2) continue;
        auto tj = unit_relation(vs, basis, idx, j, ring);
        if (!tj || tj->size() != 2) continue;
        std::size_t shared = 0;
        for (const auto& a : *ti)
          for (const auto& b : *tj) shared += a.first == b.first;
        if (shared > 1) continue;
        if (!is_partial_basis(lines_except(vs, i, j), ring, n)) continue;
        const auto t = shared == 1 ? SimplexType::DoubleTriple : SimplexType::DoubleDouble;
        record(t, {Relation{i, std::move(*ti)}, Relation{j, std::move(*tj)}});
      }
    }
  }
  if (!found) return std::nullopt;
  found->vertices = std::move(vs);
  return found;
}

std::optional<SimplexType> simplex_type(std::vector<Line> vs, Ring ring, std::size_t n) {
  auto c = classify(std::move(vs), ring, n);
  if (!c) return std::nullopt;
  return c->type;
}

std::optional<SimplexType> relative_type(const std::vector<Line>& sigma, const std::vector<Line>& frame,
                                         Ring ring, std::size_t n) {
  std::vector<Line> all = sigma;
  all.insert(all.end(), frame.begin(), frame.end());
  return simplex_type(std::move(all), ring, n);
}

bool is_minimal(const std::vector<Line>& sigma, const std::vector<Line>& frame, SimplexType type, Ring ring,
                std::size_t n) {
  if (relative_type(sigma, frame, ring, n) != type) return false;
  // A face of the given type forces a facet of that type, since any simplex
  // containing an additive core has the core's type.
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    std::vector<Line> facet;
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (j != i) facet.push_back(sigma[j]);
    if (facet.empty() && frame.empty()) continue;
    if (relative_type(facet, frame, ring, n) == type) return false;
  }
  return true;
}

std::size_t FacetType::total() const {
  std::size_t t = non_simplex;
  for (auto c : count) t += c;
  return t;
}

std::string FacetType::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto t : kAllSimplexTypes) {
    if (of(t) == 0) continue;
    os << (first ? "" : ", ") << to_string(t) << "x" << of(t);
    first = false;
  }
  if (non_simplex) os << (first ? "" : ", ") << "NotASimplexx" << non_simplex;
  os << '}';
  return os.str();
}

FacetType facet_type(const std::vector<Line>& vs, Ring ring, std::size_t n) {
  if (vs.size() < 2) throw Error(ErrorKind::PreconditionViolation, "facet type needs at least two lines");
  FacetType f;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto t = simplex_type(lines_except(vs, i, vs.size()), ring, n);
    if (t) ++f.of(*t);
    else ++f.non_simplex;
  }
  return f;
}

FacetVerdict classify_by_facets(std::size_t vertex_count, const FacetType& f) {
  using K = FacetVerdict::Kind;
  if (f.non_simplex > 0 || vertex_count < 2 || f.total() != vertex_count) return {K::NotASimplex, {}};
  const std::size_t d = vertex_count - 1;
  auto only = [&](std::initializer_list<std::pair<SimplexType, std::size_t>> want) {
    FacetType g;
    for (const auto& [t, c] : want) g.of(t) += c;
    return g == f;
  };
  using T = SimplexType;
  if (f.of(T::Standard) == vertex_count) return {K::Undetermined, {}};
  if (d > 2 && only({{T::Standard, 3}, {T::TwoAdditive, d - 2}})) return {K::Determined, T::TwoAdditive};
  if (d > 3 && only({{T::Standard, 4}, {T::ThreeAdditive, d - 3}})) return {K::Determined, T::ThreeAdditive};
  if (d >= 4 && only({{T::TwoAdditive, 4}, {T::ThreeAdditive, 1}, {T::DoubleTriple, d - 4}}))
    return {K::Determined, T::DoubleTriple};
  if (d >= 5 && only({{T::TwoAdditive, 6}, {T::DoubleDouble, d - 5}})) return {K::Determined, T::DoubleDouble};
  return {K::NotASimplex, {}};
}

}  // namespace baa
