#include "baa/complex.hpp"

#include <algorithm>

#include "baa/error.hpp"

namespace baa {

namespace {

// Fixed-width bitset over vertex indices.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= 1ULL << (i % 64); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1ULL; }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // Calls f(i) for every set bit i >= from, ascending.
  template <class F>
  void for_each_from(std::size_t from, F&& f) const {
    for (std::size_t k = from / 64; k < w_.size(); ++k) {
      std::uint64_t word = w_[k];
      if (k == from / 64) word &= ~0ULL << (from % 64);
      while (word) {
        f(k * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
        word &= word - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

}  // namespace

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : s) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

std::size_t SimplexTable::add(const Simplex& s) {
  const std::size_t d = s.size() - 1;
  if (by_dim_.size() <= d) {
    by_dim_.resize(d + 1);
    index_.resize(d + 1);
  }
  auto [it, inserted] = index_[d].try_emplace(s, by_dim_[d].size());
  if (inserted) by_dim_[d].push_back(s);
  return it->second;
}

std::optional<std::size_t> SimplexTable::find(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplexTable::size(int d) const {
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return 0;
  return by_dim_[static_cast<std::size_t>(d)].size();
}

std::size_t SimplexTable::total() const {
  std::size_t t = 0;
  for (const auto& v : by_dim_) t += v.size();
  return t;
}

const std::vector<Simplex>& SimplexTable::of_dim(int d) const {
  static const std::vector<Simplex> kEmpty;
  if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kEmpty;
  return by_dim_[static_cast<std::size_t>(d)];
}

const char* to_string(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::BA: return "BA";
    case Family::BAA: return "BAA";
  }
  return "?";
}

TypeFilter family_filter(Family f) {
  TypeFilter t;
  if (f == Family::BAA) return t;
  t.allowed = {true, f == Family::BA, false, false, false};
  return t;
}

Complex::Complex(Ring ring, std::size_t n, std::vector<Line> vertices, std::vector<Line> frame)
    : ring_(ring), n_(n), vertices_(std::move(vertices)), frame_(std::move(frame)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].dim() != n_) throw Error(ErrorKind::DimensionMismatch, "vertex " + vertices_[i].str());
    if (!vertex_ids_.emplace(vertices_[i], static_cast<std::uint32_t>(i)).second)
      throw Error(ErrorKind::PreconditionViolation, "repeated vertex " + vertices_[i].str());
  }
}

std::optional<SimplexType> Complex::type_of(const Simplex& s) const {
  auto i = faces_.find(s);
  if (!i) return std::nullopt;
  return types_[s.size() - 1][*i];
}

std::array<std::size_t, 5> Complex::type_counts(int d) const {
  std::array<std::size_t, 5> c{};
  if (d < 0 || d > dimension()) return c;
  for (auto t : types_[static_cast<std::size_t>(d)]) ++c[static_cast<std::size_t>(t)];
  return c;
}

std::vector<Line> Complex::lines(const Simplex& s) const {
  std::vector<Line> out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(vertices_[v]);
  return out;
}

std::optional<std::uint32_t> Complex::vertex_index(const Line& v) const {
  auto it = vertex_ids_.find(v);
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

void Complex::add_simplex(const Simplex& s, SimplexType t) {
  std::size_t before = faces_.size(static_cast<int>(s.size()) - 1);
  std::size_t i = faces_.add(s);
  if (types_.size() < s.size()) types_.resize(s.size());
  if (i == before) types_[s.size() - 1].push_back(t);
}

Complex Complex::filtered(const std::function<bool(const Simplex&, SimplexType)>& keep) const {
  Complex out(ring_, n_, vertices_, frame_);
  for (int d = 0; d <= dimension(); ++d)
    for (std::size_t i = 0; i < count(d); ++i)
      if (keep(simplices(d)[i], type(d, i))) out.add_simplex(simplices(d)[i], type(d, i));
  return out;
}

bool Complex::is_downward_closed() const {
  for (int d = 1; d <= dimension(); ++d) {
    for (const auto& s : simplices(d)) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != k) f.push_back(s[j]);
        if (!faces_.contains(f)) return false;
      }
    }
  }
  return true;
}

Complex full_subcomplex(std::vector<Line> vertices, Ring ring, std::size_t n, std::vector<Line> frame,
                        const BuildLimits& limits, const TypeFilter& filter) {
  if (vertices.size() > limits.max_vertices)
    throw Error(ErrorKind::TooLarge, std::to_string(vertices.size()) + " vertices exceed the ceiling of " +
                                         std::to_string(limits.max_vertices));
  for (const auto& v : vertices) {
    if (v.ring() != ring) throw Error(ErrorKind::RingMismatch, "vertex " + v.str());
    if (!frame.empty() && span_contains(frame, v, ring))
      throw Error(ErrorKind::PreconditionViolation, "vertex " + v.str() + " lies in the span of the frame");
  }
  Complex c(ring, n, std::move(vertices), std::move(frame));
  const auto& vs = c.vertices();
  const auto& fr = c.frame();
  const std::size_t nv = vs.size();
  const bool fast = fr.empty();
  std::size_t total = 0;

  auto classify_set = [&](const Simplex& s) -> std::optional<SimplexType> {
    auto ls = c.lines(s);
    ls.insert(ls.end(), fr.begin(), fr.end());
    return simplex_type(std::move(ls), ring, n);
  };
  auto bump = [&] {
    if (++total > limits.max_simplices)
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(limits.max_simplices) + " simplices");
  };

  for (std::uint32_t i = 0; i < nv; ++i) {
    auto t = classify_set({i});
    if (t && filter.allows(*t)) {
      c.add_simplex({i}, *t);
      bump();
    }
  }
  std::vector<Bits> adj(nv, Bits(nv));
  for (const auto& a : c.simplices(0)) {
    for (const auto& b : c.simplices(0)) {
      if (b[0] <= a[0]) continue;
      Simplex e{a[0], b[0]};
      auto t = classify_set(e);
      if (t && filter.allows(*t)) {
        c.add_simplex(e, *t);
        adj[a[0]].set(b[0]);
        adj[b[0]].set(a[0]);
        bump();
      }
    }
  }

  for (int d = 1; d <= c.dimension(); ++d) {
    // Copy: add_simplex may grow the table we are iterating.
    const std::vector<Simplex> level = c.simplices(d);
    for (std::size_t si = 0; si < level.size(); ++si) {
      const Simplex& s = level[si];
      Bits cand = adj[s[0]];
      for (std::size_t k = 1; k < s.size(); ++k) cand &= adj[s[k]];
      cand.for_each_from(s.back() + 1, [&](std::size_t v) {
        Simplex t = s;
        t.push_back(static_cast<std::uint32_t>(v));
        FacetType facets;
        ++facets.of(c.type(d, si));
        Simplex f;
        for (std::size_t k = 0; k < s.size(); ++k) {
          f.clear();
          for (std::size_t j = 0; j < t.size(); ++j)
            if (j != k) f.push_back(t[j]);
          auto ft = c.type_of(f);
          if (!ft) return;
          ++facets.of(*ft);
        }
        std::optional<SimplexType> type;
        if (fast) {
          auto verdict = classify_by_facets(t.size(), facets);
          if (verdict.kind == FacetVerdict::Kind::NotASimplex) return;
          if (verdict.determined()) type = verdict.type;
          else type = classify_set(t);
        } else {
          type = classify_set(t);
        }
        if (type && filter.allows(*type)) {
          c.add_simplex(t, *type);
          bump();
        }
      });
    }
  }
  return c;
}

Complex build_family(std::size_t n, long p, Family family, bool primed, const BuildLimits& limits) {
  Ring ring = Ring::prime_field(p);
  if (n == 0) throw Error(ErrorKind::PreconditionViolation, "rank must be positive");
  Integer count = line_count(n, p);
  if (count > limits.max_vertices)
    throw Error(ErrorKind::TooLarge, "F_" + std::to_string(p) + "^" + std::to_string(n) + " has " +
                                         count.get_str() + " lines, above the ceiling");
  Complex full = full_subcomplex(all_lines(n, p), ring, n, {}, limits, family_filter(family));
  if (!primed) return full;
  return full.filtered([&](const Simplex& s, SimplexType) {
    std::vector<std::vector<long>> rows;
    for (auto v : s) rows.push_back(full.vertices()[v].coords());
    return vector_rank(rows, ring) < n;
  });
}

ComplexPair build_pair(std::size_t n, long p, const BuildLimits& limits) {
  Complex total = build_family(n, p, Family::BAA, false, limits);
  Ring ring = total.ring();
  Complex sub = total.filtered([&](const Simplex& s, SimplexType) {
    std::vector<std::vector<long>> rows;
    for (auto v : s) rows.push_back(total.vertices()[v].coords());
    return vector_rank(rows, ring) < n;
  });
  return {std::move(total), std::move(sub)};
}

Complex link(const Complex& c, const Simplex& sigma, LinkVariant variant, long R) {
  if (sigma.empty() || !c.faces().contains(sigma))
    throw Error(ErrorKind::SimplexNotFound, "simplex is not in the complex");
  if (variant == LinkVariant::HatLess && !c.ring().is_integers())
    throw Error(ErrorKind::PreconditionViolation, "the last-coordinate bound needs integer lines");
  if (variant == LinkVariant::HatLess && R < 1) throw Error(ErrorKind::PreconditionViolation, "R must be positive");

  std::vector<Line> frame = c.frame();
  for (auto v : sigma) frame.push_back(c.vertices()[v]);

  // Vertices adjacent to sigma, filtered by the variant.
  std::vector<long> new_id(c.vertices().size(), -1);
  std::vector<Line> verts;
  for (std::uint32_t v = 0; v < c.vertices().size(); ++v) {
    if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
    Simplex s = sigma;
    s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    if (!c.faces().contains(s)) continue;
    const Line& l = c.vertices()[v];
    if (variant != LinkVariant::Plain && span_contains(frame, l, c.ring())) continue;
    if (variant == LinkVariant::HatLess && std::labs(l.last()) >= R) continue;
    new_id[v] = static_cast<long>(verts.size());
    verts.push_back(l);
  }
  Complex out(c.ring(), c.ambient_dim(), std::move(verts), frame);
  const int top = c.dimension();
  for (int d = static_cast<int>(sigma.size()); d <= top; ++d) {
    for (std::size_t i = 0; i < c.count(d); ++i) {
      const Simplex& s = c.simplices(d)[i];
      if (!std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) continue;
      Simplex tau;
      bool ok = true;
      for (auto v : s) {
        if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
        if (new_id[v] < 0) {
          ok = false;
          break;
        }
        tau.push_back(static_cast<std::uint32_t>(new_id[v]));
      }
      if (ok) out.add_simplex(tau, c.type(d, i));
    }
  }
  return out;
}

}  // namespace baa
