#include "baa/tits.hpp"

#include <algorithm>

#include "baa/error.hpp"

namespace baa {

namespace {

long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// All k-dimensional subspaces of F_p^n in RREF, sorted.
std::vector<ModRows> subspaces_of_dim(std::size_t n, std::size_t k, long p) {
  std::vector<ModRows> out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // free slots: (row i, column j) with j > piv[i] and j not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!std::binary_search(piv.begin(), piv.end(), j)) free_slots.emplace_back(i, j);
    std::vector<long> val(free_slots.size(), 0);
    for (;;) {
      ModRows m(k, std::vector<long>(n, 0));
      for (std::size_t i = 0; i < k; ++i) m[i][piv[i]] = 1;
      for (std::size_t s = 0; s < free_slots.size(); ++s) m[free_slots[s].first][free_slots[s].second] = val[s];
      out.push_back(std::move(m));
      std::size_t s = 0;
      while (s < val.size() && ++val[s] == p) val[s++] = 0;
      if (s == val.size()) break;
    }
    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ModRows rref_mod(ModRows a, long p) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    long inv = inv_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  a.resize(rank);
  return a;
}

std::optional<std::uint32_t> TitsBuilding::span_vertex(const ModRows& vectors, unsigned orientation) const {
  auto it = ids_.find({rref_mod(vectors, p_), orientation});
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TitsBuilding build_tits(std::size_t n, long p, bool oriented, std::size_t max_vertices) {
  Ring::prime_field(p);  // validates p
  if (n < 2) throw Error(ErrorKind::PreconditionViolation, "the building needs n >= 2");
  const unsigned copies = oriented ? static_cast<unsigned>((p - 1) / 2) : 1U;
  TitsBuilding t(n, p, oriented);

  for (std::size_t k = 1; k < n; ++k) {
    for (auto& s : subspaces_of_dim(n, k, p)) {
      for (unsigned o = 0; o < copies; ++o) {
        if (t.vertices_.size() >= max_vertices)
          throw Error(ErrorKind::TooLarge, "building exceeds " + std::to_string(max_vertices) + " vertices");
        t.ids_.emplace(std::make_pair(s, o), static_cast<std::uint32_t>(t.vertices_.size()));
        t.vertices_.push_back({s, o});
      }
    }
  }
  const std::size_t nv = t.vertices_.size();
  // comparable[u][v] for u < v; indices are sorted by dimension
  std::vector<std::vector<char>> comparable(nv, std::vector<char>(nv, 0));
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      const auto& U = t.vertices_[u].basis;
      const auto& V = t.vertices_[v].basis;
      if (U.size() >= V.size()) continue;
      ModRows both = U;
      both.insert(both.end(), V.begin(), V.end());
      if (rref_mod(both, p).size() == V.size()) comparable[u][v] = comparable[v][u] = 1;
    }
  }
  for (std::uint32_t v = 0; v < nv; ++v) t.faces_.add({v});
  for (int d = 0; d <= t.faces_.dimension(); ++d) {
    const std::vector<Simplex> level = t.faces_.of_dim(d);
    for (const auto& s : level) {
      for (std::uint32_t v = s.back() + 1; v < nv; ++v) {
        bool ok = true;
        for (auto u : s) ok = ok && comparable[u][v];
        if (!ok) continue;
        Simplex c = s;
        c.push_back(v);
        t.faces_.add(c);
      }
    }
  }
  return t;
}

}  // namespace baa
