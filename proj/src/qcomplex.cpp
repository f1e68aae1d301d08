#include "baa/qcomplex.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "baa/error.hpp"

namespace baa {

namespace {

// Which of v1, v2, v3 each family sums.
constexpr std::array<std::array<int, 3>, kQFamilies> kFamilySupport = {{
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1},
}};

std::vector<long> family_vector(const std::array<std::array<long, 4>, 3>& v, std::size_t f) {
  std::vector<long> u(4, 0);
  for (std::size_t i = 0; i < 3; ++i)
    if (kFamilySupport[f][i])
      for (std::size_t j = 0; j < 4; ++j) u[j] += v[i][j];
  return u;
}

// Per-vertex invariant: number of simplices containing it, by dimension and type.
std::vector<std::vector<std::size_t>> vertex_profiles(const Complex& c) {
  const std::size_t dims = static_cast<std::size_t>(c.dimension() + 1);
  std::vector<std::vector<std::size_t>> prof(c.vertices().size(), std::vector<std::size_t>(dims * 5, 0));
  for (int d = 0; d <= c.dimension(); ++d)
    for (std::size_t i = 0; i < c.count(d); ++i)
      for (auto v : c.simplices(d)[i])
        ++prof[v][static_cast<std::size_t>(d) * 5 + static_cast<std::size_t>(c.type(d, i))];
  return prof;
}

}  // namespace

std::vector<long> q_coefficients(long r) {
  if (r % 2 == 0) return {-r / 2};
  const long k = (r - 1) / 2;  // exact, r - 1 is even
  return {-(k + 1), -k};
}

std::vector<QVertex> q_labels(const IntervalTuple& t) {
  if (!is_feasible(t)) throw Error(ErrorKind::InfeasibleTuple, t.str());
  std::vector<QVertex> out;
  for (std::size_t f = 0; f < kQFamilies; ++f)
    for (long a : q_coefficients(t.r[f])) out.push_back({f, a});
  return out;
}

Complex build_q(const IntervalTuple& t, const BuildLimits& limits) {
  Ring Z = Ring::integers();
  std::vector<Line> verts;
  for (const auto& q : q_labels(t)) {
    std::vector<long> c(4, 0);
    for (std::size_t i = 0; i < 3; ++i) c[i] = kFamilySupport[q.family][i];
    c[3] = q.a;
    verts.push_back(canonical_line(std::move(c), Z));
  }
  return full_subcomplex(std::move(verts), Z, 4, {unit_line(3, 4)}, limits);
}

std::vector<QVertex> q_labels_realized(const Realization& real) {
  std::vector<QVertex> out;
  for (std::size_t f = 0; f < kQFamilies; ++f) {
    long z = family_vector(real.v, f)[3];
    // every a with |z + a R| < R
    for (long a = -(std::labs(z) / real.R) - 2; a <= std::labs(z) / real.R + 2; ++a)
      if (std::labs(z + a * real.R) < real.R) out.push_back({f, a});
  }
  return out;
}

Complex build_q_realized(const Realization& real, const BuildLimits& limits) {
  Ring Z = Ring::integers();
  std::vector<Line> verts;
  for (const auto& q : q_labels_realized(real)) {
    auto u = family_vector(real.v, q.family);
    for (std::size_t j = 0; j < 4; ++j) u[j] += q.a * real.w[j];
    verts.push_back(canonical_line(std::move(u), Z));
  }
  std::vector<long> w(real.w.begin(), real.w.end());
  return full_subcomplex(std::move(verts), Z, 4, {canonical_line(std::move(w), Z)}, limits);
}

bool is_isomorphism(const Complex& a, const Complex& b, const std::vector<std::uint32_t>& map, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (a.vertices().size() != b.vertices().size() || map.size() != a.vertices().size())
    return fail("vertex counts differ");
  if (a.dimension() != b.dimension()) return fail("dimensions differ");
  for (int d = 0; d <= a.dimension(); ++d) {
    if (a.count(d) != b.count(d)) return fail("simplex counts differ in dimension " + std::to_string(d));
    for (std::size_t i = 0; i < a.count(d); ++i) {
      Simplex s;
      for (auto v : a.simplices(d)[i]) s.push_back(map[v]);
      std::sort(s.begin(), s.end());
      auto t = b.type_of(s);
      if (!t) return fail("simplex " + std::to_string(i) + " of dimension " + std::to_string(d) + " has no image");
      if (*t != a.type(d, i))
        return fail(std::string("type mismatch: ") + to_string(a.type(d, i)) + " vs " + to_string(*t));
    }
  }
  return true;
}

bool find_isomorphism(const Complex& a, const Complex& b) {
  const std::size_t nv = a.vertices().size();
  if (nv != b.vertices().size() || a.dimension() != b.dimension()) return false;
  for (int d = 0; d <= a.dimension(); ++d)
    if (a.type_counts(d) != b.type_counts(d)) return false;
  auto pa = vertex_profiles(a);
  auto pb = vertex_profiles(b);
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto edge_type = [](const Complex& c, std::uint32_t u, std::uint32_t v) -> int {
    Simplex e{std::min(u, v), std::max(u, v)};
    auto t = c.type_of(e);
    return t ? static_cast<int>(*t) : -1;
  };
  std::vector<std::uint32_t> map(nv);
  std::vector<char> used(nv, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == nv) return is_isomorphism(a, b, map);
    for (std::uint32_t j = 0; j < nv; ++j) {
      if (used[j] || pa[i] != pb[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = edge_type(a, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(i)) ==
             edge_type(b, map[k], j);
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return extend(0);
}

}  // namespace baa
