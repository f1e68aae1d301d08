#include "baa/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "baa/error.hpp"
#include "baa/smith.hpp"

namespace baa {

namespace {

long mod_inverse(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return t < 0 ? t + p : t;
}

void check_ring(const std::vector<Line>& vs, Ring ring) {
  for (const auto& v : vs)
    if (v.ring() != ring) throw Error(ErrorKind::RingMismatch, "line " + v.str() + " is over " + v.ring().name());
}

// Row echelon over F_p; returns rank. Rows are modified.
std::size_t echelon_mod(std::vector<std::vector<long>>& a, long p, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    long inv = mod_inverse(a[rank][c], p);
    for (auto& x : a[rank]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t echelon_q(std::vector<std::vector<mpq_class>>& a, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[rank], a[piv]);
    mpq_class inv = 1 / a[rank][c];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

enum class Solve { Ok, NoSolution, Overflow };

// Fraction-free elimination on the augmented system [basis^T | v] in machine
// integers, then exact back substitution. The basis is linearly independent,
// so a consistent system has its pivots in the first k columns.
Solve solve_small(std::vector<std::vector<long>> a, std::size_t k, std::vector<long>& c) {
  const std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t col = 0; col <= k && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (col == k) return Solve::NoSolution;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const long g = std::gcd(a[i][col], a[r][col]);
      const long fi = a[r][col] / g, fr = a[i][col] / g;
      long content = 0;
      for (std::size_t j = col; j <= k; ++j) {
        long x, y;
        if (__builtin_mul_overflow(a[i][j], fi, &x) || __builtin_mul_overflow(a[r][j], fr, &y) ||
            __builtin_sub_overflow(x, y, &a[i][j]))
          return Solve::Overflow;
        content = std::gcd(content, a[i][j]);
      }
      if (content > 1)
        for (std::size_t j = col; j <= k; ++j) a[i][j] /= content;
    }
    ++r;
  }
  if (r < k) return Solve::Overflow;  // dependent basis: leave it to the exact path
  c.assign(k, 0);
  for (std::size_t j = k; j-- > 0;) {
    long rhs = a[j][k];
    for (std::size_t l = j + 1; l < k; ++l) {
      long t;
      if (__builtin_mul_overflow(a[j][l], c[l], &t) || __builtin_sub_overflow(rhs, t, &rhs)) return Solve::Overflow;
    }
    if (rhs % a[j][j] != 0) return Solve::NoSolution;
    c[j] = rhs / a[j][j];
  }
  return Solve::Ok;
}

IntMatrix line_matrix(const std::vector<Line>& vs, std::size_t n) {
  IntMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (vs[i][j] != 0) m.set(i, j, Integer(vs[i][j]));
  return m;
}

std::vector<std::vector<long>> line_rows(const std::vector<Line>& vs) {
  std::vector<std::vector<long>> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(v.coords());
  return rows;
}

// Elementary divisors of the row lattice, machine integers when they suffice.
std::vector<Integer> lattice_divisors(const std::vector<Line>& vs, std::size_t n) {
  if (auto d = smith_small(line_rows(vs))) return std::vector<Integer>(d->begin(), d->end());
  return smith(line_matrix(vs, n));
}

void check_dims(const std::vector<Line>& vs, std::size_t n) {
  for (const auto& v : vs)
    if (v.dim() != n)
      throw Error(ErrorKind::DimensionMismatch,
                  "line " + v.str() + " has length " + std::to_string(v.dim()) + ", expected " + std::to_string(n));
}

}  // namespace

Ring Ring::prime_field(long p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::UnsupportedPrime, std::to_string(p) + " is not an odd prime");
  return Ring(p);
}

std::string Ring::name() const { return p_ == 0 ? "Z" : "F_" + std::to_string(p_); }

long Ring::reduce(long x) const {
  if (p_ == 0) return x;
  long r = x % p_;
  return r < 0 ? r + p_ : r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string Line::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::size_t LineHash::operator()(const Line& l) const noexcept {
  std::size_t h = static_cast<std::size_t>(l.ring().p()) * 0x9e3779b97f4a7c15ULL;
  for (long x : l.coords()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Line canonical_line(std::vector<long> coords, Ring ring) {
  if (ring.is_integers()) {
    long g = 0;
    for (long x : coords) g = std::gcd(g, x);
    if (g != 1) throw Error(ErrorKind::NotPrimitive, "entries have gcd " + std::to_string(g));
    auto first = std::find_if(coords.begin(), coords.end(), [](long x) { return x != 0; });
    if (*first < 0)
      for (auto& x : coords) x = -x;
    return Line(std::move(coords), ring);
  }
  const long p = ring.p();
  for (auto& x : coords) x = ring.reduce(x);
  auto first = std::find_if(coords.begin(), coords.end(), [](long x) { return x != 0; });
  if (first == coords.end()) throw Error(ErrorKind::NotPrimitive, "zero vector over " + ring.name());
  if (*first > (p - 1) / 2)
    for (auto& x : coords) x = x == 0 ? 0 : p - x;
  return Line(std::move(coords), ring);
}

Line canonical_line(const std::vector<Integer>& coords, Ring ring) {
  std::vector<long> c;
  c.reserve(coords.size());
  if (ring.is_integers()) {
    Integer g = 0;
    for (const auto& x : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1) throw Error(ErrorKind::NotPrimitive, "entries have gcd " + g.get_str());
    for (const auto& x : coords) {
      if (!fits_long(x)) throw Error(ErrorKind::TooLarge, "coordinate " + x.get_str() + " exceeds 64 bits");
      c.push_back(x.get_si());
    }
  } else {
    for (const auto& x : coords) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(ring.p()));
      c.push_back(r.get_si());
    }
  }
  return canonical_line(std::move(c), ring);
}

Line unit_line(std::size_t i, std::size_t n, Ring ring) {
  std::vector<long> c(n, 0);
  c.at(i) = 1;
  return canonical_line(std::move(c), ring);
}

std::size_t vector_rank(const std::vector<std::vector<long>>& vs, Ring ring) {
  if (vs.empty()) return 0;
  const std::size_t n = vs[0].size();
  if (ring.is_field()) {
    std::vector<std::vector<long>> a = vs;
    for (auto& row : a)
      for (auto& x : row) x = ring.reduce(x);
    return echelon_mod(a, ring.p(), n);
  }
  if (auto d = smith_small(vs)) return d->size();
  std::vector<std::vector<mpq_class>> a(vs.size(), std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = vs[i][j];
  return echelon_q(a, n);
}

std::optional<std::vector<long>> coordinates_in(const std::vector<std::vector<long>>& basis,
                                                const std::vector<long>& v, Ring ring) {
  const std::size_t k = basis.size();
  const std::size_t n = v.size();
  // Augmented system: n equations, k unknowns.
  if (ring.is_field()) {
    const long p = ring.p();
    std::vector<std::vector<long>> a(n, std::vector<long>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = ring.reduce(basis[j][i]);
      a[i][k] = ring.reduce(v[i]);
    }
    std::size_t r = echelon_mod(a, p, k + 1);
    std::vector<long> c(k, 0);
    for (std::size_t i = 0; i < r; ++i) {
      auto lead = std::find_if(a[i].begin(), a[i].end(), [](long x) { return x != 0; });
      std::size_t col = static_cast<std::size_t>(lead - a[i].begin());
      if (col == k) return std::nullopt;  // inconsistent
      c[col] = a[i][k];
    }
    return c;
  }
  {
    std::vector<std::vector<long>> a(n, std::vector<long>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
      a[i][k] = v[i];
    }
    std::vector<long> c;
    switch (solve_small(std::move(a), k, c)) {
      case Solve::Ok: return c;
      case Solve::NoSolution: return std::nullopt;
      case Solve::Overflow: break;
    }
  }
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = v[i];
  }
  std::size_t r = echelon_q(a, k + 1);
  std::vector<long> c(k, 0);
  for (std::size_t i = 0; i < r; ++i) {
    auto lead = std::find_if(a[i].begin(), a[i].end(), [](const mpq_class& x) { return x != 0; });
    std::size_t col = static_cast<std::size_t>(lead - a[i].begin());
    if (col == k) return std::nullopt;
    const mpq_class& x = a[i][k];
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return std::nullopt;
    c[col] = x.get_num().get_si();
  }
  return c;
}

Integer determinant(const std::vector<std::vector<long>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  // Bareiss fraction-free elimination
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_partial_basis(const std::vector<Line>& vs, Ring ring, std::size_t n) {
  check_dims(vs, n);
  check_ring(vs, ring);
  if (vs.size() > n) return false;
  if (vs.empty()) return true;
  if (ring.is_integers()) {
    auto d = lattice_divisors(vs, n);
    return d.size() == vs.size() && std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
  }
  auto rows = line_rows(vs);
  if (vector_rank(rows, ring) != vs.size()) return false;
  if (vs.size() < n) return true;
  Integer det = determinant(rows);
  long d = ring.reduce(mpz_fdiv_ui(det.get_mpz_t(), static_cast<unsigned long>(ring.p())));
  return d == 1 || d == ring.p() - 1;
}

bool span_contains(const std::vector<Line>& vs, const Line& v, Ring ring) {
  check_ring(vs, ring);
  check_ring({v}, ring);
  check_dims(vs, v.dim());
  if (vs.empty()) return false;
  if (ring.is_field()) {
    std::vector<std::vector<long>> rows;
    for (const auto& u : vs) rows.push_back(u.coords());
    std::size_t r = vector_rank(rows, ring);
    rows.push_back(v.coords());
    return vector_rank(rows, ring) == r;
  }
  // Same rank and same determinantal content means adding v does not enlarge
  // the lattice.
  auto with = vs;
  with.push_back(v);
  auto d0 = lattice_divisors(vs, v.dim());
  auto d1 = lattice_divisors(with, v.dim());
  if (d0.size() != d1.size()) return false;
  Integer p0 = 1, p1 = 1;
  for (const auto& x : d0) p0 *= x;
  for (const auto& x : d1) p1 *= x;
  return p0 == p1;
}

Integer line_count(std::size_t n, long p) {
  Integer q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), n);
  return (q - 1) / 2;
}

std::vector<Line> all_lines(std::size_t n, long p) {
  Ring ring = Ring::prime_field(p);
  std::vector<Line> out;
  std::vector<long> c(n, 0);
  for (;;) {
    // odometer, last coordinate fastest, so output is already sorted
    std::size_t i = n;
    while (i > 0) {
      if (++c[i - 1] < p) break;
      c[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
    auto first = std::find_if(c.begin(), c.end(), [](long x) { return x != 0; });
    if (*first <= (p - 1) / 2) out.push_back(canonical_line(c, ring));
  }
  return out;
}

}  // namespace baa
