#include "baa/smith.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <numeric>

namespace baa {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }
int cmpabs(const Integer& a, unsigned long b) { return mpz_cmpabs_ui(a.get_mpz_t(), b); }

using Row = IntMatrix::Row;

Row::iterator find_col(Row& row, std::uint32_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const IntMatrix::Entry& e, std::uint32_t k) { return e.first < k; });
  return (it != row.end() && it->first == c) ? it : row.end();
}

Row::const_iterator find_col(const Row& row, std::uint32_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const IntMatrix::Entry& e, std::uint32_t k) { return e.first < k; });
  return (it != row.end() && it->first == c) ? it : row.end();
}

// dst -= f * src; reports columns that became nonzero in dst.
void axpy(Row& dst, const Integer& f, const Row& src, std::vector<std::uint32_t>& created) {
  Row out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i++]));
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      Integer v = -f * src[j].second;
      created.push_back(src[j].first);
      out.emplace_back(src[j].first, std::move(v));
      ++j;
    } else {
      Integer v = dst[i].second - f * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst.swap(out);
}

// Rewrites a list of positive integers as the invariant factors of the
// diagonal matrix they form.
std::vector<Integer> normalize_chain(std::vector<Integer> d) {
  std::vector<Integer> ones, rest;
  for (auto& x : d) {
    x = abs(x);
    if (x == 1) ones.push_back(x);
    else if (x != 0) rest.push_back(x);
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      rest[i] = g;
      rest[j] = l;
    }
  }
  for (auto& x : rest)
    if (x == 1) ones.push_back(x);
  for (auto& x : rest)
    if (x != 1) ones.push_back(x);
  return ones;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), row_data_(rows) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.row_data_[i].emplace_back(static_cast<std::uint32_t>(i), Integer(1));
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& d) {
  IntMatrix m(d.size(), d.empty() ? 0 : d[0].size());
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c)
      if (d[r][c] != 0) m.row_data_[r].emplace_back(static_cast<std::uint32_t>(c), d[r][c]);
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<long>>& d) {
  IntMatrix m(d.size(), d.empty() ? 0 : d[0].size());
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c)
      if (d[r][c] != 0) m.row_data_[r].emplace_back(static_cast<std::uint32_t>(c), Integer(d[r][c]));
  return m;
}

std::size_t IntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : row_data_) n += r.size();
  return n;
}

Integer IntMatrix::get(std::size_t r, std::size_t c) const {
  auto it = find_col(row_data_[r], static_cast<std::uint32_t>(c));
  return it == row_data_[r].end() ? Integer(0) : it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  auto& row = row_data_[r];
  auto key = static_cast<std::uint32_t>(c);
  auto it = std::lower_bound(row.begin(), row.end(), key,
                             [](const Entry& e, std::uint32_t k) { return e.first < k; });
  if (it != row.end() && it->first == key) {
    if (v == 0) row.erase(it);
    else it->second = v;
  } else if (v != 0) {
    row.insert(it, Entry(key, v));
  }
}

void IntMatrix::add(std::size_t r, std::size_t c, const Integer& v) { set(r, c, get(r, c) + v); }

bool IntMatrix::is_zero() const {
  return std::all_of(row_data_.begin(), row_data_.end(), [](const Row& r) { return r.empty(); });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : row_data_[r]) t.row_data_[c].emplace_back(static_cast<std::uint32_t>(r), v);
  return t;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& row_perm,
                              const std::vector<std::size_t>& col_perm) const {
  IntMatrix p(rows(), cols_);
  for (std::size_t r = 0; r < rows(); ++r) {
    auto& dst = p.row_data_[row_perm[r]];
    for (const auto& [c, v] : row_data_[r]) dst.emplace_back(static_cast<std::uint32_t>(col_perm[c]), v);
    std::sort(dst.begin(), dst.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }
  return p;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows(), std::vector<Integer>(cols_, 0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (const auto& [c, v] : row_data_[r]) d[r][c] = v;
  return d;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::map<std::uint32_t, Integer> acc;
    for (const auto& [k, v] : a.row(r))
      for (const auto& [c, w] : b.row(k)) acc[c] += v * w;
    for (auto& [c, v] : acc)
      if (v != 0) out.row_data_[r].emplace_back(c, v);
  }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.cols_ == b.cols_ && a.row_data_ == b.row_data_;
}

std::vector<Integer> smith_dense(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pr == m || cmpabs(a[i][j], a[pr][pc]) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    if (pc != t)
      for (auto& row : a) std::swap(row[t], row[pc]);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return normalize_chain(std::move(diag));
}

std::optional<std::vector<long>> smith_small(std::vector<std::vector<long>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  // a -= q * b, false on overflow
  auto axpy = [](long& x, long q, long y) {
    long t;
    return !__builtin_mul_overflow(q, y, &t) && !__builtin_sub_overflow(x, t, &x);
  };
  std::vector<long> diag;
  for (std::size_t t = 0; t < m && t < n; ++t) {
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == LONG_MIN) return std::nullopt;
        if (a[i][j] != 0 && (pr == m || std::labs(a[i][j]) < std::labs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    if (pc != t)
      for (auto& row : a) std::swap(row[t], row[pc]);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const long q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j)
          if (!axpy(a[i][j], q, a[t][j])) return std::nullopt;
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const long q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i)
          if (!axpy(a[i][j], q, a[i][t])) return std::nullopt;
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k)
              if (__builtin_add_overflow(a[t][k], a[i][k], &a[t][k])) return std::nullopt;
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a[t][t] == LONG_MIN) return std::nullopt;
    diag.push_back(std::labs(a[t][t]));
  }
  return diag;
}

std::vector<Integer> smith(const IntMatrix& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  std::vector<Row> rows(nrows);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    rows[r] = m.row(r);
    for (const auto& e : rows[r]) col_rows[e.first].push_back(static_cast<std::uint32_t>(r));
  }
  std::vector<char> row_alive(nrows, 1), col_done(ncols, 0);
  std::size_t units = 0;
  std::vector<std::uint32_t> created;

  // Phase 1: eliminate along unit pivots, choosing the shortest pivot row.
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (col_done[c]) continue;
      auto& lst = col_rows[c];
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
      lst.erase(std::remove_if(lst.begin(), lst.end(),
                               [&](std::uint32_t r) {
                                 return !row_alive[r] || find_col(rows[r], c) == rows[r].end();
                               }),
                lst.end());
      if (lst.empty()) {
        col_done[c] = 1;
        continue;
      }
      std::uint32_t piv = 0;
      bool found = false;
      for (auto r : lst) {
        auto it = find_col(rows[r], c);
        if (cmpabs(it->second, 1) == 0 && (!found || rows[r].size() < rows[piv].size())) {
          piv = r;
          found = true;
        }
      }
      if (!found) continue;
      const Integer p = find_col(rows[piv], c)->second;  // +-1, its own inverse
      for (auto r : lst) {
        if (r == piv) continue;
        Integer f = find_col(rows[r], c)->second * p;
        created.clear();
        axpy(rows[r], f, rows[piv], created);
        for (auto k : created) col_rows[k].push_back(r);
      }
      row_alive[piv] = 0;
      col_done[c] = 1;
      rows[piv].clear();
      lst.clear();
      ++units;
      progress = true;
    }
  }

  // Phase 2: dense Smith form of whatever the unit pivots could not reach.
  std::vector<std::size_t> live_rows;
  std::vector<long> col_map(ncols, -1);
  std::size_t ndense_cols = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!row_alive[r] || rows[r].empty()) continue;
    live_rows.push_back(r);
    for (const auto& e : rows[r])
      if (col_map[e.first] < 0) col_map[e.first] = static_cast<long>(ndense_cols++);
  }
  std::vector<Integer> result(units, Integer(1));
  if (!live_rows.empty()) {
    std::vector<std::vector<Integer>> d(live_rows.size(), std::vector<Integer>(ndense_cols, 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& e : rows[live_rows[i]]) d[i][col_map[e.first]] = e.second;
    auto rest = smith_dense(std::move(d));
    result.insert(result.end(), rest.begin(), rest.end());
  }
  return normalize_chain(std::move(result));
}

std::size_t matrix_rank(const IntMatrix& m) { return smith(m).size(); }

}  // namespace baa
