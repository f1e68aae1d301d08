#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "baa/integer.hpp"

namespace baa {

// Sparse integer matrix. Rows are kept as column-sorted entry lists; boundary
// matrices have a handful of nonzeros per column, so dense storage would waste
// most of its memory on zeros.
class IntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Integer>;
  using Row = std::vector<Entry>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& d);
  static IntMatrix from_dense(const std::vector<std::vector<long>>& d);

  std::size_t rows() const { return row_data_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  Integer get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  void add(std::size_t r, std::size_t c, const Integer& v);
  const Row& row(std::size_t r) const { return row_data_[r]; }

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix permuted(const std::vector<std::size_t>& row_perm,
                     const std::vector<std::size_t>& col_perm) const;
  std::vector<std::vector<Integer>> to_dense() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<Row> row_data_;
};

// Nonzero diagonal of the Smith normal form: positive, each entry dividing
// the next.
std::vector<Integer> smith(const IntMatrix& m);

// Smith normal form of a small dense matrix; same contract as smith().
std::vector<Integer> smith_dense(std::vector<std::vector<Integer>> a);

// Machine-integer variant for small dense matrices; nullopt when an
// intermediate value would overflow. Entries come out as a divisor chain.
std::optional<std::vector<long>> smith_small(std::vector<std::vector<long>> a);

std::size_t matrix_rank(const IntMatrix& m);

}  // namespace baa
