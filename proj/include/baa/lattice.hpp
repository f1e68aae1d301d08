#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "baa/integer.hpp"

namespace baa {

// Either the integers or the prime field F_p for an odd prime p.
class Ring {
 public:
  static Ring integers() { return Ring(0); }
  static Ring prime_field(long p);

  bool is_integers() const { return p_ == 0; }
  bool is_field() const { return p_ != 0; }
  long p() const { return p_; }
  std::string name() const;

  // Representative of x in {0..p-1}; identity over Z.
  long reduce(long x) const;

  friend bool operator==(Ring a, Ring b) { return a.p_ == b.p_; }
  friend bool operator!=(Ring a, Ring b) { return a.p_ != b.p_; }

 private:
  explicit Ring(long p) : p_(p) {}
  long p_;
};

bool is_prime(long p);

// A primitive vector up to sign, stored in canonical form: first nonzero
// coordinate positive over Z, in {1..(p-1)/2} over F_p (other coordinates in
// {0..p-1}).
class Line {
 public:
  Line() : ring_(Ring::integers()) {}

  const std::vector<long>& coords() const { return c_; }
  long operator[](std::size_t i) const { return c_[i]; }
  std::size_t dim() const { return c_.size(); }
  Ring ring() const { return ring_; }
  long last() const { return c_.back(); }
  std::string str() const;

  friend bool operator==(const Line& a, const Line& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }
  friend bool operator<(const Line& a, const Line& b) { return a.c_ < b.c_; }

 private:
  friend Line canonical_line(std::vector<long> coords, Ring ring);
  Line(std::vector<long> c, Ring r) : ring_(r), c_(std::move(c)) {}
  Ring ring_;
  std::vector<long> c_;
};

struct LineHash {
  std::size_t operator()(const Line& l) const noexcept;
};

Line canonical_line(std::vector<long> coords, Ring ring);
Line canonical_line(const std::vector<Integer>& coords, Ring ring);

// e_i in ring^n, zero-based i.
Line unit_line(std::size_t i, std::size_t n, Ring ring = Ring::integers());

bool is_partial_basis(const std::vector<Line>& vs, Ring ring, std::size_t n);
bool span_contains(const std::vector<Line>& vs, const Line& v, Ring ring);

// Rank over Q (for Z) or over F_p.
std::size_t vector_rank(const std::vector<std::vector<long>>& vs, Ring ring);

// Solves v = sum c_i b_i for linearly independent b_i. Over Z the coefficients
// are rational; nullopt unless a solution exists with integer coefficients
// (every coefficient over F_p is returned in {0..p-1}).
std::optional<std::vector<long>> coordinates_in(const std::vector<std::vector<long>>& basis,
                                                const std::vector<long>& v, Ring ring);

// Determinant of a square matrix of small integers, exact.
Integer determinant(const std::vector<std::vector<long>>& rows);

// Number of lines in F_p^n: (p^n - 1) / 2.
Integer line_count(std::size_t n, long p);

// Every line of F_p^n in canonical order.
std::vector<Line> all_lines(std::size_t n, long p);

}  // namespace baa

template <>
struct std::hash<baa::Line> {
  std::size_t operator()(const baa::Line& l) const noexcept { return baa::LineHash{}(l); }
};
