#pragma once

#include <array>
#include <string>
#include <vector>

#include "baa/integer.hpp"

namespace baa {

// (r1, r2, r3, r12, r123, r13).
struct IntervalTuple {
  std::array<long, 6> r{};

  long r1() const { return r[0]; }
  long r2() const { return r[1]; }
  long r3() const { return r[2]; }
  long r12() const { return r[3]; }
  long r123() const { return r[4]; }
  long r13() const { return r[5]; }

  std::string str() const;  // "r1,r2,r3,r12,r123,r13"
  friend auto operator<=>(const IntervalTuple&, const IntervalTuple&) = default;
};

IntervalTuple parse_tuple(const std::string& s);

// 2k on kR, 2k+1 strictly between kR and (k+1)R, odd and negative below zero.
long interval(long z, long R);
long interval(const Integer& z, const Integer& R);

// Whether r may be the interval of a sum whose summands have intervals a, b.
bool sum_consistent(long a, long b, long r);

bool is_feasible(const IntervalTuple& t);
std::vector<IntervalTuple> enumerate_tuples();  // sorted

IntervalTuple swap_tuple(const IntervalTuple& t);
IntervalTuple negate_tuple(const IntervalTuple& t);
IntervalTuple canonicalize(const IntervalTuple& t);

// Sorted set of canonical representatives of the feasible tuples.
std::vector<IntervalTuple> canonical_tuples();
std::string tuples_csv(const std::vector<IntervalTuple>& ts);
std::vector<IntervalTuple> parse_tuples_csv(const std::string& text);

struct Realization {
  long R = 1;
  std::array<long, 3> z{};                  // last coordinates of v1, v2, v3
  std::array<std::array<long, 4>, 3> v{};   // v_i = e_i + z_i e_4
  std::array<long, 4> w{};                  // last coordinate R
};

// Explicit vectors in Z^4 whose last coordinates have the tuple's intervals.
Realization realize_tuple(const IntervalTuple& t, long max_R = 8);

}  // namespace baa
