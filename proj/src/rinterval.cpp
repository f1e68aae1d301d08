#include "baa/rinterval.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "baa/error.hpp"

namespace baa {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_even(long x) { return x % 2 == 0; }

}  // namespace

std::string IntervalTuple::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << r[i];
  return os.str();
}

IntervalTuple parse_tuple(const std::string& s) {
  IntervalTuple t;
  std::stringstream in(s);
  std::string item;
  std::size_t i = 0;
  while (std::getline(in, item, ',')) {
    if (i == 6) throw Error(ErrorKind::PreconditionViolation, "tuple has more than six entries: " + s);
    try {
      std::size_t used = 0;
      t.r[i] = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::PreconditionViolation, "not an integer: '" + item + "'");
    }
    ++i;
  }
  if (i != 6) throw Error(ErrorKind::PreconditionViolation, "tuple needs six entries: " + s);
  return t;
}

long interval(long z, long R) {
  if (R < 1) throw Error(ErrorKind::PreconditionViolation, "R must be positive");
  long k = floor_div(z, R);
  if (k * R == z) return 2 * k;
  return 2 * k + 1;
}

long interval(const Integer& z, const Integer& R) {
  if (R < 1) throw Error(ErrorKind::PreconditionViolation, "R must be positive");
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), z.get_mpz_t(), R.get_mpz_t());
  Integer v = k * R == z ? Integer(2 * k) : Integer(2 * k + 1);
  if (!v.fits_slong_p()) throw Error(ErrorKind::TooLarge, "interval index exceeds 64 bits");
  return v.get_si();
}

bool sum_consistent(long a, long b, long r) {
  if (is_even(a) || is_even(b)) return r == a + b;
  return r >= a + b - 1 && r <= a + b + 1;
}

bool is_feasible(const IntervalTuple& t) {
  for (std::size_t i = 0; i < 3; ++i)
    if (t.r[i] < -1 || t.r[i] > 1) return false;
  return sum_consistent(t.r1(), t.r2(), t.r12()) && sum_consistent(t.r12(), t.r3(), t.r123()) &&
         sum_consistent(t.r1(), t.r3(), t.r13()) && sum_consistent(t.r123(), -t.r2(), t.r13());
}

std::vector<IntervalTuple> enumerate_tuples() {
  // |r12| <= 3, |r123| <= 5, |r13| <= 3 follow from the consistency rules.
  std::vector<IntervalTuple> out;
  for (long r1 = -1; r1 <= 1; ++r1)
    for (long r2 = -1; r2 <= 1; ++r2)
      for (long r3 = -1; r3 <= 1; ++r3)
        for (long r12 = -3; r12 <= 3; ++r12)
          for (long r123 = -5; r123 <= 5; ++r123)
            for (long r13 = -3; r13 <= 3; ++r13) {
              IntervalTuple t{{r1, r2, r3, r12, r123, r13}};
              if (is_feasible(t)) out.push_back(t);
            }
  std::sort(out.begin(), out.end());
  return out;
}

IntervalTuple swap_tuple(const IntervalTuple& t) {
  return {{t.r1(), t.r3(), t.r2(), t.r13(), t.r123(), t.r12()}};
}

IntervalTuple negate_tuple(const IntervalTuple& t) {
  IntervalTuple n;
  for (std::size_t i = 0; i < 6; ++i) n.r[i] = -t.r[i];
  return n;
}

IntervalTuple canonicalize(const IntervalTuple& t) {
  return std::min({t, swap_tuple(t), negate_tuple(t), negate_tuple(swap_tuple(t))});
}

std::vector<IntervalTuple> canonical_tuples() {
  std::set<IntervalTuple> s;
  for (const auto& t : enumerate_tuples()) s.insert(canonicalize(t));
  return {s.begin(), s.end()};
}

std::string tuples_csv(const std::vector<IntervalTuple>& ts) {
  std::vector<IntervalTuple> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  std::string out = "r1,r2,r3,r12,r123,r13\n";
  for (const auto& t : sorted) out += t.str() + "\n";
  return out;
}

std::vector<IntervalTuple> parse_tuples_csv(const std::string& text) {
  std::vector<IntervalTuple> out;
  std::stringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("r1", 0) == 0) continue;
    }
    out.push_back(parse_tuple(line));
  }
  return out;
}

Realization realize_tuple(const IntervalTuple& t, long max_R) {
  if (!is_feasible(t)) throw Error(ErrorKind::InfeasibleTuple, t.str());
  for (long R = 1; R <= max_R; ++R) {
    for (long z1 = -R + 1; z1 < R; ++z1)
      for (long z2 = -R + 1; z2 < R; ++z2)
        for (long z3 = -R + 1; z3 < R; ++z3) {
          IntervalTuple got{{interval(z1, R), interval(z2, R), interval(z3, R), interval(z1 + z2, R),
                             interval(z1 + z2 + z3, R), interval(z1 + z3, R)}};
          if (got != t) continue;
          // det [v1; v2; v3; w] = R - w1 z1 - w2 z2 - w3 z3 must be +-1.
          for (long w1 = -2 * R; w1 <= 2 * R; ++w1)
            for (long w2 = -2 * R; w2 <= 2 * R; ++w2)
              for (long w3 = -2 * R; w3 <= 2 * R; ++w3) {
                long det = R - w1 * z1 - w2 * z2 - w3 * z3;
                if (det != 1 && det != -1) continue;
                Realization out;
                out.R = R;
                out.z = {z1, z2, z3};
                for (std::size_t i = 0; i < 3; ++i) {
                  out.v[i] = {0, 0, 0, out.z[i]};
                  out.v[i][i] = 1;
                }
                out.w = {w1, w2, w3, R};
                return out;
              }
        }
  }
  throw Error(ErrorKind::RealizationNotFound, t.str() + " with R <= " + std::to_string(max_R));
}

}  // namespace baa
