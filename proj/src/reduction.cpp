#include "baa/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "baa/error.hpp"

namespace baa {

namespace {

const Ring kZ = Ring::integers();

std::optional<Line> maybe_line(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, x);
  if (g != 1) return std::nullopt;
  return canonical_line(v, kZ);
}

std::vector<long> lin(const std::vector<long>& a, long s, const std::vector<long>& b) {
  std::vector<long> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

// Representatives allowed for v: bar(v), and also -bar(v) when the last
// coordinate is zero, since then both have nonnegative last coordinate.
std::vector<std::vector<long>> reps(const Line& v) {
  std::vector<long> b = bar(v);
  if (v.last() != 0) return {b};
  std::vector<long> neg(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
  return {b, neg};
}

long bmod(const std::vector<long>& rep, long R) { return rep.back() % R; }

bool outside(long x, long R) { return x < 0 || x >= R; }

// v is a representative of `line` with nonnegative last coordinate.
bool represents(const std::vector<long>& v, const Line& line) { return v.back() >= 0 && maybe_line(v) == line; }

std::vector<long> unit(std::size_t i, std::size_t n) {
  std::vector<long> e(n, 0);
  e[i] = 1;
  return e;
}

void check_sigma(const std::vector<Line>& sigma, const ReductionContext& ctx) {
  if (sigma.empty()) throw Error(ErrorKind::PreconditionViolation, "empty simplex");
  for (const auto& v : sigma) {
    if (v.dim() != ctx.dim()) throw Error(ErrorKind::DimensionMismatch, "line " + v.str());
    if (!v.ring().is_integers()) throw Error(ErrorKind::RingMismatch, "line " + v.str());
  }
}

// Relative type of sigma after checking that it is a minimal additive simplex.
std::optional<SimplexType> minimal_additive_type(const std::vector<Line>& sigma, const ReductionContext& ctx) {
  check_sigma(sigma, ctx);
  auto t = relative_type(sigma, ctx.frame(), kZ, ctx.dim());
  if (!t) throw Error(ErrorKind::PreconditionViolation, "not a simplex of the link");
  if (*t == SimplexType::Standard || *t == SimplexType::DoubleDouble) return std::nullopt;
  if (!is_minimal(sigma, ctx.frame(), *t, kZ, ctx.dim()))
    throw Error(ErrorKind::NotMinimal, std::string("not a minimal ") + to_string(*t) + " simplex");
  return t;
}

// Does the reduced image of tau span a simplex of the target link? For the
// BA target only standard and 2-additive simplices count.
bool image_spans(const std::vector<Line>& tau, const ReductionContext& ctx, bool ba_only) {
  std::vector<Line> image;
  for (const auto& v : tau) image.push_back(reduce_line(v, ctx));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  auto t = relative_type(image, ctx.frame(), kZ, ctx.dim());
  if (!t) return false;
  if (ba_only) return *t == SimplexType::Standard || *t == SimplexType::TwoAdditive;
  return true;
}

bool carries(const std::vector<Line>& core, SimplexType t, const ReductionContext& ctx) {
  return !image_spans(core, ctx, t == SimplexType::TwoAdditive);
}

// Tries every assignment of sigma's vertices to the roles of a shape.
template <class F>
bool any_labeling(const std::vector<Line>& sigma, F&& test) {
  std::vector<std::size_t> perm(sigma.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<const Line*> l;
    for (auto i : perm) l.push_back(&sigma[i]);
    if (test(l)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool closed_two_additive(const std::vector<Line>& s, const ReductionContext& ctx) {
  const long R = ctx.R();
  if (s.size() != 3) return false;
  return any_labeling(s, [&](const std::vector<const Line*>& l) {
    for (const auto& X : reps(*l[0]))
      for (const auto& Y : reps(*l[1]))
        if (represents(lin(X, 1, Y), *l[2]) && bmod(X, R) + bmod(Y, R) >= R) return true;
    return false;
  });
}

bool closed_three_additive(const std::vector<Line>& s, const ReductionContext& ctx) {
  const long R = ctx.R();
  const std::size_t N = ctx.dim();
  if (s.size() == 3) {
    return any_labeling(s, [&](const std::vector<const Line*>& l) {
      for (const auto& X : reps(*l[0]))
        for (const auto& Y : reps(*l[1])) {
          if (bmod(X, R) + bmod(Y, R) < R) continue;
          for (std::size_t i = 0; i < ctx.m(); ++i)
            for (long e : {1L, -1L})
              if (represents(lin(lin(X, 1, Y), e, unit(i, N)), *l[2])) return true;
        }
      return false;
    });
  }
  if (s.size() == 4) {
    return any_labeling(s, [&](const std::vector<const Line*>& l) {
      for (const auto& X : reps(*l[0]))
        for (const auto& Y : reps(*l[1]))
          for (const auto& U : reps(*l[2]))
            for (long e : {1L, -1L}) {
              if (!represents(lin(lin(X, 1, Y), e, U), *l[3])) continue;
              if (outside(bmod(X, R) + bmod(Y, R) + e * bmod(U, R), R)) return true;
            }
      return false;
    });
  }
  return false;
}

bool closed_double_triple(const std::vector<Line>& s, const ReductionContext& ctx) {
  const long R = ctx.R();
  const std::size_t N = ctx.dim();
  if (s.size() == 4) {
    return any_labeling(s, [&](const std::vector<const Line*>& l) {
      for (const auto& X : reps(*l[0]))
        for (const auto& Y : reps(*l[1])) {
          if (bmod(X, R) + bmod(Y, R) < R) continue;
          auto xy = lin(X, 1, Y);
          for (long e : {1L, -1L}) {
            // {x, y, x+y+e w, x+y}
            if (maybe_line(lin(xy, e, ctx.w_bar())) == *l[2] && maybe_line(xy) == *l[3]) return true;
            for (std::size_t i = 0; i < ctx.m(); ++i) {
              auto ei = unit(i, N);
              if (maybe_line(lin(xy, e, ei)) != *l[2]) continue;
              // {x, y, x+y+e e_i, x+e e_i} and {x, y, x+y+e e_i, x+y}
              if (maybe_line(lin(X, e, ei)) == *l[3] || maybe_line(xy) == *l[3]) return true;
            }
          }
        }
      return false;
    });
  }
  if (s.size() == 5) {
    return any_labeling(s, [&](const std::vector<const Line*>& l) {
      for (const auto& X : reps(*l[0]))
        for (const auto& Y : reps(*l[1])) {
          auto xy = lin(X, 1, Y);
          if (!represents(xy, *l[4])) continue;
          for (const auto& T : reps(*l[2]))
            for (long e : {1L, -1L}) {
              if (!represents(lin(xy, e, T), *l[3])) continue;
              long b01 = bmod(X, R) + bmod(Y, R);
              if (outside(b01, R) || outside(b01 + e * bmod(T, R), R)) return true;
            }
        }
      return false;
    });
  }
  return false;
}

}  // namespace

ReductionContext::ReductionContext(std::vector<long> w_bar, std::size_t m) : w_bar_(std::move(w_bar)), m_(m) {
  if (w_bar_.empty() || w_bar_.back() <= 0)
    throw Error(ErrorKind::PreconditionViolation, "w needs a positive last coordinate");
  if (m_ + 1 > w_bar_.size()) throw Error(ErrorKind::DimensionMismatch, "frame larger than the ambient rank");
  w_ = canonical_line(w_bar_, kZ);
  for (std::size_t i = 0; i < m_; ++i) frame_.push_back(unit_line(i, w_bar_.size()));
  frame_.push_back(w_);
  if (!is_partial_basis(frame_, kZ, w_bar_.size()))
    throw Error(ErrorKind::PreconditionViolation, "e_1..e_m, w is not a partial basis");
}

std::vector<long> bar(const Line& v) {
  std::vector<long> c = v.coords();
  if (v.last() < 0)
    for (auto& x : c) x = -x;
  return c;
}

long b_coordinate(const Line& v, const ReductionContext& ctx) { return v.last() == 0 ? 0 : std::labs(v.last()) % ctx.R(); }

std::vector<long> reduce_bar(const Line& v, const ReductionContext& ctx) {
  std::vector<long> b = bar(v);
  const long a = b.back() / ctx.R();  // last coordinate is nonnegative
  return lin(b, -a, ctx.w_bar());
}

Line reduce_line(const Line& v, const ReductionContext& ctx) {
  if (v.dim() != ctx.dim()) throw Error(ErrorKind::DimensionMismatch, "line " + v.str());
  if (span_contains(ctx.frame(), v, kZ))
    throw Error(ErrorKind::InvalidVertex, v.str() + " lies in the span of e_1..e_m, w");
  return canonical_line(reduce_bar(v, ctx), kZ);
}

const char* to_string(CarryingStatus s) {
  switch (s) {
    case CarryingStatus::Carrying: return "Carrying";
    case CarryingStatus::NotCarrying: return "NotCarrying";
    case CarryingStatus::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::vector<Line> link_core(const std::vector<Line>& sigma, const std::vector<Line>& frame, Ring ring,
                            std::size_t n) {
  std::vector<Line> all = sigma;
  all.insert(all.end(), frame.begin(), frame.end());
  auto c = classify(all, ring, n);
  if (!c) throw Error(ErrorKind::PreconditionViolation, "not a simplex");
  std::vector<Line> core;
  for (auto i : c->core) {
    const Line& l = c->vertices[i];
    if (std::find(frame.begin(), frame.end(), l) == frame.end()) core.push_back(l);
  }
  return core;
}

CarryingStatus carrying_status(const std::vector<Line>& sigma, const ReductionContext& ctx) {
  auto t = minimal_additive_type(sigma, ctx);
  if (!t) return CarryingStatus::NotApplicable;
  return carries(sigma, *t, ctx) ? CarryingStatus::Carrying : CarryingStatus::NotCarrying;
}

CarryingStatus carrying_facet_status(const std::vector<Line>& sigma, const ReductionContext& ctx) {
  auto t = minimal_additive_type(sigma, ctx);
  if (!t) return CarryingStatus::NotApplicable;
  if (*t != SimplexType::DoubleTriple) return carrying_status(sigma, ctx);
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    std::vector<Line> facet;
    for (std::size_t j = 0; j < sigma.size(); ++j)
      if (j != k) facet.push_back(sigma[j]);
    auto ft = relative_type(facet, ctx.frame(), kZ, ctx.dim());
    if (ft != SimplexType::TwoAdditive && ft != SimplexType::ThreeAdditive) continue;
    if (carries(link_core(facet, ctx.frame(), kZ, ctx.dim()), *ft, ctx)) return CarryingStatus::Carrying;
  }
  return CarryingStatus::NotCarrying;
}

CarryingStatus carrying_closed_form(const std::vector<Line>& sigma, const ReductionContext& ctx) {
  auto t = minimal_additive_type(sigma, ctx);
  if (!t) return CarryingStatus::NotApplicable;
  bool carrying = false;
  switch (*t) {
    case SimplexType::TwoAdditive: carrying = closed_two_additive(sigma, ctx); break;
    case SimplexType::ThreeAdditive: carrying = closed_three_additive(sigma, ctx); break;
    case SimplexType::DoubleTriple: carrying = closed_double_triple(sigma, ctx); break;
    default: break;
  }
  return carrying ? CarryingStatus::Carrying : CarryingStatus::NotCarrying;
}

}  // namespace baa
