#include "baa/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "baa/error.hpp"

namespace baa {

namespace {

const Ring kZ = Ring::integers();

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool partial_basis(const std::vector<std::vector<long>>& vs, std::size_t N) {
  std::vector<Line> ls;
  for (const auto& v : vs) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    if (g != 1) return false;
    ls.push_back(canonical_line(v, kZ));
  }
  return is_partial_basis(ls, kZ, N);
}

std::string describe(const MinimalSample& s, CarryingStatus semantic, CarryingStatus closed) {
  std::ostringstream os;
  os << to_string(s.type) << " w=(";
  for (std::size_t i = 0; i < s.ctx.w_bar().size(); ++i) os << (i ? "," : "") << s.ctx.w_bar()[i];
  os << ") m=" << s.ctx.m() << " sigma={";
  for (std::size_t i = 0; i < s.sigma.size(); ++i) os << (i ? " " : "") << s.sigma[i].str();
  os << "} image=" << to_string(semantic) << " closed=" << to_string(closed);
  return os.str();
}

}  // namespace

std::optional<RandomFrame> sample_frame(std::mt19937_64& rng, const SamplerBounds& b) {
  RandomFrame fr;
  fr.m = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(b.max_m)));
  const std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<long>(b.min_n), static_cast<long>(b.max_n)));
  const std::size_t N = fr.m + n;
  const long R = uniform(rng, 1, b.max_R);
  std::vector<std::vector<long>> basis;
  for (std::size_t i = 0; i < fr.m; ++i) {
    std::vector<long> e(N, 0);
    e[i] = 1;
    basis.push_back(e);
  }
  for (int tries = 0;; ++tries) {
    if (tries == 50) return std::nullopt;
    std::vector<long> w(N);
    for (std::size_t i = 0; i + 1 < N; ++i) w[i] = uniform(rng, -2 * R, 2 * R);
    w[N - 1] = R;
    basis.push_back(w);
    if (partial_basis(basis, N)) {
      fr.w_bar = w;
      break;
    }
    basis.pop_back();
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (int tries = 0;; ++tries) {
      if (tries == 50) return std::nullopt;
      std::vector<long> f(N);
      for (auto& x : f) x = uniform(rng, -2 * R, 2 * R);
      basis.push_back(f);
      if (partial_basis(basis, N)) {
        fr.f.push_back(f);
        break;
      }
      basis.pop_back();
    }
  }
  return fr;
}

std::optional<MinimalSample> sample_minimal(std::mt19937_64& rng, SimplexType type, const SamplerBounds& b) {
  auto fr = sample_frame(rng, b);
  if (!fr) return std::nullopt;
  const std::size_t N = fr->w_bar.size();
  // pool: e_1..e_m, w, f_j; frame members are skipped when forming sigma
  std::vector<std::vector<long>> pool;
  std::vector<char> in_frame;
  for (std::size_t i = 0; i < fr->m; ++i) {
    std::vector<long> e(N, 0);
    e[i] = 1;
    pool.push_back(e);
    in_frame.push_back(1);
  }
  pool.push_back(fr->w_bar);
  in_frame.push_back(1);
  for (const auto& f : fr->f) {
    pool.push_back(f);
    in_frame.push_back(0);
  }

  std::size_t picks = 0;
  switch (type) {
    case SimplexType::TwoAdditive: picks = 2; break;
    case SimplexType::ThreeAdditive: picks = 3; break;
    case SimplexType::DoubleTriple: picks = 3; break;
    default: throw Error(ErrorKind::PreconditionViolation, "sampler supports 2-additive, 3-additive, double-triple");
  }
  if (pool.size() < picks) return std::nullopt;
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(picks);

  auto sign = [&] { return uniform(rng, 0, 1) ? 1L : -1L; };
  auto combo = [&](std::initializer_list<std::size_t> which) {
    std::vector<long> v(N, 0);
    for (auto k : which) {
      long s = sign();
      for (std::size_t j = 0; j < N; ++j) v[j] += s * pool[idx[k]][j];
    }
    return v;
  };
  std::vector<std::vector<long>> extra;
  if (type == SimplexType::TwoAdditive) extra.push_back(combo({0, 1}));
  else if (type == SimplexType::ThreeAdditive) extra.push_back(combo({0, 1, 2}));
  else {
    // x = +-p0 +-p1, y = +-p0 +-p2
    extra.push_back(combo({0, 1}));
    extra.push_back(combo({0, 2}));
  }

  MinimalSample s{ReductionContext(fr->w_bar, fr->m), {}, type};
  for (auto k : idx)
    if (!in_frame[k]) s.sigma.push_back(canonical_line(pool[k], kZ));
  for (const auto& v : extra) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x);
    if (g != 1) return std::nullopt;
    s.sigma.push_back(canonical_line(v, kZ));
  }
  if (s.sigma.empty()) return std::nullopt;
  std::sort(s.sigma.begin(), s.sigma.end());
  if (std::adjacent_find(s.sigma.begin(), s.sigma.end()) != s.sigma.end()) return std::nullopt;
  for (const auto& v : s.sigma)
    if (span_contains(s.ctx.frame(), v, kZ)) return std::nullopt;
  if (!is_minimal(s.sigma, s.ctx.frame(), type, kZ, N)) return std::nullopt;
  std::shuffle(s.sigma.begin(), s.sigma.end(), rng);
  return s;
}

MinimalSample draw_minimal(std::mt19937_64& rng, SimplexType type, const SamplerBounds& b) {
  for (int i = 0; i < 100000; ++i)
    if (auto s = sample_minimal(rng, type, b)) return std::move(*s);
  throw Error(ErrorKind::Internal, "sampler failed to produce a minimal simplex");
}

bool CarryingTestReport::ok() const {
  return std::all_of(tally.begin(), tally.end(), [](const CarryingTally& t) { return t.disagreements == 0; });
}

CarryingTestReport run_carrying_test(std::size_t samples_per_type, std::uint64_t seed) {
  CarryingTestReport rep;
  std::mt19937_64 rng(seed);
  const SimplexType types[3] = {SimplexType::TwoAdditive, SimplexType::ThreeAdditive, SimplexType::DoubleTriple};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t i = 0; i < samples_per_type; ++i) {
      auto s = draw_minimal(rng, types[k]);
      auto semantic = carrying_status(s.sigma, s.ctx);
      auto closed = carrying_closed_form(s.sigma, s.ctx);
      auto& t = rep.tally[k];
      ++t.samples;
      if (semantic == CarryingStatus::Carrying) ++t.carrying;
      if (carrying_facet_status(s.sigma, s.ctx) != closed) ++t.facet_disagreements;
      if (semantic != closed) {
        ++t.disagreements;
        if (rep.failures.size() < 10) rep.failures.push_back(describe(s, semantic, closed));
      }
    }
  }
  return rep;
}

}  // namespace baa
