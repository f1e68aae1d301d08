#include "baa/steinberg.hpp"

#include <algorithm>
#include <numeric>

#include "baa/error.hpp"
#include "baa/smith.hpp"

namespace baa {

namespace {

Integer power(long base, std::size_t e) {
  Integer r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

std::size_t choose2(std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

void check_prime(long p) {
  if (!is_prime(p)) throw Error(ErrorKind::UnsupportedPrime, std::to_string(p) + " is not prime");
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

// Incremental rank over Q with fraction-free row reduction.
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t width) : width_(width) {}

  void add(std::vector<Integer> row) {
    for (const auto& [col, basis] : pivots_) {
      if (row[col] == 0) continue;
      Integer a = basis[col], b = row[col];
      for (std::size_t j = 0; j < width_; ++j) row[j] = row[j] * a - basis[j] * b;
      Integer g = 0;
      for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g > 1)
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    for (std::size_t j = 0; j < width_; ++j)
      if (row[j] != 0) {
        pivots_.emplace(j, std::move(row));
        return;
      }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<Integer>> pivots_;
};

bool mod_unit_det(const std::vector<Line>& frame, long p) {
  std::vector<std::vector<long>> rows;
  for (const auto& l : frame) rows.push_back(l.coords());
  Integer d = determinant(rows);
  Integer r = d % p;
  if (r < 0) r += p;
  return r == 1 || r == p - 1;
}

}  // namespace

Integer grassmannian_count(std::size_t k, std::size_t n, long p) {
  check_prime(p);
  if (k > n) throw Error(ErrorKind::PreconditionViolation, "k exceeds n");
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= power(p, n - i) - 1;
    den *= power(p, k - i) - 1;
  }
  return num / den;
}

Integer codim1_lower_bound(std::size_t n, long p) {
  if (p != 3 && p != 5) throw Error(ErrorKind::UnsupportedPrime, "the bound is stated for p = 3 and p = 5 only");
  if (n < 2) throw Error(ErrorKind::PreconditionViolation, "n must be at least 2");
  return power(p, choose2(n - 2)) * grassmannian_count(2, n, p) * power((p - 1) / 2, n - 2);
}

Chain Chain::operator-() const {
  Chain c = *this;
  for (auto& [k, v] : c.coefficients) v = -v;
  return c;
}

Chain boundary(const SimplexTable& faces, const Chain& c) {
  Chain out;
  out.degree = c.degree - 1;
  if (c.degree <= 0) return out;
  const auto& simplices = faces.of_dim(c.degree);
  for (const auto& [idx, coef] : c.coefficients) {
    const Simplex& s = simplices[idx];
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i) f.push_back(s[j]);
      auto fi = faces.find(f);
      if (!fi) throw Error(ErrorKind::Internal, "face missing from table");
      Integer& slot = out.coefficients[*fi];
      if (i % 2) slot -= coef;
      else slot += coef;
      if (slot == 0) out.coefficients.erase(*fi);
    }
  }
  return out;
}

Chain apartment_class(const TitsBuilding& tits, const std::vector<Line>& basis) {
  const std::size_t n = tits.n();
  const long p = tits.p();
  if (basis.size() != n) throw Error(ErrorKind::NotABasis, "need exactly n vectors");
  ModRows rows;
  for (const auto& l : basis) {
    if (l.dim() != n) throw Error(ErrorKind::DimensionMismatch, "line " + l.str());
    rows.push_back(l.coords());
  }
  if (rref_mod(rows, p).size() != n) throw Error(ErrorKind::NotABasis, "vectors do not span F_p^n");

  Chain c;
  c.degree = static_cast<int>(n) - 2;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Simplex flag;
    ModRows prefix;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      prefix.push_back(rows[perm[k]]);
      auto v = tits.span_vertex(prefix);
      if (!v) throw Error(ErrorKind::Internal, "prefix span missing from building");
      flag.push_back(*v);
    }
    // vertices are ordered by dimension, so the flag is already sorted
    auto idx = tits.faces().find(flag);
    if (!idx) throw Error(ErrorKind::Internal, "flag missing from building");
    Integer& slot = c.coefficients[*idx];
    slot += permutation_sign(perm);
    if (slot == 0) c.coefficients.erase(*idx);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

std::size_t steinberg_rank(std::size_t n, long p, std::size_t max_vertices) {
  check_prime(p);
  if (n < 2) throw Error(ErrorKind::PreconditionViolation, "n must be at least 2");
  TitsBuilding t = build_tits(n, p, false, max_vertices);
  HomologyGroup h = homology(t.faces(), static_cast<int>(n) - 2, true);
  if (!h.torsion.empty()) throw Error(ErrorKind::Internal, "torsion in the top homology of the building");
  return h.rank;
}

std::size_t apartment_span_rank(const TitsBuilding& tits, std::size_t stop_at) {
  const std::size_t n = tits.n();
  const long p = tits.p();
  const int d = static_cast<int>(n) - 2;
  const std::size_t width = tits.faces().size(d);
  RankAccumulator acc(width);
  std::vector<Line> lines = all_lines(n, p);

  // n-subsets of lines in lexicographic order
  std::vector<std::size_t> pick(n);
  std::iota(pick.begin(), pick.end(), 0);
  if (lines.size() < n) return 0;
  for (;;) {
    std::vector<Line> frame;
    for (auto i : pick) frame.push_back(lines[i]);
    if (mod_unit_det(frame, p)) {
      Chain c = apartment_class(tits, frame);
      std::vector<Integer> row(width, 0);
      for (const auto& [k, v] : c.coefficients) row[k] = v;
      acc.add(std::move(row));
      if (stop_at && acc.rank() >= stop_at) break;
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == lines.size() - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return acc.rank();
}

bool SteinbergReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

SteinbergReport resolution_report(std::size_t n, long p, const BuildLimits& limits) {
  if (p != 3 && p != 5) throw Error(ErrorKind::UnsupportedPrime, "the report covers p = 3 and p = 5");
  if (n < 2) throw Error(ErrorKind::PreconditionViolation, "n must be at least 2");
  SteinbergReport rep;
  rep.n = n;
  rep.p = p;
  const int N = static_cast<int>(n);

  ComplexPair pair = build_pair(n, p, limits);
  const Complex& total = pair.total;
  const Complex& sub = pair.sub;

  // (a) relative chain groups and their simplex types
  bool low_vanish = true, types_ok = true;
  std::string low_detail, type_detail, type_summary;
  for (int d = 0; d <= total.dimension(); ++d) {
    auto tc = total.type_counts(d);
    auto sc = d <= sub.dimension() ? sub.type_counts(d) : std::array<std::size_t, 5>{};
    std::array<std::size_t, 5> rel{};
    std::size_t sum = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      rel[i] = tc[i] - sc[i];
      sum += rel[i];
    }
    rep.relative_types[d] = rel;
    if (d <= N - 2) {
      if (sum) low_vanish = false;
      low_detail += (low_detail.empty() ? "ranks " : ", ") + std::to_string(sum);
    }
    if (d >= N - 1 && d <= N + 1) {
      std::string part;
      for (std::size_t i = 0; i < 5; ++i)
        if (rel[i]) part += (part.empty() ? "" : ", ") + std::string(to_string(static_cast<SimplexType>(i))) + " " + std::to_string(rel[i]);
      type_summary += (type_summary.empty() ? "" : "; ") + ("degree " + std::to_string(d) + ": " + (part.empty() ? "none" : part));
    }
    auto only = [&](std::initializer_list<SimplexType> allowed) {
      for (std::size_t i = 0; i < 5; ++i) {
        bool ok = std::find(allowed.begin(), allowed.end(), static_cast<SimplexType>(i)) != allowed.end();
        if (!ok && rel[i]) return false;
      }
      return true;
    };
    bool ok = true;
    if (d == N - 1) ok = only({SimplexType::Standard});
    else if (d == N) ok = only({SimplexType::TwoAdditive, SimplexType::ThreeAdditive});
    else if (d == N + 1) ok = only({SimplexType::DoubleTriple, SimplexType::DoubleDouble});
    else if (d > N + 1) ok = sum == 0;
    if (!ok) {
      types_ok = false;
      type_detail += "unexpected types in degree " + std::to_string(d) + "; ";
    }
  }
  for (int d = N - 1; d <= N + 1; ++d) {
    std::size_t sum = 0;
    if (rep.relative_types.count(d))
      for (auto x : rep.relative_types[d]) sum += x;
    rep.relative_dims.push_back(sum);
  }
  rep.checks.push_back({"relative_chains_vanish_below_n_minus_1", low_vanish, low_detail});
  rep.checks.push_back({"relative_generators_have_expected_types", types_ok, type_detail + type_summary});

  // (b) composite relative boundaries
  bool composite_zero = true;
  std::size_t composites = 0;
  for (int d = 1; d <= total.dimension(); ++d) {
    IntMatrix outer = boundary_matrix(total, d, &sub);
    IntMatrix inner = boundary_matrix(total, d + 1, &sub);
    if (outer.cols() == 0 || inner.cols() == 0) continue;
    ++composites;
    if (!(outer * inner).is_zero()) composite_zero = false;
  }
  rep.checks.push_back({"relative_boundary_composites_vanish", composite_zero,
                        std::to_string(composites) + " nonempty composites"});

  // (c) H_n of the pair against the bound
  rep.pair_homology = homology_all(total, false, &sub, N + 1);
  rep.h_n_pair = rep.pair_homology[n];
  rep.bound = codim1_lower_bound(n, p);
  rep.checks.push_back({"pair_homology_rank_meets_bound", Integer(static_cast<unsigned long>(rep.h_n_pair.rank)) >= rep.bound,
                        "rank " + std::to_string(rep.h_n_pair.rank) + " vs bound " + rep.bound.get_str()});

  // (d) low-degree reduced homology of the total complex
  rep.total_reduced_homology = homology_all(total, true, nullptr, N + 1);
  bool low_homology = true;
  for (int i = 0; i <= N - 1; ++i)
    if (!rep.total_reduced_homology[static_cast<std::size_t>(i)].trivial()) low_homology = false;
  rep.checks.push_back({"total_reduced_homology_vanishes_below_n", low_homology,
                        "degrees 0.." + std::to_string(N - 1)});

  // (e) apartment classes span the top homology of the building
  const std::size_t expected = power(p, choose2(n)).get_ui();
  TitsBuilding tits = build_tits(n, p, false);
  HomologyGroup top = homology(tits.faces(), N - 2, true);
  rep.steinberg_rank = top.rank;
  rep.apartment_rank = apartment_span_rank(tits, expected);
  rep.checks.push_back({"building_top_homology_rank", top.rank == expected && top.torsion.empty(),
                        "rank " + std::to_string(top.rank) + ", expected " + std::to_string(expected)});
  rep.checks.push_back({"apartment_classes_span_top_homology", rep.apartment_rank == expected,
                        "span rank " + std::to_string(rep.apartment_rank)});

  rep.not_verified = {
      "exactness over Z of the partial resolution of the Steinberg module (only its F_p shadow is checked)",
      "vanishing of the rational cohomology of SL_n(Z) in degree C(n,2)-2 (not decidable at finite scale)",
  };
  return rep;
}

}  // namespace baa
