#include "baa/connectivity.hpp"

#include <algorithm>

#include "baa/error.hpp"

namespace baa {

const char* to_string(CertStatus s) { return s == CertStatus::Certified ? "Certified" : "Inconclusive"; }

DensityEvidence density_evidence(const SimplexTable& c) {
  DensityEvidence e;
  std::vector<std::uint32_t> verts;
  for (const auto& s : c.of_dim(0)) verts.push_back(s[0]);
  std::sort(verts.begin(), verts.end());
  e.k = verts.size();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!c.contains({verts[i], verts[j]})) ++e.missing_edges;
      for (std::size_t l = j + 1; l < verts.size(); ++l)
        if (!c.contains({verts[i], verts[j], verts[l]})) ++e.m;
    }
  const bool dense = e.missing_edges == 0 && e.k >= 3 && e.m < e.k - 2;
  e.status = dense ? CertStatus::Certified : CertStatus::Inconclusive;
  return e;
}

CertStatus simply_connected_by_density(const Complex& c) { return density_evidence(c.faces()).status; }

ConnectivityVerdict certify_n_connected(const SimplexTable& c, int n) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "connectivity level must be at least 1");
  ConnectivityVerdict v;
  v.level = n;
  v.density = density_evidence(c);
  v.homology = homology_all(c, true, nullptr, n);
  // homology_all stops at the top dimension; degrees above it vanish
  for (int d = static_cast<int>(v.homology.size()); d <= n; ++d) v.homology.push_back({d, 0, {}});
  bool vanish = true;
  for (const auto& h : v.homology)
    if (h.degree >= 1 && !h.trivial()) vanish = false;
  v.status = (v.density.status == CertStatus::Certified && vanish) ? CertStatus::Certified : CertStatus::Inconclusive;
  return v;
}

ConnectivityVerdict certify_n_connected(const Complex& c, int n) { return certify_n_connected(c.faces(), n); }

}  // namespace baa
