#include "baa/serialize.hpp"

#include <algorithm>

#include "baa/error.hpp"

namespace baa {

namespace {

Json tuple_json(const IntervalTuple& t) {
  Json a = Json::array();
  for (long x : t.r) a.push_back(x);
  return a;
}

Json type_counts_json(const std::array<std::size_t, 5>& counts) {
  Json o = Json::object();
  for (auto t : kAllSimplexTypes) o[to_string(t)] = counts[static_cast<std::size_t>(t)];
  return o;
}

Line parse_line(const Json& j, Ring ring, std::size_t n) {
  auto coords = j.get<std::vector<long>>();
  if (coords.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(coords.size()));
  Line l = canonical_line(coords, ring);
  return l;
}

}  // namespace

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json complex_json(const Complex& c) {
  Json j;
  if (c.ring().is_integers()) j["ring"] = "Z";
  else j["ring"] = Json{{"Fp", c.ring().p()}};
  j["ambient_dim"] = c.ambient_dim();
  j["frame"] = Json::array();
  for (const auto& l : c.frame()) j["frame"].push_back(l.coords());
  j["vertices"] = Json::array();
  for (const auto& l : c.vertices()) j["vertices"].push_back(l.coords());
  Json s = Json::object();
  for (int d = 0; d <= c.dimension(); ++d) {
    std::vector<std::size_t> order(c.count(d));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const auto& simp = c.simplices(d);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return simp[a] < simp[b]; });
    Json list = Json::array();
    for (auto i : order) list.push_back(Json{{"v", simp[i]}, {"type", to_string(c.type(d, i))}});
    s[std::to_string(d)] = std::move(list);
  }
  j["simplices"] = std::move(s);
  return j;
}

std::string complex_to_string(const Complex& c) { return complex_json(c).dump() + "\n"; }

Complex complex_from_json(const Json& j) {
  try {
    Ring ring = Ring::integers();
    const Json& r = j.at("ring");
    if (r.is_string()) {
      if (r.get<std::string>() != "Z") throw Error(ErrorKind::PreconditionViolation, "unknown ring");
    } else {
      ring = Ring::prime_field(r.at("Fp").get<long>());
    }
    const std::size_t n = j.at("ambient_dim").get<std::size_t>();
    std::vector<Line> frame, verts;
    for (const auto& v : j.at("frame")) frame.push_back(parse_line(v, ring, n));
    for (const auto& v : j.at("vertices")) verts.push_back(parse_line(v, ring, n));
    {
      auto sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::PreconditionViolation, "repeated vertex");
    }
    Complex c(ring, n, verts, frame);
    const Json& s = j.at("simplices");
    for (int d = 0;; ++d) {
      auto it = s.find(std::to_string(d));
      if (it == s.end()) break;
      for (const auto& entry : *it) {
        Simplex sx = entry.at("v").get<Simplex>();
        if (sx.size() != static_cast<std::size_t>(d) + 1 || !std::is_sorted(sx.begin(), sx.end()) ||
            std::adjacent_find(sx.begin(), sx.end()) != sx.end())
          throw Error(ErrorKind::PreconditionViolation, "simplex indices must be sorted and distinct");
        for (auto v : sx)
          if (v >= verts.size()) throw Error(ErrorKind::PreconditionViolation, "vertex index out of range");
        auto tag = simplex_type_from_string(entry.at("type").get<std::string>());
        if (!tag) throw Error(ErrorKind::PreconditionViolation, "unknown simplex type");
        std::vector<Line> ls = c.lines(sx);
        ls.insert(ls.end(), frame.begin(), frame.end());
        if (simplex_type(ls, ring, n) != tag)
          throw Error(ErrorKind::PreconditionViolation, "tag does not match the vertices");
        c.add_simplex(sx, *tag);
      }
    }
    if (s.size() != static_cast<std::size_t>(c.dimension() + 1))
      throw Error(ErrorKind::PreconditionViolation, "simplex dimensions must be consecutive from 0");
    if (!c.is_downward_closed()) throw Error(ErrorKind::NotASubcomplex, "simplex set is not downward closed");
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::PreconditionViolation, std::string("malformed complex: ") + e.what());
  }
}

Complex complex_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::PreconditionViolation, std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json(j);
}

Json homology_json(const HomologyGroup& h) {
  Json j;
  j["degree"] = h.degree;
  j["rank"] = h.rank;
  j["torsion"] = Json::array();
  for (const auto& t : h.torsion) j["torsion"].push_back(integer_json(t));
  return j;
}

Json certificate_json(const IntervalTuple& t, const ConnectivityVerdict& v,
                      const std::optional<IntervalTuple>& requested) {
  Json j;
  j["tuple"] = tuple_json(t);
  if (requested) {
    j["requested_tuple"] = tuple_json(*requested);
    j["note"] = "requested tuple was replaced by its canonical representative";
  }
  j["k"] = v.density.k;
  j["m"] = v.density.m;
  j["homology"] = Json::array();
  for (const auto& h : v.homology) j["homology"].push_back(homology_json(h));
  j["verdict"] = to_string(v.status);
  return j;
}

Json steinberg_report_json(const SteinbergReport& r) {
  Json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["relative_dims"] = r.relative_dims;
  Json types = Json::object();
  for (const auto& [d, counts] : r.relative_types) types[std::to_string(d)] = type_counts_json(counts);
  j["relative_types"] = std::move(types);
  j["h_n_pair"] = homology_json(r.h_n_pair);
  j["h_n_pair_note"] = "exact group computed here; only the lower bound has a closed form";
  j["pair_homology"] = Json::array();
  for (const auto& h : r.pair_homology) j["pair_homology"].push_back(homology_json(h));
  j["total_reduced_homology"] = Json::array();
  for (const auto& h : r.total_reduced_homology) j["total_reduced_homology"].push_back(homology_json(h));
  j["bound"] = integer_json(r.bound);
  j["steinberg_rank"] = r.steinberg_rank;
  j["apartment_rank"] = r.apartment_rank;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) j["checks"].push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["not_verified"] = r.not_verified;
  j["passed"] = r.passed();
  return j;
}

Json carrying_report_json(const CarryingTestReport& r, std::size_t samples, std::uint64_t seed) {
  static const char* names[3] = {"TwoAdditive", "ThreeAdditive", "DoubleTriple"};
  Json j;
  j["samples_per_type"] = samples;
  j["seed"] = seed;
  j["types"] = Json::array();
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& t = r.tally[k];
    j["types"].push_back(Json{{"type", names[k]},
                              {"samples", t.samples},
                              {"carrying", t.carrying},
                              {"disagreements", t.disagreements},
                              {"facet_variant_disagreements", t.facet_disagreements}});
  }
  j["failures"] = r.failures;
  j["passed"] = r.ok();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace baa
