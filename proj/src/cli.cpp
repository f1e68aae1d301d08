#include "baa/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "baa/error.hpp"
#include "baa/qcomplex.hpp"
#include "baa/serialize.hpp"

namespace baa {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) out << text;
  else write_file(path, text);
}

IntervalTuple tuple_arg(const std::string& s) {
  try {
    return parse_tuple(s);
  } catch (const Error& e) {
    throw UsageError(std::string("bad tuple: ") + e.what());
  }
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

struct QResult {
  IntervalTuple tuple;
  std::optional<IntervalTuple> requested;
  ConnectivityVerdict verdict;
  std::size_t vertices = 0;
};

int cmd_table1(const std::string& out_path, std::ostream& out) {
  emit(out_path, tuples_csv(canonical_tuples()), out);
  return 0;
}

int cmd_q_check(bool all, const std::string& tuple, int level, const std::string& dir, unsigned jobs,
                std::ostream& out) {
  if (all == !tuple.empty()) throw UsageError("q-check needs exactly one of --all and --tuple");
  if (level < 1) throw UsageError("--level must be at least 1");
  std::vector<QResult> work;
  if (all) {
    for (const auto& t : canonical_tuples()) work.push_back({t, std::nullopt, {}, 0});
  } else {
    IntervalTuple t = tuple_arg(tuple);
    if (!is_feasible(t)) throw Error(ErrorKind::InfeasibleTuple, t.str() + " is not feasible");
    IntervalTuple c = canonicalize(t);
    work.push_back({c, c == t ? std::nullopt : std::optional<IntervalTuple>(t), {}, 0});
  }

  // each unit is independent; results land in their own slot
  std::atomic<std::size_t> next{0};
  std::vector<std::string> failures(work.size());
  auto worker = [&] {
    for (std::size_t i; (i = next++) < work.size();) {
      try {
        Complex q = build_q(work[i].tuple);
        work[i].vertices = q.vertices().size();
        work[i].verdict = certify_n_connected(q, level);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const auto& r = work[i];
    if (!failures[i].empty()) throw std::runtime_error(failures[i]);
    if (!dir.empty())
      write_file((fs::path(dir) / certificate_name(r.tuple.r)).string(),
                 dump(certificate_json(r.tuple, r.verdict, r.requested)));
    out << r.tuple.str() << " vertices=" << r.vertices << " k=" << r.verdict.density.k
        << " m=" << r.verdict.density.m << " " << to_string(r.verdict.status);
    if (r.requested) out << " (canonical form of " << r.requested->str() << ")";
    out << "\n";
    if (r.verdict.status != CertStatus::Certified) code = 1;
  }
  return code;
}

int cmd_homology(const std::string& in, int degree, bool degree_given, bool reduced, const std::string& rel,
                 std::ostream& out) {
  Complex c = complex_from_string(read_file(in));
  std::optional<Complex> sub;
  if (!rel.empty()) sub = complex_from_string(read_file(rel));
  const Complex* relp = sub ? &*sub : nullptr;
  Json j = Json::array();
  if (degree_given) {
    j.push_back(homology_json(homology(c, degree, reduced, relp)));
  } else {
    for (const auto& h : homology_all(c, reduced, relp)) j.push_back(homology_json(h));
  }
  out << dump(j);
  return 0;
}

int cmd_steinberg(std::size_t n, long p, const std::string& out_path, std::ostream& out) {
  SteinbergReport r = resolution_report(n, p);
  emit(out_path, dump(steinberg_report_json(r)), out);
  return r.passed() ? 0 : 1;
}

int cmd_carrying(std::size_t samples, std::uint64_t seed, std::ostream& out) {
  CarryingTestReport r = run_carrying_test(samples, seed);
  out << dump(carrying_report_json(r, samples, seed));
  return r.ok() ? 0 : 1;
}

int cmd_build(const std::string& family, std::size_t n, long p, bool primed, const std::string& q,
              const std::string& out_path, std::ostream& out) {
  if (family.empty() == q.empty()) throw UsageError("build needs exactly one of --family and --q");
  if (!q.empty()) {
    IntervalTuple t = tuple_arg(q);
    emit(out_path, complex_to_string(build_q(t)), out);
    return 0;
  }
  Family f;
  if (family == "B") f = Family::B;
  else if (family == "BA") f = Family::BA;
  else if (family == "BAA") f = Family::BAA;
  else throw UsageError("--family must be B, BA or BAA");
  if (n == 0 || p == 0) throw UsageError("--family needs --n and --p");
  emit(out_path, complex_to_string(build_family(n, p, f, primed)), out);
  return 0;
}

}  // namespace

std::string certificate_name(const std::array<long, 6>& r) {
  std::string s = "q";
  for (long x : r) s += "_" + (x < 0 ? "m" + std::to_string(-x) : std::to_string(x));
  return s + ".json";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complexes of augmented partial bases: builds, homology and certificates"};
  app.name("baa");
  app.require_subcommand(1);

  std::string out_path, tuple, dir, in, rel, family, q;
  bool all = false, reduced = false, primed = false;
  int level = 3, degree = 0;
  unsigned jobs = default_jobs();
  std::size_t n = 0, samples = 10000;
  long p = 0;
  std::uint64_t seed = 1;

  auto* table1 = app.add_subcommand("table1", "List the canonical interval tuples as CSV");
  table1->add_option("--out", out_path, "Output file (default: stdout)");

  auto* qcheck = app.add_subcommand("q-check", "Certify connectivity of Q complexes");
  qcheck->add_flag("--all", all, "Check every canonical tuple");
  qcheck->add_option("--tuple", tuple, "One tuple r1,r2,r3,r12,r123,r13");
  qcheck->add_option("--level", level, "Connectivity level")->capture_default_str();
  qcheck->add_option("--out", dir, "Directory for certificate files");
  qcheck->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* hom = app.add_subcommand("homology", "Integral homology of a serialized complex");
  hom->add_option("--in", in, "Complex JSON")->required();
  auto* degree_opt = hom->add_option("--degree", degree, "Single degree (default: all)");
  hom->add_flag("--reduced", reduced, "Reduced homology");
  hom->add_option("--rel", rel, "Subcomplex JSON for relative homology");

  auto* st = app.add_subcommand("steinberg-report", "Finite checks of the Steinberg module resolution");
  st->add_option("--n", n, "Rank")->required();
  st->add_option("--p", p, "Prime (3 or 5)")->required();
  st->add_option("--out", out_path, "Output file (default: stdout)");

  auto* carry = app.add_subcommand("carrying-test", "Closed-form carrying test against the definition");
  carry->add_option("--samples", samples, "Samples per simplex type")->capture_default_str();
  carry->add_option("--seed", seed, "Random seed")->capture_default_str();

  auto* build = app.add_subcommand("build", "Build a complex and write it as JSON");
  build->add_option("--family", family, "B, BA or BAA");
  build->add_option("--n", n, "Rank");
  build->add_option("--p", p, "Odd prime");
  build->add_flag("--primed", primed, "Drop simplices spanning F_p^n");
  build->add_option("--q", q, "Interval tuple of a Q complex");
  build->add_option("--out", out_path, "Output file (default: stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*table1) return cmd_table1(out_path, out);
    if (*qcheck) return cmd_q_check(all, tuple, level, dir, jobs, out);
    if (*hom) return cmd_homology(in, degree, degree_opt->count() > 0, reduced, rel, out);
    if (*st) return cmd_steinberg(n, p, out_path, out);
    if (*carry) return cmd_carrying(samples, seed, out);
    if (*build) return cmd_build(family, n, p, primed, q, out_path, out);
  } catch (const UsageError& e) {
    err << "baa: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // bad input is a usage problem; anything else failed while running
    err << "baa: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::NotPrimitive:
      case ErrorKind::DimensionMismatch:
      case ErrorKind::RingMismatch:
      case ErrorKind::InfeasibleTuple:
      case ErrorKind::UnsupportedPrime:
      case ErrorKind::NotASubcomplex:
      case ErrorKind::PreconditionViolation: return 2;
      default: return 1;
    }
  } catch (const std::exception& e) {
    err << "baa: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace baa
