#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "baa/cli.hpp"

namespace baa {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("baa_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, CertificateName) { EXPECT_EQ(certificate_name({-1, -1, -1, -3, -5, -3}), "q_m1_m1_m1_m3_m5_m3.json"); }

TEST(Cli, Table1) {
  TempDir dir;
  CliResult r = run_cli({"table1", "--out", dir.file("tuples.csv")});
  EXPECT_EQ(r.code, 0);
  const std::string csv = slurp(dir.file("tuples.csv"));
  EXPECT_EQ(count_lines(csv), 48u);  // header and 47 canonical tuples
  EXPECT_EQ(run_cli({"table1"}).out, csv);
}

TEST(Cli, QCheckAllWritesCertificates) {
  TempDir dir;
  CliResult r = run_cli({"q-check", "--all", "--level", "3", "--out", dir.path().string(), "--jobs", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.path())) files += e.path().extension() == ".json";
  EXPECT_EQ(files, 47u);
  EXPECT_NE(slurp(dir.file("q_m1_m1_m1_m3_m5_m3.json")).find("Certified"), std::string::npos);
}

TEST(Cli, QCheckIsDeterministicAcrossJobCounts) {
  EXPECT_EQ(run_cli({"q-check", "--all", "--jobs", "1"}).out, run_cli({"q-check", "--all", "--jobs", "3"}).out);
}

TEST(Cli, QCheckCanonicalizes) {
  CliResult r = run_cli({"q-check", "--tuple", "1,1,1,3,5,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("canonical form of 1,1,1,3,5,3"), std::string::npos);
}

TEST(Cli, QCheckInfeasible) { EXPECT_EQ(run_cli({"q-check", "--tuple", "0,0,0,1,0,0"}).code, 2); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"q-check"}).code, 2);
  EXPECT_EQ(run_cli({"q-check", "--tuple", "1,2"}).code, 2);
  EXPECT_EQ(run_cli({"steinberg-report", "--n", "3", "--p", "7"}).code, 2);
  EXPECT_EQ(run_cli({"homology", "--in", "/nonexistent/complex.json"}).code, 2);
}

TEST(Cli, BuildAndHomology) {
  TempDir dir;
  ASSERT_EQ(run_cli({"build", "--family", "BAA", "--n", "2", "--p", "7", "--out", dir.file("c.json")}).code, 0);
  CliResult h = run_cli({"homology", "--in", dir.file("c.json")});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("\"rank\": 6"), std::string::npos) << h.out;

  CliResult d = run_cli({"homology", "--in", dir.file("c.json"), "--degree", "2"});
  EXPECT_NE(d.out.find("\"degree\": 2"), std::string::npos);

  const std::string first = slurp(dir.file("c.json"));
  ASSERT_EQ(run_cli({"build", "--family", "BAA", "--n", "2", "--p", "7", "--out", dir.file("c.json")}).code, 0);
  EXPECT_EQ(slurp(dir.file("c.json")), first);
}

TEST(Cli, RelativeHomology) {
  TempDir dir;
  ASSERT_EQ(run_cli({"build", "--family", "BAA", "--n", "3", "--p", "3", "--out", dir.file("t.json")}).code, 0);
  ASSERT_EQ(run_cli({"build", "--family", "BAA", "--n", "3", "--p", "3", "--primed", "--out", dir.file("s.json")}).code, 0);
  CliResult r = run_cli({"homology", "--in", dir.file("t.json"), "--rel", dir.file("s.json"), "--degree", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"rank\": 26"), std::string::npos) << r.out;
}

TEST(Cli, BuildQ) {
  CliResult r = run_cli({"build", "--q", "0,0,0,0,0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"ambient_dim\":4"), std::string::npos);
}

TEST(Cli, SteinbergReport) {
  CliResult r = run_cli({"steinberg-report", "--n", "3", "--p", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"h_n_pair\""), std::string::npos);
}

TEST(Cli, CarryingTestReportsDisagreement) {
  CliResult r = run_cli({"carrying-test", "--samples", "300", "--seed", "7"});
  EXPECT_NE(r.out.find("\"samples_per_type\": 300"), std::string::npos);
  EXPECT_TRUE(r.code == 0 || r.code == 1);
}

}  // namespace
}  // namespace baa
