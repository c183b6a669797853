#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"
#include "solution_io.hpp"
#include "triadic/errors.hpp"

namespace {

namespace fs = std::filesystem;
using namespace triadic::cli;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::initializer_list<std::string> args) {
  std::vector<std::string> storage{"triadic"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream(p, std::ios::binary) << text;
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("triadic-cli-" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, EnumerateSummaryLines) {
  EXPECT_EQ(cli({"enumerate", "--dispersion", "sphere", "--domain", "50"}).out,
            "solutions=42 domain=50 dispersion=sphere\n");
  EXPECT_EQ(cli({"enumerate", "--dispersion", "sphere", "--domain", "1"}).out,
            "solutions=0 domain=1 dispersion=sphere\n");
  EXPECT_EQ(cli({"enumerate", "--dispersion", "channel", "--domain", "50"}).out,
            "solutions=15 domain=50 dispersion=channel\n");
}

TEST_F(Cli, JsonAndCsvRoundTrip) {
  ASSERT_EQ(cli({"enumerate", "--domain", "120", "--out", path("s.json")}).code, kExitOk);
  ASSERT_EQ(cli({"enumerate", "--domain", "120", "--format", "csv", "--out", path("s.csv")}).code,
            kExitOk);
  const auto from_json = read_solution(slurp(path("s.json")));
  const auto from_csv = read_solution(slurp(path("s.csv")));
  const auto direct = triadic::enumerate(triadic::DispersionSpec::sphere(), 120);
  EXPECT_EQ(from_json, direct);
  EXPECT_EQ(from_csv, direct);
  EXPECT_EQ(solution_json(from_json), slurp(path("s.json")));
  EXPECT_EQ(solution_csv(from_csv), slurp(path("s.csv")));

  const auto doc = nlohmann::json::parse(slurp(path("s.json")));
  EXPECT_EQ(doc["meta"]["dispersion"], "sphere");
  EXPECT_EQ(doc["meta"]["domain"], 120);
  EXPECT_EQ(doc["meta"]["count"], direct.triads.size());
  EXPECT_TRUE(doc["meta"]["generator_version"].is_string());
  EXPECT_EQ(doc["triads"][0].size(), 6u);
}

TEST_F(Cli, CustomSpecRoundTrip) {
  spit(path("spec.json"),
       R"({"name":"cubic","beta":"n^3+n+1","flags":{"m_le_n":true,"distinct_n":true}})");
  const auto r = cli({"enumerate", "--dispersion", "spec:" + path("spec.json"), "--domain", "60",
                      "--out", path("c.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto set = read_solution(slurp(path("c.json")));
  EXPECT_EQ(set.spec.name(), "cubic");
  EXPECT_EQ(set, triadic::enumerate(set.spec, 60));
}

TEST_F(Cli, CheckAgreesAndRefusesLargeDomains) {
  const auto ok = cli({"check", "--dispersion", "channel", "--domain", "50"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "check dispersion=channel domain=50 fast=15 oracle=15 differences=0\n");
  EXPECT_EQ(cli({"check", "--dispersion", "sphere", "--domain", "50"}).code, kExitOk);
  const auto big = cli({"check", "--domain", "5000"});
  EXPECT_EQ(big.code, kExitCapacity);
  EXPECT_NE(big.err.find("capped at 100"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"enumerate"}).code, kExitUsage);
  EXPECT_EQ(cli({"enumerate", "--domain", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"enumerate", "--domain", "10", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"enumerate", "--domain", "10", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"enumerate", "--domain", "10", "--dispersion", "torus"}).code, kExitUsage);
  EXPECT_EQ(cli({"topology", "--domain", "10", "--format", "svg"}).code, kExitUsage);
  EXPECT_EQ(cli({"topology", "--domain", "10", "--multiplicity", "role"}).code, kExitUsage);
  EXPECT_EQ(cli({"ode", "--domain", "10", "--format", "latex"}).code, kExitUsage);
  EXPECT_EQ(cli({"stats", "--domain", "10", "--radii", "5", "--shape", "hexagon"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"--version"}).code, kExitOk);
}

TEST_F(Cli, InvalidSpecFile) {
  spit(path("bad.json"), R"({"beta":"n^2-4n+10","flags":{}})");
  EXPECT_EQ(cli({"enumerate", "--dispersion", "spec:" + path("bad.json"), "--domain", "10"}).code,
            kExitUsage);
  spit(path("junk.json"), "{not json");
  EXPECT_EQ(cli({"enumerate", "--dispersion", "spec:" + path("junk.json"), "--domain", "10"}).code,
            kExitUsage);
  EXPECT_EQ(cli({"enumerate", "--dispersion", "spec:" + path("missing.json"), "--domain", "10"}).code,
            kExitIo);
}

TEST_F(Cli, IoAndCapacityErrors) {
  EXPECT_EQ(cli({"enumerate", "--domain", "10", "--out", path("no/such/dir/x.json")}).code, kExitIo);
  EXPECT_EQ(cli({"topology", "--input", path("absent.csv")}).code, kExitIo);
  EXPECT_EQ(cli({"enumerate", "--domain", "3000000000"}).code, kExitCapacity);
  spit(path("steep.json"), R"({"beta":"n^9","flags":{"m_le_n":true,"distinct_n":true}})");
  EXPECT_EQ(cli({"enumerate", "--dispersion", "spec:" + path("steep.json"), "--domain", "500"}).code,
            kExitCapacity);
}

TEST_F(Cli, ParseErrorsCarryPositions) {
  spit(path("bad.csv"), "# dispersion=sphere domain=50\nn1,m1,n2,m2,n3,m3\n12,4,14,5,13,9\n12,4,14,x,13,9\n");
  const auto r = cli({"topology", "--input", path("bad.csv")});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("column 9"), std::string::npos) << r.err;

  try {
    read_solution("{\"meta\":{\"dispersion\":\"sphere\"},\n\"triads\":[\n[12,4,14,5,13,9],\n[12,4,14,5,13,10]\n]}");
    FAIL() << "expected a parse error";
  } catch (const triadic::ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 1u);
  }
  EXPECT_THROW(read_solution("{\"meta\":{\"dispersion\":\"sphere\"},\"triads\":[[1,2,3]]}"),
               triadic::ParseError);
  EXPECT_THROW(read_solution("{\"meta\":{\"dispersion\":\"sphere\"},\"triads\":[[12,4,14,5,13,9]"),
               triadic::ParseError);
  EXPECT_THROW(read_solution("12,4,14,5,13,9\n"), triadic::ParseError);  // no dispersion named
}

TEST_F(Cli, EmptyInputIsAnEmptySet) {
  spit(path("empty.csv"), "");
  const auto topo = cli({"topology", "--input", path("empty.csv"), "--out", path("report")});
  EXPECT_EQ(topo.code, kExitOk) << topo.err;
  const auto census = nlohmann::json::parse(slurp(path("report/census.json")));
  EXPECT_TRUE(census["components"].empty());
  EXPECT_EQ(slurp(path("report/histogram.csv")), "multiplicity,count\n");

  const auto ode = cli({"ode", "--input", path("empty.csv"), "--out", path("odes")});
  EXPECT_EQ(ode.code, kExitOk);
  EXPECT_FALSE(fs::exists(path("odes")) && !fs::is_empty(path("odes")));
  EXPECT_EQ(cli({"ode", "--input", path("empty.csv")}).out, "");
}

TEST_F(Cli, TopologyReport) {
  const auto r = cli({"topology", "--domain", "50", "--format", "dot", "--out", path("t")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "triads=42 components=20 butterfly=2 chain3=1 complex=2 isolated=15\n");
  for (const char* f : {"census.json", "histogram.csv", "vectors.dot", "triads.dot"}) {
    EXPECT_TRUE(fs::exists(path(std::string("t/") + f))) << f;
  }
  const auto census = nlohmann::json::parse(slurp(path("t/census.json")));
  EXPECT_EQ(census["components"].size(), 20u);
  EXPECT_EQ(census["totals"]["isolated"], 15);
  for (const auto& c : census["components"]) {
    EXPECT_TRUE(c.contains("triads"));
    EXPECT_TRUE(c.contains("class_label"));
    EXPECT_EQ(c["certificate_hash"].get<std::string>().size(), 16u);
  }
  const auto again = cli({"topology", "--domain", "50", "--format", "dot", "--out", path("t2")});
  for (const char* f : {"census.json", "histogram.csv", "vectors.dot", "triads.dot"}) {
    EXPECT_EQ(slurp(path(std::string("t/") + f)), slurp(path(std::string("t2/") + f))) << f;
  }
}

TEST_F(Cli, OdeFiles) {
  spit(path("one.csv"), "# dispersion=sphere domain=20\nn1,m1,n2,m2,n3,m3\n12,4,14,5,13,9\n");
  const auto text = cli({"ode", "--input", path("one.csv")});
  EXPECT_NE(text.out.find("dA1/dt = a1*A2*A3"), std::string::npos);
  ASSERT_EQ(cli({"ode", "--domain", "50", "--format", "json", "--out", path("o")}).code, kExitOk);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(path("o"))) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".json");
  }
  EXPECT_EQ(files, 20u);
  spit(path("coef.csv"), "triad,slot,value\n0,1,2.5\n");
  const auto sub = cli({"ode", "--input", path("one.csv"), "--coefficients", path("coef.csv")});
  EXPECT_NE(sub.out.find("dA1/dt = (2.5)*A2*A3"), std::string::npos) << sub.err;
  spit(path("badcoef.csv"), "0,7,1\n");
  EXPECT_EQ(cli({"ode", "--input", path("one.csv"), "--coefficients", path("badcoef.csv")}).code,
            kExitIo);
}

TEST_F(Cli, Stats) {
  EXPECT_EQ(cli({"stats", "--domain", "50", "--radii", "50", "--shape", "square"}).out,
            "radius,square_count\n50,42\n");
  EXPECT_EQ(cli({"stats", "--domain", "50", "--radii", "0"}).out,
            "radius,square_count,circle_count\n0,0,0\n");
  const auto range = cli({"stats", "--domain", "60", "--radii", "10:60:25", "--shape", "square"});
  EXPECT_EQ(range.out.substr(0, 20), "radius,square_count\n");
  EXPECT_NE(range.out.find("\n60,"), std::string::npos);
  EXPECT_EQ(cli({"stats", "--domain", "50", "--radii", "30,20"}).code, kExitUsage);
  EXPECT_EQ(cli({"stats", "--domain", "50", "--radii", "a,b"}).code, kExitUsage);
  EXPECT_EQ(cli({"stats", "--domain", "50", "--radii", "1:2"}).code, kExitUsage);
  EXPECT_EQ(cli({"stats", "--domain", "50"}).code, kExitUsage);
}

TEST_F(Cli, ParallelRunsWriteIdenticalFiles) {
  ASSERT_EQ(cli({"enumerate", "--domain", "200", "--jobs", "1", "--out", path("a.json")}).code, 0);
  ASSERT_EQ(cli({"enumerate", "--domain", "200", "--jobs", "5", "--out", path("b.json")}).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

}  // namespace
