#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qcat/errors.hpp"

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = qcat::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Parse-and-redump must reproduce the exact bytes the CLI printed.
void expect_json_round_trip(const std::string& text) {
  const auto parsed = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(parsed.dump(2) + "\n", text);
}

}  // namespace

TEST(Cli, TwistOfTrivialIsOne) {
  const auto r = run({"twist", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, QIntTable) {
  EXPECT_EQ(run({"qint", "3"}).out, "q^2 + 1 + q^(-2)\n");
  EXPECT_EQ(run({"qfact", "2"}).out, "q + q^(-1)\n");
}

TEST(Cli, BraidEigenvalues) {
  const auto r = run({"braid", "1", "1", "--eigenvalues", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["eigenvalues"]["2"], "q^(1/2)");
  EXPECT_EQ(j["eigenvalues"]["0"], "-q^(-3/2)");
  expect_json_round_trip(r.out);
}

TEST(Cli, CgSchema) {
  const auto r = run({"--format", "json", "cg", "--ell", "0", "--ell1", "1", "--ell2", "1", "--op"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["ell"], 0);
  EXPECT_EQ(j["side"], "delta_op");
  ASSERT_EQ(j["matrix"].size(), 4u);
  EXPECT_EQ(j["matrix"][0].size(), 1u);
  expect_json_round_trip(r.out);
}

TEST(Cli, SixJKeys) {
  const auto r = run({"sixj", "1", "1", "1", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["2,0"], "1");
  EXPECT_EQ(j.size(), 4u);
  expect_json_round_trip(r.out);
}

TEST(Cli, VerifyReportSchema) {
  for (const char* check : {"pentagon", "hexagon", "ribbon", "intertwiner", "fusion"}) {
    const auto r = run({"verify", check, "--lmax", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << check << r.err;
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j["check"], check);
    EXPECT_EQ(j["params"], nlohmann::ordered_json::array({1}));
    EXPECT_EQ(j["pass"], true);
    EXPECT_TRUE(j["failures"].empty());
    expect_json_round_trip(r.out);
  }
}

TEST(Cli, VirasoroTables) {
  auto r = run({"vir", "weights", "--t", "3/5", "--lmax", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["t"], "3/5");
  EXPECT_EQ(j["c"], "-3/5");
  EXPECT_EQ(j["weights"][1]["h"], "-1/20");
  expect_json_round_trip(r.out);

  r = run({"vir", "kac", "--t", "0.6", "--lmax", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["kac"].size(), 4u);
  for (const auto& row : j["kac"]) EXPECT_EQ(row["det_zero"], true);
  EXPECT_EQ(j["kac"][3]["level"], 4);
  expect_json_round_trip(r.out);

  for (const char* table : {"fusion", "bconst"}) {
    r = run({"vir", table, "--t", "0.41", "--lmax", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_json_round_trip(r.out);
  }
}

TEST(Cli, EquivPassesAtGenericT) {
  const auto r = run({"equiv", "--t", "0.41", "--lmax", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err << r.out;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_LT(j["braiding"]["max_deviation"].get<double>(), 1e-9);
  EXPECT_LT(j["twist"]["max_deviation"].get<double>(), 1e-9);
  EXPECT_EQ(j["fusion"]["match"], true);
  EXPECT_EQ(j["pentagon"]["pass"], true);
  EXPECT_EQ(j["pass"], true);
  expect_json_round_trip(r.out);
}

TEST(Cli, EquivFailsWithImpossibleTolerance) {
  const auto r = run({"equiv", "--t", "0.41", "--lmax", "2", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"twist"}).code, 2);
  EXPECT_EQ(run({"twist", "-1"}).code, 2);
  EXPECT_EQ(run({"qfact", "-2"}).code, 2);
  EXPECT_EQ(run({"cg", "--ell", "1", "--ell1", "1", "--ell2", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "octagon", "--lmax", "2"}).code, 2);
  EXPECT_EQ(run({"vir", "weights", "--t", "abc", "--lmax", "2"}).code, 2);
  EXPECT_EQ(run({"vir", "weights", "--t", "0", "--lmax", "2"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "twist", "1"}).code, 2);
  EXPECT_EQ(run({"equiv", "--t", "0.41", "--lmax", "2", "--tol", "-1"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("equiv"), std::string::npos);
}

TEST(Cli, LevelCapFromEnvironment) {
  ::setenv("QCAT_LEVEL_CAP", "3", 1);
  EXPECT_EQ(run({"vir", "kac", "--t", "3/5", "--lmax", "3"}).code, 2);
  EXPECT_EQ(run({"vir", "kac", "--t", "3/5", "--lmax", "2"}).code, 0);
  ::setenv("QCAT_LEVEL_CAP", "nope", 1);
  EXPECT_EQ(run({"vir", "kac", "--t", "3/5", "--lmax", "2"}).code, 2);
  ::unsetenv("QCAT_LEVEL_CAP");
  EXPECT_EQ(qcat::cli::level_cap_from_env(), 8);
}

TEST(Cli, OutFileAndCsv) {
  const std::string path = ::testing::TempDir() + "qcat_cli_out.csv";
  const auto r = run({"braid", "1", "1", "--eigenvalues", "--format", "csv", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "ell,lambda\n0,-q^(-3/2)\n2,q^(1/2)\n");
  std::remove(path.c_str());
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args{"sixj", "2", "1", "2", "3", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(ExactRational, Parsing) {
  using qcat::cli::parse_exact_rational;
  EXPECT_EQ(parse_exact_rational("3/5"), mpq_class(3, 5));
  EXPECT_EQ(parse_exact_rational("-6/10"), mpq_class(-3, 5));
  EXPECT_EQ(parse_exact_rational("0.41"), mpq_class(41, 100));
  EXPECT_EQ(parse_exact_rational("-.5"), mpq_class(-1, 2));
  EXPECT_EQ(parse_exact_rational("2"), mpq_class(2));
  EXPECT_EQ(parse_exact_rational("010/03"), mpq_class(10, 3));
  EXPECT_EQ(parse_exact_rational("0.077"), mpq_class(77, 1000));
  EXPECT_EQ(parse_exact_rational("1.5e-2"), mpq_class(3, 200));
  EXPECT_EQ(parse_exact_rational("7E1"), mpq_class(70));
  EXPECT_THROW(parse_exact_rational(""), qcat::ParseError);
  EXPECT_THROW(parse_exact_rational("."), qcat::ParseError);
  EXPECT_THROW(parse_exact_rational("1/0"), qcat::ParseError);
  EXPECT_THROW(parse_exact_rational("0x10"), qcat::ParseError);
}
