#include "json.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz_cli/cli.hpp"
#include "lefschetz_cli/registry.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace lefschetz;
using namespace lefschetz::cli;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& body) {
  static int counter = 0;
  const std::string path = ::testing::TempDir() + "lefschetz_test_" + std::to_string(counter++) + ".lie";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Registry, EveryEntryParsesAndRoundTrips) {
  for (const auto& name : registry_names()) {
    const auto m = registry_model(name);
    EXPECT_EQ(m.name(), name);
    const auto back = load_lie_text(to_lie_text(m.structure(), m.omega()));
    EXPECT_EQ(back.structure, m.structure());
    ASSERT_TRUE(back.model.has_value());
    EXPECT_EQ(back.model->omega(), m.omega());
  }
  EXPECT_THROW(registry_model("torus5"), BadParameter);
  EXPECT_THROW(registry_model("nope"), BadParameter);
}

TEST(LoadLie, KodairaThurstonFile) {
  const auto path = temp_file("# KT\nname: kt\ndim: 4\nd: 0,0,-12,0\nsymplectic: 13+24\n");
  const auto l = load_lie(path);
  ASSERT_TRUE(l.model.has_value());
  EXPECT_EQ(l.model->ring().betti(), (BettiVector{1, 3, 4, 3, 1}));
}

TEST(LoadLie, Errors) {
  EXPECT_THROW(load_lie(temp_file("name: t\ndim: 4\nd: 0,0,0,0\nsymplectic: 12\n")), NotSymplectic);
  EXPECT_THROW(load_lie(temp_file("name: t\ndim: 4\nd: 0,0,12,34\n")), NotLieAlgebra);
  EXPECT_THROW(load_lie(temp_file("name: t\ndim: 4\nd: 0,0,12\n")), ParseError);
}

TEST(Cli, AnalyzeKtTable) {
  const auto r = call({"analyze", "kt"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("betti        1   3   4   3   1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("betti_hr     1   3   4   2   1"), std::string::npos);
  EXPECT_NE(r.out.find("lefschetz level: 0"), std::string::npos);
}

TEST(Cli, AnalyzeJsonSchema) {
  const auto r = call({"analyze", "solv6", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lefschetz_level"], 1);
  EXPECT_EQ(j["manifold"], "solv6");
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["betti"], nlohmann::json({1, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(j["betti_hr"], nlohmann::json({1, 2, 3, 4, 2, 2, 1}));
  EXPECT_TRUE(j.contains("parity_bound"));
  for (const auto& [k, v] : j["checks"].items()) EXPECT_TRUE(v.get<bool>()) << k;
  // sorted keys
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Cli, GlobalJsonBeforeSubcommand) {
  const auto r = call({"--json", "analyze", "kt"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["lefschetz_level"], 0);
}

TEST(Cli, CohomologyFromFile) {
  const auto r = call({"cohomology", "--file", temp_file("name: h\ndim: 3\nd: 0,0,12\n"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["betti"], nlohmann::json({1, 2, 2, 1}));
  EXPECT_EQ(j["checks"]["de_rham_identified"], true);
}

TEST(Cli, ProductAndAuroux) {
  auto r = call({"product", "nil6", "cp", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["betti_hr"][3], 7);
  EXPECT_EQ(j["b3hr_kernel_formula"], 7);
  r = call({"auroux", "--space", "nil6xcp2", "--r", "1", "--chern", "13", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["b3hr"], 7);
  EXPECT_EQ(j["checks"]["generic_rank_consistent"], true);
}

TEST(Cli, BlowupTowerDonaldson) {
  auto j = nlohmann::json::parse(call({"blowup", "--ambient", "5", "--sub", "kt", "--json"}).out);
  EXPECT_EQ(j["betti"][3], 3);
  j = nlohmann::json::parse(call({"tower", "--s", "4", "--json"}).out);
  EXPECT_EQ(j["m"], nlohmann::json({5, 11, 23}));
  j = nlohmann::json::parse(call({"donaldson", "--ambient", "M2", "--codim", "2", "--json"}).out);
  EXPECT_EQ(j["degrees"][5]["betti"], 3);
  EXPECT_EQ(j["degrees"][5]["gap_parity"], 1);
}

TEST(Cli, DetcheckReportsComputedRelation) {
  const auto r = call({"detcheck", "--m", "11", "--n", "5", "--k", "4", "--mu", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-490*eps^6"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("expanded = -1 * closed form"), std::string::npos);
  const auto ok = call({"detcheck", "--m", "9", "--n", "4", "--k", "3", "--mu", "1"});
  EXPECT_NE(ok.out.find("identity holds"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"analyze", "nosuch"}).code, 2);
  EXPECT_EQ(call({"tower", "--s", "3"}).code, 2);
  EXPECT_EQ(call({"tower"}).code, 2);
  EXPECT_EQ(call({"detcheck", "--m", "5", "--n", "4", "--k", "4", "--mu", "2"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, VerifyPaperIsDeterministic) {
  const auto a = call({"verify-paper"});
  const auto b = call({"verify-paper"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.code, a.out.find("[FAIL]") == std::string::npos ? 0 : 1);
  const auto j = nlohmann::json::parse(call({"verify-paper", "--json"}).out);
  EXPECT_GT(j["total"].get<int>(), 40);
}
