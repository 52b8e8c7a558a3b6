#include <gtest/gtest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "tcore/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tcore::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  auto r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, Gbg) {
  auto j = run_json({"gbg", "--partition", "4,2", "--mod", "2"});
  EXPECT_EQ(j["value"]["coeffs"], json::array({0}));
  EXPECT_EQ(j["value"]["pretty"], "0");
  auto k = run_json({"gbg", "--partition", "4,2", "--mod", "3"});
  EXPECT_EQ(k["value"]["pretty"], "1 - w");
  EXPECT_EQ(k["value"]["modulus"], 3);
  EXPECT_EQ(k["partition"]["parts"], json::array({4, 2}));
  auto f = run_json({"gbg", "--nvec", "0,-1,1,0", "--mod", "3"});
  EXPECT_EQ(f["value"]["pretty"], "-1");
}

TEST(Cli, Nu) {
  auto j = run_json({"nu", "--s", "3", "--t", "4"});
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(j["bound"], 5);
  EXPECT_EQ(j["equality"], true);
  auto k = run_json({"gbg", "nu", "--s", "4", "--t", "5"});
  EXPECT_EQ(k["equality"], false);
  EXPECT_LT(k["count"].get<int>(), 14);
}

TEST(Cli, Table1) {
  auto j = run_json({"table1"});
  EXPECT_EQ(j["rows"].size(), 27u);
  EXPECT_EQ(j["groups"].size(), 5u);
}

TEST(Cli, Lemma14) {
  auto j = run_json({"lemma14", "--s", "10", "--t", "4"});
  EXPECT_EQ(j["conditions_hold"], true);
  EXPECT_EQ(j["equal_forced"], false);
  EXPECT_EQ(j["j"], json::array({2, 2, 7, 7}));
  EXPECT_EQ(j["j_tilde"], json::array({1, 3, 6, 8}));
  auto k = run_json({"lemma14", "--s", "5", "--j", "0,1,4", "--jt", "1,4,0"});
  EXPECT_EQ(k["equal_forced"], true);
}

TEST(Cli, Qcheck) {
  auto j = run_json({"qcheck", "--id", "4.13", "--order", "60"});
  EXPECT_EQ(j["holds"], true);
  EXPECT_TRUE(j["first_discrepancy"].is_null());
  EXPECT_EQ(j["order"], 60);
  auto all = run_json({"qcheck", "--all", "--order", "30"});
  for (const auto& r : all["reports"]) EXPECT_EQ(r["holds"], true) << r["id"];
}

TEST(Cli, Cores) {
  auto st = run_json({"cores", "st", "--s", "3", "--t", "4"});
  EXPECT_EQ(st["count"], 5);
  EXPECT_EQ(st["injective"], true);
  EXPECT_EQ(st["cores"][0]["norm"], 0);
  auto ol = run_json({"cores", "olsson", "--s", "3", "--t", "4", "--max-norm", "40"});
  EXPECT_EQ(ol["holds"], true);
  auto d = run_json({"cores", "decompose", "--partition", "6,4,1", "--t", "3"});
  EXPECT_EQ(d["core"]["parts"], json::array({3, 1, 1}));
  EXPECT_EQ(d["quotient"].size(), 3u);
  auto top = run_json({"decompose", "--partition", "6,4,1", "--t", "3"});
  EXPECT_EQ(top["core"], d["core"]);
}

TEST(Cli, Series) {
  auto j = run_json({"series", "--eta", "1:1", "--order", "8", "--display", "8"});
  EXPECT_EQ(j["series"], "1 - q - q^2 + q^5 + q^7 + O(q^8)");
}

TEST(Cli, UsageErrors) {
  auto r = run({"gbg", "--partition", "4,x", "--mod", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not"), std::string::npos);
  EXPECT_EQ(run({"nu", "--s", "3"}).code, 2);
  EXPECT_NE(run({"nu", "--s", "3"}).err.find("--t"), std::string::npos);
  EXPECT_EQ(run({"qcheck", "--id", "4.13", "--order", "1"}).code, 2);
  EXPECT_NE(run({"qcheck", "--id", "4.13", "--order", "1"}).err.find("--order"), std::string::npos);
  EXPECT_EQ(run({"nu", "--s", "4", "--t", "6"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"qcheck", "--id", "7.1"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "table1"}).code, 2);
}

TEST(Cli, Deterministic) {
  auto a = run({"cores", "st", "--s", "4", "--t", "7", "--json"});
  auto b = run({"cores", "st", "--s", "4", "--t", "7", "--json", "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);
  auto c = run({"nu", "--s", "5", "--t", "6", "--json", "--jobs", "4"});
  auto d = run({"nu", "--s", "5", "--t", "6", "--json"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, EnvironmentOverride) {
  ::setenv("TCORE_ORDER", "25", 1);
  auto j = run_json({"qcheck", "--id", "4.7"});
  ::unsetenv("TCORE_ORDER");
  EXPECT_EQ(j["order"], 25);
  ::setenv("TCORE_FORMAT", "json", 1);
  auto r = run({"table1"});
  ::unsetenv("TCORE_FORMAT");
  EXPECT_TRUE(json::accept(r.out));
}

TEST(Cli, TableFormat) {
  auto r = run({"nu", "--s", "3", "--t", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count: 5"), std::string::npos);
}

TEST(Cli, VerifyAll) {
  auto j = run_json({"verify-all", "--order", "48"});
  EXPECT_EQ(j["ok"], true);
  for (const auto& p : j["properties"]) EXPECT_EQ(p["failures"], 0) << p["name"];
}
