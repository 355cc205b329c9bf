#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = co2lab::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, GenThenMeasure) {
  const auto g = cli({"gen", "s_n", "--n", "9"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto m = cli({"measure", "-"}, g.out);
  ASSERT_EQ(m.code, 0) << m.err;
  EXPECT_TRUE(has(m.out, "edges = 27"));
  EXPECT_TRUE(has(m.out, "co2 = 243"));
}

TEST(Cli, MeasureJson) {
  const auto g = cli({"gen", "K4_3"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto m = cli({"measure", "-", "--json"}, g.out);
  ASSERT_EQ(m.code, 0) << m.err;
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_EQ(j["schema"], "co2lab/1");
  EXPECT_EQ(j["co2"], 24);
  EXPECT_EQ(j["min_codegree"], 2);
}

TEST(Cli, CheckFree) {
  const auto g = cli({"gen", "c_n", "--n", "12"});
  ASSERT_EQ(g.code, 0) << g.err;
  const auto free = cli({"check-free", "-", "--forbid", "K4_3"}, g.out);
  EXPECT_EQ(free.code, 0);
  EXPECT_TRUE(has(free.out, "free"));
  const auto busy = cli({"check-free", "-", "--forbid", "K4_3_minus"}, g.out);
  EXPECT_EQ(busy.code, 1);
  EXPECT_TRUE(has(busy.out, "contains K4_3_minus"));
  const auto j = nlohmann::json::parse(cli({"check-free", "-", "--forbid", "K4_3_minus", "--json"}, g.out).out);
  EXPECT_FALSE(j["free"].get<bool>());
  EXPECT_EQ(j["embedding"].size(), 4u);
}

TEST(Cli, FindCopyExitCodes) {
  const std::string k4 = "3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
  EXPECT_EQ(cli({"find-copy", "-", "K4_3_minus"}, k4).code, 0);
  EXPECT_EQ(cli({"find-copy", "-", "K4_3_minus", "--induced"}, k4).code, 1);
  EXPECT_EQ(cli({"find-copy", "-", "C3_3"}, k4).code, 1);
}

TEST(Cli, UniformZero) {
  const auto no = cli({"uniform-zero", "C5_tight"});
  EXPECT_EQ(no.code, 0);
  EXPECT_TRUE(has(no.out, "none; π_u ≥ 1/27")) << no.out;
  const auto yes = cli({"uniform-zero", "F5"});
  EXPECT_TRUE(has(yes.out, "witness; ordering 0 1 2 3 4")) << yes.out;
  const auto fam = cli({"uniform-zero", "F5", "C5_tight"});
  EXPECT_TRUE(has(fam.out, "some member has no witness"));
}

TEST(Cli, Search) {
  const auto r = cli({"search", "--n", "6", "--forbid", "C3_3", "--objective", "co2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "# optimum co2 = 90"));
  EXPECT_TRUE(has(r.out, "proof_mode = exhaustive"));
  const auto refused = cli({"search", "--n", "9", "--forbid", "C3_3"});
  EXPECT_EQ(refused.code, 2);
  EXPECT_TRUE(has(refused.err, "refused"));
}

TEST(Cli, MalformedInputNamesLine) {
  const auto r = cli({"measure", "-"}, "# header\n3 4\n0 1 2\n0 1 9\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "line 4")) << r.err;
  const auto junk = cli({"measure", "-"}, "3 4\n0 1 x\n");
  EXPECT_EQ(junk.code, 2);
  EXPECT_TRUE(has(junk.err, "line 2")) << junk.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"search"}).code, 2);
  EXPECT_EQ(cli({"gen", "no_such_family", "--n", "5"}).code, 2);
  EXPECT_EQ(cli({"search", "--n", "5", "--objective", "max"}).code, 2);
}

TEST(Cli, Catalog) {
  const auto l = cli({"catalog", "list"});
  EXPECT_EQ(l.code, 0);
  EXPECT_TRUE(has(l.out, "Fano"));
  EXPECT_TRUE(has(l.out, "s_n"));
  const auto s = cli({"catalog", "show", "s_n"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(has(s.out, "2/27"));
}

TEST(Cli, Table1CoreRows) {
  const auto r = cli({"table1", "--rows", "K4,K5,F33,F5,K4-F32,F32J4", "--nmax", "120", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["rows"].size(), 6u);
  EXPECT_TRUE(has(cli({"table1", "--rows", "K4", "--nmax", "60"}).out, "not reproduced"));
}

TEST(Cli, SeededGenIsReproducible) {
  const auto a = cli({"gen", "giraud", "--n", "8", "--seed", "5"});
  const auto b = cli({"gen", "giraud", "--n", "8", "--seed", "5"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}
