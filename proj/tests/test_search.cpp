#include <gtest/gtest.h>

#include <set>

#include "co2lab/co2lab.hpp"
#include "oracles.hpp"

using namespace co2lab;

namespace {

SearchProblem problem(int n, std::vector<std::string> fam, Objective o, EmbedMode m = EmbedMode::subgraph) {
  SearchProblem p;
  p.n = n;
  p.objective = o;
  p.mode = m;
  for (const auto& f : fam) p.family.push_back(named(f));
  return p;
}

std::set<std::vector<std::vector<Vertex>>> brute_classes(const SearchResult& r) {
  std::set<std::vector<std::vector<Vertex>>> s;
  for (const auto& w : r.witnesses) s.insert(oracle::canon(from_canonical_form(w)));
  return s;
}

}  // namespace

TEST(Search, Examples) {
  EXPECT_EQ(search_extremal(problem(6, {"C3_3"}, Objective::co2)).optimum, 90);
  EXPECT_EQ(search_extremal(problem(5, {}, Objective::co2)).optimum, 90);
  const auto r = search_extremal(problem(5, {"K4_3"}, Objective::l1));
  EXPECT_EQ(r.proof_mode, ProofMode::exhaustive);
  EXPECT_FALSE(r.witnesses.empty());
  const auto o = oracle::enumerate(5, 3, {named("K4_3")}, false, Objective::l1);
  EXPECT_EQ(r.optimum, o.optimum);
}

TEST(Search, LooseTriangleSevenVertices) {
  const auto r = search_extremal(problem(7, {"C3_3"}, Objective::co2));
  EXPECT_EQ(r.optimum, binomial(6, 2) * 11);
  EXPECT_EQ(r.proof_mode, ProofMode::exhaustive);
  for (const auto& w : r.witnesses) EXPECT_TRUE(verify_witness(from_canonical_form(w), problem(7, {"C3_3"}, Objective::co2), r.optimum));
}

TEST(VerifyWitness, Examples) {
  const auto p = problem(6, {"C3_3"}, Objective::co2);
  EXPECT_TRUE(verify_witness(construct("star_vertex", 6), p, 90));
  EXPECT_FALSE(verify_witness(construct("star_vertex", 6), p, 91));
  EXPECT_FALSE(verify_witness(clique(6, 3), p, co2(clique(6, 3))));
  EXPECT_TRUE(verify_witness(Hypergraph(3, 6), p, 0));
  EXPECT_FALSE(verify_witness(Hypergraph(3, 5), p, 0));
}

struct OracleCase {
  int n;
  std::vector<std::string> family;
  EmbedMode mode;
};

void PrintTo(const OracleCase& c, std::ostream* os) {
  *os << "n=" << c.n << " " << to_string(c.mode) << " {";
  for (const auto& f : c.family) *os << ' ' << f;
  *os << " }";
}

class OracleAgreement : public ::testing::TestWithParam<OracleCase> {};

TEST_P(OracleAgreement, AllObjectives) {
  const auto& c = GetParam();
  for (auto obj : {Objective::l1, Objective::co2, Objective::min_codegree, Objective::positive_min_codegree}) {
    const auto p = problem(c.n, c.family, obj, c.mode);
    const auto r = search_extremal(p);
    std::vector<Hypergraph> fam = p.family;
    const auto o = oracle::enumerate(c.n, 3, fam, c.mode == EmbedMode::induced, obj);
    EXPECT_EQ(r.optimum, o.optimum) << to_string(obj);
    ASSERT_FALSE(r.witnesses_truncated);
    EXPECT_EQ(brute_classes(r), o.optimal_classes) << to_string(obj);
    for (const auto& w : r.witnesses) EXPECT_TRUE(verify_witness(from_canonical_form(w), p, r.optimum));

    SearchOptions plain;
    plain.prune_bound = false;
    plain.prune_canonical = false;
    plain.witness_cap = 1u << 20;
    const auto u = search_extremal(p, plain);
    EXPECT_EQ(u.optimum, r.optimum);
    EXPECT_EQ(brute_classes(u), brute_classes(r));
  }
}

INSTANTIATE_TEST_SUITE_P(Small, OracleAgreement,
                         ::testing::Values(OracleCase{5, {}, EmbedMode::subgraph}, OracleCase{5, {"K4_3"}, EmbedMode::subgraph},
                                           OracleCase{5, {"C3_3"}, EmbedMode::subgraph}, OracleCase{5, {"M2_3"}, EmbedMode::subgraph},
                                           OracleCase{4, {"K4_3_minus"}, EmbedMode::subgraph}, OracleCase{5, {"K4_3_minus"}, EmbedMode::subgraph},
                                           OracleCase{5, {"F5"}, EmbedMode::subgraph}, OracleCase{5, {"K4_3_minus", "C5_minus"}, EmbedMode::subgraph},
                                           OracleCase{5, {"K4_3_minus"}, EmbedMode::induced}, OracleCase{5, {"E4_3"}, EmbedMode::induced},
                                           OracleCase{5, {"E4_3", "K4_3_minus"}, EmbedMode::induced}),
                         [](const ::testing::TestParamInfo<OracleCase>& i) {
                           std::string s = "n" + std::to_string(i.param.n) + "_" + to_string(i.param.mode);
                           for (const auto& f : i.param.family) s += "_" + f;
                           for (char& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s + "_" + std::to_string(i.index);
                         });

TEST(Search, MonotoneInN) {
  for (const char* f : {"C3_3", "K4_3_minus", "F5"}) {
    Count prev = 0;
    for (int n = 4; n <= 7; ++n) {
      const auto r = search_extremal(problem(n, {f}, Objective::co2));
      EXPECT_GE(r.optimum, prev) << f << " n=" << n;
      prev = r.optimum;
    }
  }
}

TEST(Search, ShrinkingFamilyNeverLowersOptimum) {
  for (auto obj : {Objective::l1, Objective::co2}) {
    const auto both = search_extremal(problem(6, {"K4_3_minus", "F5"}, obj)).optimum;
    EXPECT_LE(both, search_extremal(problem(6, {"K4_3_minus"}, obj)).optimum);
    EXPECT_LE(both, search_extremal(problem(6, {"F5"}, obj)).optimum);
  }
}

TEST(Search, ThreadCountDoesNotChangeResult) {
  for (auto obj : {Objective::co2, Objective::l1, Objective::positive_min_codegree}) {
    const auto p = problem(7, {"K4_3_minus"}, obj);
    SearchOptions one, many;
    many.threads = 4;
    many.split_depth = 2;
    one.split_depth = 2;
    const auto a = search_extremal(p, one);
    const auto b = search_extremal(p, many);
    EXPECT_EQ(a.optimum, b.optimum);
    EXPECT_EQ(a.witnesses, b.witnesses);
  }
}

TEST(Search, RefusalAndBoundedMode) {
  EXPECT_THROW(search_extremal(problem(8, {"C3_3"}, Objective::co2)), search_refused);
  EXPECT_THROW(search_extremal(problem(10, {"C3_3"}, Objective::co2), SearchOptions{.bounded = true}), search_refused);
  SearchOptions o;
  o.bounded = true;
  o.time_limit_s = 1.0;
  const auto r = search_extremal(problem(8, {"K4_3_minus"}, Objective::l1), o);
  EXPECT_GT(r.optimum, 0);
  for (const auto& w : r.witnesses) EXPECT_TRUE(verify_witness(from_canonical_form(w), problem(8, {"K4_3_minus"}, Objective::l1), r.optimum));
}

TEST(Search, PatternLargerThanN) {
  const auto r = search_extremal(problem(5, {"Fano"}, Objective::co2));
  EXPECT_EQ(r.optimum, co2(clique(5, 3)));
  EXPECT_FALSE(r.notes.empty());
}

TEST(Search, EdgelessMemberIsInfeasible) {
  SearchProblem p;
  p.n = 5;
  p.family = {Hypergraph(3, 4)};
  EXPECT_FALSE(search_extremal(p).feasible);
}

TEST(Search, FourUniform) {
  SearchProblem p;
  p.n = 6;
  p.k = 4;
  p.family = {named("K5_4_eq")};
  p.objective = Objective::l1;
  const auto r = search_extremal(p);
  const auto o = oracle::enumerate(6, 4, p.family, false, Objective::l1);
  EXPECT_EQ(r.optimum, o.optimum);
}

TEST(Search, PositiveCodegreeSmallN) {
  // Data points for the positive-codegree variant; S_n attains floor(n/3).
  for (int n : {5, 6}) {
    const auto r = search_extremal(problem(n, {"K4_3_minus"}, Objective::positive_min_codegree));
    EXPECT_GE(r.optimum, n / 3);
    for (const auto& w : r.witnesses)
      EXPECT_TRUE(verify_witness(from_canonical_form(w), problem(n, {"K4_3_minus"}, Objective::positive_min_codegree), r.optimum));
  }
}

TEST(Objective, ParseNames) {
  EXPECT_EQ(parse_objective("co2"), Objective::co2);
  EXPECT_EQ(parse_objective("l1"), Objective::l1);
  EXPECT_EQ(parse_objective("positive_min_codegree"), Objective::positive_min_codegree);
  EXPECT_THROW(parse_objective("max"), input_error);
}
