#include <gtest/gtest.h>

#include <set>

#include "co2lab/co2lab.hpp"
#include "oracles.hpp"

using namespace co2lab;

TEST(Contains, Examples) {
  const auto k4 = named("K4_3");
  const auto e = contains(k4, named("K4_3_minus"));
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(verify_embedding(k4, named("K4_3_minus"), *e));
  EXPECT_FALSE(contains(construct("s_n", 9), named("F5")).has_value());
  EXPECT_FALSE(contains(construct("c_n", 12), k4).has_value());
  EXPECT_THROW(contains(k4, clique(5, 4)), input_error);
}

TEST(Contains, Deterministic) {
  const auto host = construct("b_n", 10);
  const auto a = contains(host, named("F5"));
  const auto b = contains(host, named("F5"));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->map, b->map);
}

TEST(IsFree, Examples) {
  const std::vector<Hypergraph> fam{named("K4_3_minus"), named("F3_2"), named("C5_tight")};
  EXPECT_TRUE(is_free(construct("s_n", 9), fam).free);
  const auto k4 = named("K4_3");
  const auto r = is_free(k4, std::vector<Hypergraph>{k4});
  EXPECT_FALSE(r.free);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->map, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(*r.member, 0u);
  const auto b = construct("blowup", 12, {{"base", "h6_six"}, {"t", "2"}});
  EXPECT_TRUE(is_free(b, {named("E4_3"), named("K4_3_minus"), k4}, EmbedMode::induced).free);
}

TEST(IsFree, InducedDiffersFromSubgraph) {
  // K4 contains K4- as a subgraph but never induced.
  const auto k4 = named("K4_3");
  EXPECT_TRUE(contains(k4, named("K4_3_minus"), EmbedMode::subgraph).has_value());
  EXPECT_FALSE(contains(k4, named("K4_3_minus"), EmbedMode::induced).has_value());
}

TEST(IsFree, BlowupTransfer) {
  for (int t : {2, 3}) {
    const auto s = construct("blowup", -1, {{"base", "S6"}, {"t", std::to_string(t)}});
    EXPECT_FALSE(contains(s, named("K4_3_minus")).has_value()) << t;
    const auto k = construct("blowup", -1, {{"base", "K4_3"}, {"t", std::to_string(t)}});
    EXPECT_TRUE(is_free(k, {named("F3_2"), named("J4")}).free) << t;
  }
}

class RandomContainment : public ::testing::TestWithParam<int> {};

TEST_P(RandomContainment, AgreesWithBruteForce) {
  Rng rng(static_cast<std::uint64_t>(GetParam()));
  const std::vector<Hypergraph> patterns{named("K4_3_minus"), named("F5"), named("C3_3"), named("M2_3"), named("F3_2"), named("C5_minus"),
                                         named("K4_3"), named("E4_3")};
  for (int rep = 0; rep < 4; ++rep) {
    const int n = 4 + static_cast<int>(rng.below(4));
    const auto host = random_hypergraph(3, n, 1 + rng.below(3), 4, rng);
    for (const auto& p : patterns) {
      for (auto mode : {EmbedMode::subgraph, EmbedMode::induced}) {
        const auto e = contains(host, p, mode);
        const bool want = oracle::contains(host, p, mode == EmbedMode::induced);
        ASSERT_EQ(e.has_value(), want) << to_text(host) << to_text(p) << to_string(mode);
        if (e) {
          EXPECT_TRUE(verify_embedding(host, p, *e));
          EXPECT_TRUE(oracle::map_ok(host, p, e->map, mode == EmbedMode::induced));
          if (mode == EmbedMode::induced) {
            EXPECT_TRUE(verify_embedding(host, p, Embedding{e->map, EmbedMode::subgraph}));
          }
        }
      }
    }
  }
}

TEST_P(RandomContainment, SubgraphsOfFreeGraphsStayFree) {
  Rng rng(static_cast<std::uint64_t>(GetParam()) + 77);
  const auto host = random_hypergraph(3, 8, 1, 3, rng);
  for (const auto& p : {named("F5"), named("K4_3_minus"), named("C3_3")}) {
    if (contains(host, p)) continue;
    auto edges = host.edge_list();
    while (!edges.empty()) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
      EXPECT_FALSE(contains(Hypergraph(3, 8, edges), p).has_value());
    }
  }
}

TEST_P(RandomContainment, LargerHostsAgreeWithRelabelling) {
  // Containment is invariant under relabelling the host.
  Rng rng(static_cast<std::uint64_t>(GetParam()) + 500);
  const auto host = random_hypergraph(3, 14, 1, 6, rng);
  const auto perm = oracle::random_perm(14, rng);
  const auto moved = relabel(host, perm);
  for (const auto& p : {named("F5"), named("K4_3_minus"), named("C5_tight"), named("F3_2")})
    EXPECT_EQ(contains(host, p).has_value(), contains(moved, p).has_value());
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomContainment, ::testing::Range(1, 26));

TEST(Canonical, InvariantUnderRelabelling) {
  Rng rng(9);
  for (const char* name : {"F5", "Fano", "S6", "H7", "C5_tight", "F3_3", "fano_complement"}) {
    const auto g = named(name);
    for (int i = 0; i < 10; ++i) {
      const auto h = relabel(g, oracle::random_perm(g.n(), rng));
      EXPECT_EQ(canonical_form(g), canonical_form(h)) << name;
      EXPECT_TRUE(isomorphic(g, h));
    }
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(isomorphic(named("K4_3_minus"), named("F5")));
  EXPECT_FALSE(isomorphic(named("K5_eq"), named("K5_lt")));
  EXPECT_FALSE(isomorphic(named("C5_tight"), construct("b_n", 5)));
}

TEST(Canonical, FourVertexClasses) {
  std::set<std::string> forms;
  const auto slots = oracle::subsets(4, 3);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::vector<Vertex>> edges;
    for (int s = 0; s < 4; ++s)
      if ((mask >> s) & 1) edges.push_back(slots[static_cast<std::size_t>(s)]);
    forms.insert(canonical_form(Hypergraph(3, 4, edges)));
  }
  EXPECT_EQ(forms.size(), 5u);
}

TEST(Canonical, AgreesWithBruteForceClasses) {
  Rng rng(4);
  std::vector<Hypergraph> gs;
  for (int i = 0; i < 150; ++i) gs.push_back(random_hypergraph(3, 6, 1, 2, rng));
  std::vector<std::string> fast;
  std::vector<std::vector<std::vector<Vertex>>> slow;
  for (const auto& g : gs) {
    fast.push_back(canonical_form(g));
    slow.push_back(oracle::canon(g));
  }
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) EXPECT_EQ(fast[i] == fast[j], slow[i] == slow[j]);
}

TEST(Canonical, LargerSymmetricGraphs) {
  Rng rng(21);
  for (const char* f : {"s_n", "b_n", "c_n"}) {
    const auto g = construct(f, 12);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, oracle::random_perm(12, rng)))) << f;
  }
  const auto a = construct("blowup", -1, {{"base", "S6"}, {"t", "2"}});
  EXPECT_EQ(canonical_form(a), canonical_form(relabel(a, oracle::random_perm(12, rng))));
  EXPECT_FALSE(isomorphic(construct("s_n", 12), construct("c_n", 12)));
}

TEST(Canonical, FormRoundTrip) {
  for (const char* name : {"F5", "Fano", "K5_4_eq"}) {
    const auto g = named(name);
    const auto back = from_canonical_form(canonical_form(g));
    EXPECT_TRUE(isomorphic(g, back));
    EXPECT_EQ(canonical_form(back), canonical_form(g));
  }
  EXPECT_EQ(canonical_form(Hypergraph(3, 0)), "k=3;n=0;");
  EXPECT_THROW(from_canonical_form("junk"), input_error);
}
