#include <gtest/gtest.h>

#include <random>

#include "berge/errors.hpp"
#include "berge/patterns.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

std::vector<PatternGraph> oracle_patterns() {
  return {make_clique(3), make_clique(4), make_book(2), make_book(3), make_fan(2),
          make_complete_multipartite({1, 2, 2})};
}

}  // namespace

TEST(Patterns, BookShape) {
  const auto b = make_book(2);
  EXPECT_EQ(b.n(), 4);
  EXPECT_EQ(b.edge_count(), 5u);
  EXPECT_EQ(b.marked, (std::vector<int>{0, 1}));
  EXPECT_TRUE(b.graph.has_edge(0, 1));
  for (int t = 1; t <= 6; ++t) {
    EXPECT_EQ(make_book(t).n(), t + 2);
    EXPECT_EQ(make_book(t).edge_count(), static_cast<std::size_t>(2 * t + 1));
  }
}

TEST(Patterns, FanShape) {
  const auto f1 = make_fan(1);
  EXPECT_EQ(f1.n(), 3);
  EXPECT_EQ(f1.edge_count(), 3u);
  EXPECT_EQ(f1.graph, make_clique(3).graph);
  for (int t = 1; t <= 5; ++t) {
    const auto f = make_fan(t);
    EXPECT_EQ(f.n(), 2 * t + 1);
    EXPECT_EQ(f.edge_count(), static_cast<std::size_t>(3 * t));
    EXPECT_EQ(f.marked, std::vector<int>{0});
    EXPECT_EQ(f.graph.degree(0), 2 * t);
  }
}

TEST(Patterns, CliqueAndTuran) {
  for (int r = 2; r <= 7; ++r)
    EXPECT_EQ(make_clique(r).edge_count(), static_cast<std::size_t>(r * (r - 1) / 2));
  const auto t = make_turan(5, 2);
  EXPECT_EQ(t.edge_count(), 6u);
  EXPECT_EQ(t.part_sizes(), (std::vector<int>{2, 3}));
  EXPECT_EQ(make_turan(7, 3).part_sizes(), (std::vector<int>{2, 2, 3}));
  EXPECT_EQ(make_turan(6, 6).edge_count(), 15u);
}

TEST(Patterns, ParameterErrors) {
  EXPECT_THROW(make_book(0), ParameterError);
  EXPECT_THROW(make_fan(0), ParameterError);
  EXPECT_THROW(make_clique(1), ParameterError);
  EXPECT_THROW(make_turan(3, 0), ParameterError);
  EXPECT_THROW(make_turan(3, 4), ParameterError);
  EXPECT_THROW(make_complete_multipartite({}), ParameterError);
  EXPECT_THROW(make_complete_multipartite({2, 0}), ParameterError);
}

TEST(Patterns, SpecGrammar) {
  EXPECT_EQ(parse_pattern("book:3").graph, make_book(3).graph);
  EXPECT_EQ(parse_pattern("fan:2").graph, make_fan(2).graph);
  EXPECT_EQ(parse_pattern("clique:4").graph, make_clique(4).graph);
  EXPECT_EQ(parse_pattern("kab:1,2,2").graph, make_complete_multipartite({1, 2, 2}).graph);
  EXPECT_EQ(parse_pattern("turan:5,2").graph, make_turan(5, 2).graph);
  for (const char* s : {"book:2", "fan:3", "clique:3", "kab:1,2,3", "turan:6,3"})
    EXPECT_EQ(parse_pattern(s).spec(), s);
  for (const char* bad : {"", "book", "book:", "book:x", "cycle:4", "kab:", "turan:5", "book:2,3"})
    EXPECT_THROW(parse_pattern(bad), InputError) << bad;
  EXPECT_THROW(parse_pattern("book:0"), ParameterError);
}

TEST(Patterns, AutomorphismCounts) {
  for (int t = 2; t <= 4; ++t) {
    std::uint64_t fact = 1;
    for (int i = 2; i <= t; ++i) fact *= static_cast<std::uint64_t>(i);
    EXPECT_EQ(automorphism_count(make_book(t).graph), 2 * fact);
    EXPECT_EQ(automorphism_count(make_fan(t).graph), (std::uint64_t{1} << t) * fact);
  }
  EXPECT_EQ(automorphism_count(make_clique(5).graph), 120u);
  for (const auto& p : oracle_patterns())
    EXPECT_EQ(automorphism_count(p.graph), oracle::automorphisms(p.graph)) << p.spec();
}

TEST(CountCopies, Examples) {
  EXPECT_EQ(count_copies(make_clique(3), make_clique(4).graph), 4u);
  EXPECT_EQ(count_copies(make_clique(3), make_turan(6, 2).graph), 0u);
  EXPECT_EQ(count_copies(make_book(2), make_clique(5).graph), 30u);
  EXPECT_EQ(oracle::copies(make_book(2), make_clique(5).graph), 30u);
  EXPECT_EQ(count_copies(make_clique(4), make_clique(3).graph), 0u);
}

TEST(ContainsPattern, Examples) {
  EXPECT_FALSE(contains_pattern(make_clique(3), cycle(5)));
  Graph k4e = make_clique(4).graph;
  k4e.remove_edge(2, 3);
  const auto emb = contains_pattern(make_book(2), k4e);
  ASSERT_TRUE(emb);
  EXPECT_EQ(k4e.degree((*emb)[0]), 3);
  EXPECT_EQ(k4e.degree((*emb)[1]), 3);
  Graph g(6);
  g.add_edge(3, 5);
  g.add_edge(2, 4);
  const auto k2 = contains_pattern(make_clique(2), g);
  ASSERT_TRUE(k2);
  EXPECT_EQ(*k2, (std::vector<int>{2, 4}));
}

TEST(ContainsPattern, ReturnsLexicographicallyFirstImage) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = oracle::random_graph(7, 0.5, rng);
    const auto p = make_book(2);
    std::optional<std::vector<int>> first;
    oracle::for_each_injection(p.n(), g.n(), [&](const std::vector<int>& m) {
      for (const Edge& e : p.edges())
        if (!g.has_edge(m[e.u], m[e.v])) return false;
      first = m;
      return true;
    });
    EXPECT_EQ(contains_pattern(p, g), first);
  }
}

class PatternProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{917};
};

TEST_F(PatternProperty, CountCopiesMatchesNaiveOracle) {
  for (int iter = 0; iter < 200; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const double density = std::uniform_real_distribution<double>(0.2, 0.95)(rng);
    const auto g = oracle::random_graph(n, density, rng);
    for (const auto& p : oracle_patterns())
      ASSERT_EQ(count_copies(p, g), oracle::copies(p, g)) << p.spec() << " n=" << n;
  }
}

TEST_F(PatternProperty, K2CopiesAreEdges) {
  for (int iter = 0; iter < 200; ++iter) {
    const auto g = oracle::random_graph(std::uniform_int_distribution<int>(1, 9)(rng), 0.5, rng);
    EXPECT_EQ(count_copies(make_clique(2), g), g.edge_count());
  }
}

TEST_F(PatternProperty, ContainsIffCountPositive) {
  for (int iter = 0; iter < 200; ++iter) {
    const auto g = oracle::random_graph(std::uniform_int_distribution<int>(3, 8)(rng), 0.45, rng);
    for (const auto& p : oracle_patterns()) {
      const auto emb = contains_pattern(p, g);
      EXPECT_EQ(emb.has_value(), count_copies(p, g) > 0) << p.spec();
      if (emb) {
        for (const Edge& e : p.edges()) EXPECT_TRUE(g.has_edge((*emb)[e.u], (*emb)[e.v]));
      }
    }
  }
}

TEST_F(PatternProperty, ContainsThroughMatchesDeletion) {
  for (int iter = 0; iter < 100; ++iter) {
    const auto g = oracle::random_graph(7, 0.5, rng);
    for (const auto& p : oracle_patterns())
      for (const Edge& e : g.edges()) {
        Graph without = g;
        without.remove_edge(e.u, e.v);
        EXPECT_EQ(contains_pattern_through(p, g, e),
                  count_copies(p, g) > count_copies(p, without));
      }
  }
}
