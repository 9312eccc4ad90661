#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "berge/berge.hpp"
#include "berge/constructions.hpp"
#include "berge/errors.hpp"
#include "berge/matching.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

const Hypergraph three_triples(4, {{0, 1, 2}, {0, 1, 3}, {1, 2, 3}});

std::size_t brute_matching_size(const Graph& g) {
  const auto edges = g.edges();
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t i) -> std::size_t {
    if (i == edges.size()) return 0;
    std::size_t best = rec(i + 1);
    const Edge e = edges[i];
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      best = std::max(best, 1 + rec(i + 1));
      used[e.u] = used[e.v] = 0;
    }
    return best;
  };
  return rec(0);
}

}  // namespace

TEST(FindBergeCopy, TriangleFromThreeTriples) {
  const auto w = find_berge_copy(three_triples, make_clique(3));
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(three_triples, make_clique(3), *w));
  EXPECT_EQ(w->embedding, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(oracle::has_berge_copy(three_triples, make_clique(3)));
}

TEST(FindBergeCopy, TooFewHyperedges) {
  EXPECT_FALSE(find_berge_copy(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}}), make_clique(3)));
}

TEST(FindBergeCopy, Construction1IsTriangleFree) {
  EXPECT_FALSE(find_berge_copy(construction1(8), make_clique(3)));
}

TEST(FindBergeCopy, ShadowTriangleIsNotEnough) {
  const Hypergraph single(3, {{0, 1, 2}});
  EXPECT_TRUE(contains_pattern(make_clique(3), shadow_graph(single)));
  EXPECT_FALSE(find_berge_copy(single, make_clique(3)));
}

TEST(FindBergeCopy, CapacityLimit) {
  EXPECT_THROW(BergeHost(BergeHost::max_vertices + 1), CapacityError);
  EXPECT_NO_THROW(BergeHost(BergeHost::max_vertices));
}

class BergeExhaustive : public ::testing::TestWithParam<int> {};

TEST_P(BergeExhaustive, AgreesWithDefinitionOnAllTripleSystems) {
  const int n = GetParam();
  const auto all = oracle::triples(n);
  for (const auto& f : {make_clique(3), make_book(2)}) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      const Hypergraph h(n, oracle::select(all, mask), 3);
      const auto w = find_berge_copy(h, f);
      ASSERT_EQ(w.has_value(), oracle::has_berge_copy(h, f)) << f.spec() << " mask=" << mask;
      if (w) {
        ASSERT_TRUE(verify_witness(h, f, *w));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, BergeExhaustive, ::testing::Values(3, 4, 5));

class BergeProperty : public ::testing::Test {
 protected:
  std::mt19937_64 rng{4242};
};

TEST_F(BergeProperty, AgreesWithDefinitionOnMixedHypergraphs) {
  const std::vector<PatternGraph> patterns = {make_clique(3), make_book(2), make_fan(2),
                                              make_clique(4), make_complete_multipartite({1, 2, 2})};
  for (int iter = 0; iter < 300; ++iter) {
    const int n = std::uniform_int_distribution<int>(3, 7)(rng);
    const int m = std::uniform_int_distribution<int>(1, 9)(rng);
    const auto h = oracle::random_mixed_hypergraph(n, 4, m, rng);
    for (const auto& f : patterns) {
      if (f.edge_count() > 8) continue;
      const auto w = find_berge_copy(h, f);
      ASSERT_EQ(w.has_value(), oracle::has_berge_copy(h, f)) << f.spec();
      if (w) {
        ASSERT_TRUE(verify_witness(h, f, *w));
      }
    }
  }
}

TEST_F(BergeProperty, ShadowNecessityAndMonotonicity) {
  for (int iter = 0; iter < 200; ++iter) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    auto h = oracle::random_hypergraph(n, 3, 0.15, rng);
    for (const auto& f : {make_clique(3), make_book(2), make_fan(2)}) {
      const bool before = find_berge_copy(h, f).has_value();
      if (before) {
        EXPECT_TRUE(contains_pattern(f, shadow_graph(h)));
      }
      for (const auto& e : oracle::triples(n)) {
        if (h.contains(e)) continue;
        Hypergraph bigger = h;
        bigger.add_edge(e);
        if (before) {
          EXPECT_TRUE(find_berge_copy(bigger, f));
        }
        break;
      }
    }
  }
}

TEST_F(BergeProperty, IncrementalCheckMatchesFullCheck) {
  for (int iter = 0; iter < 200; ++iter) {
    const int n = std::uniform_int_distribution<int>(4, 7)(rng);
    for (const auto& f : {make_clique(3), make_book(2)}) {
      BergeHost host(n);
      for (const auto& e : oracle::triples(n)) {
        if (std::bernoulli_distribution(0.5)(rng)) continue;
        host.push(e);
        const auto inc = find_berge_copy_using(host, f, host.size() - 1);
        const auto full = find_berge_copy(host, f);
        ASSERT_EQ(inc.has_value(), full.has_value());
        if (inc) host.pop();
      }
    }
  }
}

TEST_F(BergeProperty, HostPushPopRestoresState) {
  for (int iter = 0; iter < 50; ++iter) {
    const int n = 7;
    const auto h = oracle::random_hypergraph(n, 3, 0.3, rng);
    BergeHost host(h);
    host.push({0, 1, 2, 3});
    host.pop();
    const BergeHost fresh(h);
    for (int a = 0; a < n; ++a) {
      EXPECT_EQ(host.degree(a), fresh.degree(a));
      for (int b = 0; b < n; ++b) {
        EXPECT_EQ(host.multiplicity(a, b), h.size() ? (a == b ? 0 : pair_multiplicity(h, a, b)) : 0);
        EXPECT_EQ(host.has_edge(a, b), fresh.has_edge(a, b));
      }
    }
  }
}

TEST(CertifyCore, Examples) {
  const std::vector<Edge> tri = {{0, 1}, {0, 2}, {1, 2}};
  EXPECT_TRUE(certify_core(three_triples, tri));
  EXPECT_FALSE(certify_core(Hypergraph(3, {{0, 1, 2}}), tri));
  const Hypergraph h(5, {{1, 3, 4}, {0, 1, 4}, {0, 1, 2}});
  const std::vector<Edge> single = {{0, 1}};
  const auto a = certify_core(h, single);
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, std::vector<int>{1});
}

TEST(CertifyCore, RejectsNonShadowPairs) {
  const std::vector<Edge> bad = {{0, 3}};
  EXPECT_THROW(certify_core(Hypergraph(4, {{0, 1, 2}, {1, 2, 3}}), bad), InputError);
  const std::vector<Edge> out_of_range = {{0, 9}};
  EXPECT_THROW(certify_core(three_triples, out_of_range), InputError);
}

TEST_F(BergeProperty, CertifyCoreMatchesBruteForce) {
  int checked = 0;
  while (checked < 500) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const auto h = oracle::random_mixed_hypergraph(n, 4, std::uniform_int_distribution<int>(1, 8)(rng), rng);
    const auto g = shadow_graph(h);
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) tris.push_back({a, b, c});
    if (tris.empty()) continue;
    const auto t = tris[std::uniform_int_distribution<std::size_t>(0, tris.size() - 1)(rng)];
    const std::vector<Edge> core = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    const auto got = certify_core(h, core);
    const bool expected =
        oracle::injective_assignment_exists(h.edges(), {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}});
    ASSERT_EQ(got.has_value(), expected);
    if (got) {
      std::set<int> distinct(got->begin(), got->end());
      EXPECT_EQ(distinct.size(), 3u);
      for (std::size_t i = 0; i < 3; ++i)
        EXPECT_TRUE(oracle::in_edge(h.edge(static_cast<std::size_t>((*got)[i])), core[i].u, core[i].v));
    }
    ++checked;
  }
}

TEST(BookOfCores, Examples) {
  const auto b = find_book_of_cores(three_triples, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->pages.size(), 1u);
  // Every triangle of the K4 shadow certifies on its own.
  const auto b2 = find_book_of_cores(three_triples, 2);
  ASSERT_TRUE(b2);
  EXPECT_EQ(b2->pages.size(), 2u);
  EXPECT_FALSE(find_book_of_cores(three_triples, 3));
  EXPECT_FALSE(find_book_of_cores(construction1(8), 1));
  EXPECT_THROW(find_book_of_cores(three_triples, 0), ParameterError);
}

TEST(FanOfCores, Examples) {
  EXPECT_TRUE(find_fan_of_cores(three_triples, 1));
  EXPECT_FALSE(find_fan_of_cores(construction1(8), 1));
  const Hypergraph two(7, {{0, 1, 5}, {0, 2, 5}, {1, 2, 5}, {0, 3, 6}, {0, 4, 6}, {3, 4, 6}});
  const auto f = find_fan_of_cores(two, 2);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->center, 0);
  EXPECT_EQ(f->pages, (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_FALSE(find_fan_of_cores(two, 3));
  EXPECT_THROW(find_fan_of_cores(two, 0), ParameterError);
}

TEST_F(BergeProperty, CoresStructuresAreCertified) {
  for (int iter = 0; iter < 200; ++iter) {
    const int n = std::uniform_int_distribution<int>(4, 8)(rng);
    const auto h = oracle::random_hypergraph(n, 3, 0.35, rng);
    const auto g = shadow_graph(h);
    for (int s = 1; s <= 3; ++s) {
      if (const auto b = find_book_of_cores(h, s)) {
        ASSERT_EQ(b->pages.size(), static_cast<std::size_t>(s));
        for (int w : b->pages) {
          const std::vector<Edge> core = {{b->rootlet.u, b->rootlet.v},
                                          make_edge(b->rootlet.u, w), make_edge(b->rootlet.v, w)};
          EXPECT_TRUE(certify_core(h, core));
        }
      }
      if (const auto f = find_fan_of_cores(h, s)) {
        ASSERT_EQ(f->pages.size(), static_cast<std::size_t>(s));
        std::set<int> used{f->center};
        for (Edge p : f->pages) {
          EXPECT_TRUE(used.insert(p.u).second);
          EXPECT_TRUE(used.insert(p.v).second);
          const std::vector<Edge> core = {make_edge(f->center, p.u), make_edge(f->center, p.v), p};
          EXPECT_TRUE(certify_core(h, core));
        }
      }
    }
  }
}

TEST(BookOfCores, AbsentOnBookFreeConstructions) {
  for (int n = 8; n <= 14; ++n) EXPECT_FALSE(find_book_of_cores(construction1(n), 3 * 3 * 1));
  for (int t : {3, 4})
    for (int n = 4 * (t - 1); n <= 16; ++n) {
      if (n < 8) continue;
      EXPECT_FALSE(find_book_of_cores(construction2(n, t), 3 * 3 * t));
      EXPECT_FALSE(find_book_of_cores(construction3(n, t), 3 * 3 * t));
    }
}

TEST(VerifyWitness, RejectsBrokenWitnesses) {
  const auto f = make_clique(3);
  const auto w = find_berge_copy(three_triples, f);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_witness(three_triples, f, *w));
  auto reused = *w;
  reused.assignment[1] = reused.assignment[0];
  EXPECT_FALSE(verify_witness(three_triples, f, reused));
  // {1,2,3} does not contain the pair (0,1).
  const BergeWitness not_contained{{0, 1, 2}, {2, 0, 1}};
  EXPECT_FALSE(verify_witness(three_triples, f, not_contained));
  EXPECT_FALSE(verify_witness(three_triples, f, BergeWitness{{0, 0, 2}, w->assignment}));
  EXPECT_FALSE(verify_witness(three_triples, f, BergeWitness{{0, 1}, w->assignment}));
  EXPECT_FALSE(verify_witness(three_triples, f, BergeWitness{{0, 1, 7}, w->assignment}));
  EXPECT_FALSE(verify_witness(three_triples, f, BergeWitness{w->embedding, {0, 1, 9}}));
}

TEST(Matching, SaturatingMatcherMatchesBruteForce) {
  std::mt19937_64 rng(55);
  for (int iter = 0; iter < 500; ++iter) {
    const int left = std::uniform_int_distribution<int>(1, 6)(rng);
    const int right = std::uniform_int_distribution<int>(1, 7)(rng);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
    std::vector<Hyperedge> edges(static_cast<std::size_t>(right));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < left; ++i) {
      pairs.emplace_back(2 * i, 2 * i + 1);
      for (int j = 0; j < right; ++j)
        if (std::bernoulli_distribution(0.35)(rng)) {
          adj[i].push_back(j);
          edges[j].push_back(2 * i);
          edges[j].push_back(2 * i + 1);
        }
    }
    std::vector<std::span<const int>> spans(adj.begin(), adj.end());
    const auto got = saturating_matching(spans);
    ASSERT_EQ(got.has_value(), oracle::injective_assignment_exists(edges, pairs));
    if (got) {
      std::set<int> distinct(got->begin(), got->end());
      EXPECT_EQ(distinct.size(), static_cast<std::size_t>(left));
      for (int i = 0; i < left; ++i)
        EXPECT_TRUE(std::count(adj[i].begin(), adj[i].end(), (*got)[i]));
    }
  }
}

TEST(Matching, BlossomMatchesBruteForce) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto g = oracle::random_graph(n, 0.3, rng);
    const auto m = maximum_matching(g);
    EXPECT_EQ(m.size(), brute_matching_size(g));
    std::set<int> used;
    for (Edge e : m) {
      EXPECT_TRUE(g.has_edge(e.u, e.v));
      EXPECT_TRUE(used.insert(e.u).second);
      EXPECT_TRUE(used.insert(e.v).second);
    }
  }
}
