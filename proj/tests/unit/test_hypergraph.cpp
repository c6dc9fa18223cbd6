#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "sparsek/hypergraph.hpp"

namespace sparsek {
namespace {

using testing::make_hypergraph;

TEST(Edge, SortsAndRejectsRepeats) {
  Edge e{3, 1, 2};
  EXPECT_EQ(e[0], 1u);
  EXPECT_EQ(e[2], 3u);
  EXPECT_TRUE(e.contains(2));
  EXPECT_FALSE(e.contains(4));
  EXPECT_THROW((Edge{1, 1, 2}), InvalidArgument);
  EXPECT_THROW((Edge{0, 1, 2, 3, 4, 5, 6}), InvalidArgument);
}

TEST(Hypergraph, ValidatesEdges) {
  EXPECT_THROW(make_hypergraph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(make_hypergraph(3, {{0}}), InvalidArgument);
  EXPECT_THROW(make_hypergraph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  const auto h = Hypergraph::with_unique_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1, 2}});
  EXPECT_EQ(h.num_edges(), 2u);
}

TEST(Hypergraph, ArityProfile) {
  const auto h = make_hypergraph(6, {{0, 1}, {0, 1, 2}, {3, 4, 5}, {0, 2, 4, 5}});
  const auto prof = h.arity_profile();
  EXPECT_EQ(prof[2], 1u);
  EXPECT_EQ(prof[3], 2u);
  EXPECT_EQ(prof[4], 1u);
  EXPECT_EQ(h.max_arity(), 4);
}

TEST(UnderlyingGraph, KeepsOnlyPairs) {
  const auto g = underlying_graph(make_hypergraph(3, {{0, 1}, {0, 1, 2}}));
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(underlying_graph(make_hypergraph(4, {{0, 1, 2}})).num_edges(), 0u);
}

TEST(UnderlyingGraph, MatchesFilterOnRandomInput) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testing::random_mixed(rng, 10, 4, 25);
    const auto g = underlying_graph(h);
    std::set<std::pair<Vertex, Vertex>> expect;
    for (const auto& e : h.edges()) {
      if (e.size() == 2) expect.emplace(e[0], e[1]);
    }
    const auto got = g.edge_list();
    const std::set<std::pair<Vertex, Vertex>> have(got.begin(), got.end());
    EXPECT_EQ(have, expect);
    EXPECT_EQ(g.num_edges(), h.arity_profile()[2]);
  }
}

TEST(Complement, SmallCases) {
  EXPECT_EQ(complement(testing::complete_graph(4)).num_edges(), 0u);
  EXPECT_EQ(complement(Graph(3)), testing::complete_graph(3));
}

TEST(Complement, IsAnInvolution) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(12, 0.4, rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(g.num_edges() + complement(g).num_edges(), 66u);
  }
}

TEST(ClosedNeighborhood, StarAndIsolated) {
  const auto star = testing::make_graph(5, {{0, 1}, {0, 2}, {0, 3}});
  const std::vector<Vertex> center{0};
  EXPECT_EQ(closed_neighborhood(star, center), (std::vector<Vertex>{0, 1, 2, 3}));
  const std::vector<Vertex> lonely{4};
  EXPECT_EQ(closed_neighborhood(star, lonely), lonely);
}

TEST(ClosedNeighborhood, MatchesRowUnion) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(14, 0.25, rng);
    std::vector<Vertex> w;
    for (Vertex v = 0; v < 14; ++v) {
      if (rng.bernoulli(0.2)) w.push_back(v);
    }
    std::set<Vertex> expect(w.begin(), w.end());
    for (Vertex v : w) {
      for (Vertex u : g.neighbors(v)) expect.insert(u);
    }
    EXPECT_EQ(closed_neighborhood(g, w), std::vector<Vertex>(expect.begin(), expect.end()));
  }
}

TEST(Matchings, DisjointPairsOnly) {
  const auto h = make_hypergraph(7, {{0, 1, 2}, {3, 4, 5}, {0, 3, 6}});
  const auto pairs = enumerate_matchings(h, 2);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].edges, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(pairs[0].span, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));

  const auto empty = enumerate_matchings(h, 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].edges.empty());
}

TEST(Matchings, SkipPairsAndRespectArityCap) {
  const auto h = make_hypergraph(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
  EXPECT_EQ(enumerate_matchings(h, 1).size(), 2u);
  EXPECT_EQ(enumerate_matchings(h, 1, 3).size(), 1u);
  EXPECT_EQ(enumerate_matchings(h, 2).size(), 1u);
  EXPECT_EQ(enumerate_matchings(h, 2, 3).size(), 0u);
}

TEST(Matchings, PairCountMatchesQuadraticFilter) {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = testing::random_mixed(rng, 11, 5, 12);
    std::size_t expect = 0;
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      for (std::size_t j = i + 1; j < h.num_edges(); ++j) {
        if (h.edge(i).size() >= 3 && h.edge(j).size() >= 3 && !h.edge(i).intersects(h.edge(j))) ++expect;
      }
    }
    const auto got = enumerate_matchings(h, 2);
    EXPECT_EQ(got.size(), expect);
    std::set<std::vector<std::size_t>> unique;
    for (const auto& m : got) {
      EXPECT_TRUE(std::is_sorted(m.edges.begin(), m.edges.end()));
      EXPECT_EQ(m.span.size(), h.edge(m.edges[0]).size() + h.edge(m.edges[1]).size());
      unique.insert(m.edges);
    }
    EXPECT_EQ(unique.size(), got.size());
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(),
                               [](const Matching& a, const Matching& b) { return a.edges < b.edges; }));
  }
}

TEST(Matchings, VisitorCanStopEarly) {
  const auto h = make_hypergraph(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  int seen = 0;
  for_each_matching(h, 1, std::nullopt, [&](const Matching&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2);
}

TEST(Induced, DropsEdgesLeavingTheSet) {
  const auto h = make_hypergraph(3, {{0, 1, 2}});
  const std::vector<Vertex> x{0, 1};
  EXPECT_EQ(induced(h, x).hypergraph.num_edges(), 0u);
}

TEST(Induced, RelabelsAndMatchesFilter) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testing::random_mixed(rng, 10, 4, 15);
    std::vector<Vertex> x;
    for (Vertex v = 0; v < 10; ++v) {
      if (rng.bernoulli(0.6)) x.push_back(v);
    }
    const auto sub = induced(h, x);
    std::size_t expect = 0;
    for (const auto& e : h.edges()) {
      if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return std::binary_search(x.begin(), x.end(), v); })) ++expect;
    }
    EXPECT_EQ(sub.hypergraph.num_edges(), expect);
    EXPECT_EQ(sub.original, x);
    EXPECT_EQ(sub.hypergraph.num_vertices(), x.size());
  }
  std::vector<Vertex> all{0, 1, 2, 3};
  const auto h = make_hypergraph(4, {{0, 1}, {1, 2, 3}});
  const auto same = induced(h, all);
  EXPECT_EQ(std::vector<Edge>(same.hypergraph.edges().begin(), same.hypergraph.edges().end()),
            std::vector<Edge>(h.edges().begin(), h.edges().end()));
}

TEST(SortByArity, IsStablePermutation) {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = testing::random_mixed(rng, 9, 5, 10);
    const auto shuffled = reorder_edges(h, testing::random_permutation(rng, h.num_edges()));
    const auto sorted = sort_by_arity(shuffled);
    std::multiset<Edge> a(shuffled.edges().begin(), shuffled.edges().end());
    std::multiset<Edge> b(sorted.edges().begin(), sorted.edges().end());
    EXPECT_EQ(a, b);
    EXPECT_TRUE(std::is_sorted(sorted.edges().begin(), sorted.edges().end(),
                               [](const Edge& x, const Edge& y) { return x.size() < y.size(); }));
    // Stability: equal-arity edges keep their relative order.
    for (int r = 2; r <= 5; ++r) {
      std::vector<Edge> before, after;
      for (const auto& e : shuffled.edges()) {
        if (static_cast<int>(e.size()) == r) before.push_back(e);
      }
      for (const auto& e : sorted.edges()) {
        if (static_cast<int>(e.size()) == r) after.push_back(e);
      }
      EXPECT_EQ(before, after);
    }
  }
}

TEST(IsIndependent, ChecksContainment) {
  const auto h = make_hypergraph(5, {{0, 1}, {2, 3, 4}});
  EXPECT_TRUE(is_independent(h, std::vector<Vertex>{0, 2, 3}));
  EXPECT_FALSE(is_independent(h, std::vector<Vertex>{0, 1}));
  EXPECT_FALSE(is_independent(h, std::vector<Vertex>{0, 2, 3, 4}));
}

}  // namespace
}  // namespace sparsek
