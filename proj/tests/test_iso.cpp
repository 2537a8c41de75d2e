#include <gtest/gtest.h>

#include <random>

#include "starkit/iso.hpp"
#include "starkit/split.hpp"

using namespace starkit;

namespace {

// Same graph with vertex v renamed perm[v]; labels stay <1>..<n>.
Graph relabeled(const Graph& g, const std::vector<std::size_t>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return graph_from_edges(g.vertex_count(), edges);
}

Graph without_edge(const Graph& g, std::size_t skip) {
  auto edges = g.edges();
  edges.erase(edges.begin() + static_cast<long>(skip));
  std::vector<TaggedEdge> tagged;
  for (auto [u, v] : edges) tagged.push_back({u, v});
  return Graph(g.labels(), tagged, g.family());
}

}  // namespace

TEST(EdgeSetsEqual, Examples) {
  EXPECT_TRUE(edge_sets_equal(split_nkstar(4, 2).graph, build_star(4)));
  EXPECT_TRUE(edge_sets_equal(build_nkstar(4, 3), build_star(4)));
  EXPECT_FALSE(edge_sets_equal(build_star(4), without_edge(build_star(4), 5)));
  EXPECT_FALSE(edge_sets_equal(build_nkstar(4, 2), build_alternating_network(4)));
}

TEST(Isomorphic, AlternatingNetworkIsNkStar) {
  for (int n : {4, 5}) {
    const auto an = build_alternating_network(n);
    const auto nk = build_nkstar(n, n - 2);
    const auto w = isomorphic(an, nk);
    ASSERT_TRUE(w.has_value()) << n;
    EXPECT_TRUE(w->verified);
    EXPECT_TRUE(verify_isomorphism(an, nk, w->mapping));
  }
}

TEST(Isomorphic, Rejections) {
  EXPECT_FALSE(isomorphic(build_complete(4), build_cycle(4)).has_value());
  EXPECT_FALSE(isomorphic(build_cycle(6), split_graph(build_cycle(3), 2).graph).has_value());
  EXPECT_FALSE(isomorphic(build_star(4), without_edge(build_star(4), 0)).has_value());
  // Same degree sequence, different structure: the 3-prism vs K_{3,3}.
  const auto prism = graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  const auto k33 = graph_from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(isomorphic(prism, k33).has_value());
}

TEST(Isomorphic, RandomRelabelingsAndSymmetry) {
  std::mt19937 rng(11);
  for (const auto& g : {build_nkstar(4, 2), build_star(4), build_alternating_network(5), build_cycle(9)}) {
    std::vector<std::size_t> perm(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabeled(g, perm);
    const auto forward = isomorphic(g, h);
    const auto backward = isomorphic(h, g);
    ASSERT_TRUE(forward.has_value());
    ASSERT_TRUE(backward.has_value());
    EXPECT_TRUE(verify_isomorphism(g, h, forward->mapping));
    EXPECT_TRUE(verify_isomorphism(h, g, backward->mapping));
  }
}

TEST(Isomorphic, DisconnectedGraphs) {
  const auto a = split_graph(build_cycle(5), 2).graph;
  const auto b = relabeled(a, {9, 8, 7, 6, 5, 4, 3, 2, 1, 0});
  const auto w = isomorphic(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->verified);
}

TEST(Isomorphic, BudgetExhaustionIsReported) {
  EXPECT_THROW(isomorphic(build_alternating_network(5), build_nkstar(5, 3), IsoOptions{1}), ResourceError);
}

TEST(VerifyIsomorphism, RejectsBadMappings) {
  const auto g = build_cycle(4);
  EXPECT_TRUE(verify_isomorphism(g, g, {0, 1, 2, 3}));
  EXPECT_TRUE(verify_isomorphism(g, g, {1, 2, 3, 0}));
  EXPECT_FALSE(verify_isomorphism(g, g, {0, 2, 1, 3}));
  EXPECT_FALSE(verify_isomorphism(g, g, {0, 0, 1, 2}));
  EXPECT_FALSE(verify_isomorphism(g, g, {0, 1, 2}));
}

TEST(IsoJson, MappingByLabel) {
  const auto a = build_alternating_network(4);
  const auto b = build_nkstar(4, 2);
  const auto w = isomorphic(a, b);
  ASSERT_TRUE(w.has_value());
  const auto j = to_json(a, b, *w);
  EXPECT_EQ(j["mapping"].size(), 12u);
  EXPECT_TRUE(j["verified"].get<bool>());
}
