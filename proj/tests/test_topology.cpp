#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "starkit/graph.hpp"
#include "starkit/graph_io.hpp"
#include "starkit/iso.hpp"

using namespace starkit;

namespace {

std::size_t vertex(const Graph& g, const Label& l) { return g.index_of_checked(l); }

std::set<Label> neighbor_labels(const Graph& g, std::size_t v) {
  std::set<Label> out;
  for (auto w : g.neighbors(v)) out.insert(g.label(w));
  return out;
}

}  // namespace

TEST(Star, SmallCases) {
  const auto s2 = build_star(2);
  EXPECT_EQ(s2.vertex_count(), 2u);
  EXPECT_EQ(s2.edge_count(), 1u);
  EXPECT_TRUE(s2.adjacent(vertex(s2, {1, 2}), vertex(s2, {2, 1})));

  const auto s4 = build_star(4);
  EXPECT_EQ(s4.vertex_count(), 24u);
  EXPECT_EQ(s4.edge_count(), 36u);
  EXPECT_TRUE(s4.is_regular(3));
  EXPECT_TRUE(is_connected(s4));
  EXPECT_THROW(build_star(1), DomainError);
}

TEST(NkStar, Fig1Neighborhood) {
  const auto g = build_nkstar(4, 2);
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.edge_count(), 18u);
  EXPECT_EQ(neighbor_labels(g, vertex(g, {2, 1})), (std::set<Label>{{1, 2}, {3, 1}, {4, 1}}));
  EXPECT_EQ(vertex(g, {2, 1}), 3u);
}

TEST(NkStar, EdgeKindsAndRegularity) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      const auto g = build_nkstar(n, k);
      EXPECT_EQ(g.vertex_count(), arrangement_count(n, k));
      EXPECT_TRUE(g.is_regular(static_cast<std::size_t>(n - 1))) << n << "," << k;
      EXPECT_TRUE(is_connected(g));
      std::size_t swaps = 0, unswaps = 0;
      for (const auto& e : g.tagged_edges()) {
        const auto& a = g.label(e.u);
        const auto& b = g.label(e.v);
        if (e.tag.kind == EdgeKind::swap) {
          ++swaps;
          ASSERT_GE(e.tag.position, 2);
          Label s = a;
          std::swap(s[0], s[static_cast<std::size_t>(e.tag.position - 1)]);
          EXPECT_EQ(s, b);
        } else {
          ASSERT_EQ(e.tag.kind, EdgeKind::unswap);
          ++unswaps;
          EXPECT_NE(a[0], b[0]);
          EXPECT_TRUE(std::equal(a.begin() + 1, a.end(), b.begin() + 1));
        }
      }
      // each vertex has k-1 swap and n-k unswap neighbors
      EXPECT_EQ(2 * swaps, g.vertex_count() * static_cast<std::size_t>(k - 1));
      EXPECT_EQ(2 * unswaps, g.vertex_count() * static_cast<std::size_t>(n - k));
    }
}

TEST(NkStar, ExtremeKs) {
  for (int n = 3; n <= 6; ++n) {
    const auto g = build_nkstar(n, 1);
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_TRUE(edge_sets_equal(g, build_complete(n)));
  }
  EXPECT_TRUE(edge_sets_equal(build_nkstar(4, 3), build_star(4)));
  EXPECT_TRUE(edge_sets_equal(build_nkstar(5, 4), build_star(5)));
  EXPECT_THROW(build_nkstar(4, 4), DomainError);
  EXPECT_THROW(build_nkstar(4, 0), DomainError);
}

TEST(AlternatingNetwork, Counts) {
  const auto a3 = build_alternating_network(3);
  EXPECT_EQ(a3.vertex_count(), 3u);
  EXPECT_EQ(a3.edge_count(), 3u);
  const auto a4 = build_alternating_network(4);
  EXPECT_EQ(a4.vertex_count(), 12u);
  EXPECT_EQ(a4.edge_count(), 18u);
  EXPECT_TRUE(a4.is_regular(3));
  const auto a5 = build_alternating_network(5);
  EXPECT_EQ(a5.vertex_count(), 60u);
  EXPECT_TRUE(a5.is_regular(4));
  EXPECT_TRUE(is_connected(a5));
  for (const auto& l : a5.labels()) EXPECT_EQ(parity(Arrangement(l, 5)), Parity::even);
}

TEST(AlternatingNetwork, GeneratorsAreEvenAndClosedUnderInverse) {
  const auto gens = alternating_generators(6);
  ASSERT_EQ(gens.size(), 5u);
  for (const auto& g : gens) EXPECT_EQ(parity(Arrangement(g, 6)), Parity::even);
  // (123) and (132) are mutual inverses; the others are involutions.
  const Label id{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(compose_positions(compose_positions(id, gens[0]), gens[1]), id);
  for (std::size_t i = 2; i < gens.size(); ++i)
    EXPECT_EQ(compose_positions(compose_positions(id, gens[i]), gens[i]), id);
}

TEST(Graph, NeighborsAndErrors) {
  const auto k3 = build_complete(3);
  EXPECT_EQ(k3.neighbors(0), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(k3.neighbors(3), DomainError);
  EXPECT_THROW(Graph({{1}, {2}}, {{0, 0}}), StructureError);
  EXPECT_THROW(Graph({{1}, {2}}, {{0, 1}, {1, 0}}), StructureError);
  EXPECT_THROW(Graph({{2}, {1}}, {}), DomainError);
}

TEST(Graph, Components) {
  const auto g = graph_from_edges(5, {{0, 1}, {3, 4}});
  const auto comps = components(g, VertexSet::full(5));
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<std::size_t>{2}));
  EXPECT_EQ(comps[2], (std::vector<std::size_t>{3, 4}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(build_cycle(6)));
}

TEST(GraphIo, EdgelistFormat) {
  std::ostringstream os;
  write_edgelist(build_nkstar(4, 2), os);
  std::istringstream is(os.str());
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header, "# family=nkstar n=4 k=2 nv=12 ne=18");
  std::size_t lines = 0;
  for (std::string l; std::getline(is, l);) ++lines;
  EXPECT_EQ(lines, 18u);
}

TEST(GraphIo, DimacsFormat) {
  std::ostringstream os;
  write_dimacs(build_complete(3), os);
  EXPECT_EQ(os.str(), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  EXPECT_EQ(labels_json(build_nkstar(3, 1)).dump(), R"({"0":"1","1":"2","2":"3"})");
}

TEST(GraphIo, RoundTripBothFormats) {
  const std::vector<Graph> graphs{build_nkstar(4, 2), build_nkstar(5, 3), build_star(4),
                                  build_alternating_network(5), build_cycle(7), build_complete(5)};
  for (const auto& g : graphs) {
    std::stringstream el;
    write_edgelist(g, el);
    const auto back = read_graph(el);
    EXPECT_TRUE(edge_sets_equal(g, back));
    EXPECT_EQ(back.family()->name, g.family()->name);

    std::stringstream dm;
    write_dimacs(g, dm);
    const nlohmann::json map = labels_json(g);
    const auto back2 = read_graph(dm, &map);
    EXPECT_TRUE(edge_sets_equal(g, back2));
  }
}

TEST(GraphIo, RejectsMalformedInput) {
  std::istringstream bad_count("# family=nkstar n=4 k=2 nv=12 ne=19\n1.2 2.1\n");
  EXPECT_THROW(read_graph(bad_count), DomainError);
  std::istringstream bad_label("# family=nkstar n=4 k=2\n1.2 9.9\n");
  EXPECT_THROW(read_graph(bad_label), DomainError);
  std::istringstream bad_dimacs("p edge 2 1\ne 1 3\n");
  EXPECT_THROW(read_graph(bad_dimacs), DomainError);
  std::istringstream loop("1 1\n");
  EXPECT_THROW(read_graph(loop), StructureError);
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), IoError);
}

TEST(GraphIo, CustomEdgelistLabelsComeFromEdges) {
  std::istringstream is("# custom graph\n1 2\n2 3\n");
  const auto g = read_graph(is);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_FALSE(g.family().has_value());
}
