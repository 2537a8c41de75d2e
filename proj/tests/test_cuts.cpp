#include <gtest/gtest.h>

#include "starkit/cuts.hpp"
#include "starkit/oracle.hpp"

using namespace starkit;

namespace {

std::size_t at(const Graph& g, const Label& l) { return g.index_of_checked(l); }

}  // namespace

TEST(FragmentX, Examples) {
  const auto x = build_fragment_X({4, 2, 2});
  ASSERT_EQ(x.size(), 3u);
  EXPECT_EQ(x[0].digits(), (Label{2, 1}));
  EXPECT_EQ(x[1].digits(), (Label{3, 1}));
  EXPECT_EQ(x[2].digits(), (Label{4, 1}));
  EXPECT_EQ(build_fragment_X({5, 3, 3}).size(), 12u);
  EXPECT_THROW(build_fragment_X({4, 2, 1}), DomainError);
  EXPECT_THROW(build_fragment_X({4, 2, 3}), DomainError);
}

TEST(FragmentX, IsTheLastDigitFilter) {
  // n-1-h = 1: X is every arrangement of P(n,k) ending in 1.
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {5, 2}, {6, 4}}) {
    const int h = n - 2;
    std::vector<Label> expected;
    for (const auto& a : enumerate_arrangements(n, k))
      if (a.digits().back() == 1) expected.push_back(a.digits());
    std::vector<Label> got;
    for (const auto& a : build_fragment_X({n, k, h})) got.push_back(a.digits());
    EXPECT_EQ(got, expected) << n << "," << k;
  }
}

TEST(FragmentCuts, SizesMatchFormula) {
  const auto g = build_nkstar(4, 2);
  const auto [vc, ec] = build_cuts_from_X(g, 2, build_fragment_X({4, 2, 2}));
  EXPECT_EQ(vc.claimed_size, 3u);
  EXPECT_EQ(ec.claimed_size, 3u);
  EXPECT_EQ(vc.cut_vertices, (std::vector<Label>{{1, 2}, {1, 3}, {1, 4}}));
  const auto g53 = build_nkstar(5, 3);
  EXPECT_EQ(build_cuts_from_X(g53, 3, build_fragment_X({5, 3, 3})).first.claimed_size, 12u);
}

TEST(VerifyVertexCut, Examples) {
  const auto g = build_nkstar(4, 2);
  std::vector<std::size_t> t{at(g, {1, 2}), at(g, {1, 3}), at(g, {1, 4})};
  EXPECT_TRUE(verify_vertex_cut(g, t, 2).valid);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto r = verify_vertex_cut(g, {v}, 0);
    EXPECT_FALSE(r.valid);
    EXPECT_EQ(r.failure, CutFailure::still_connected);
  }
  const auto empty = verify_vertex_cut(g, {}, 0);
  EXPECT_EQ(empty.failure, CutFailure::still_connected);
  EXPECT_EQ(empty.reason, "still connected");
  EXPECT_EQ(verify_vertex_cut(g, {99}, 0).failure, CutFailure::unknown_element);
}

TEST(VerifyVertexCut, DroppingAnySeparatorVertexReconnects) {
  const auto g = build_nkstar(4, 2);
  const std::vector<std::size_t> t{at(g, {1, 2}), at(g, {1, 3}), at(g, {1, 4})};
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto smaller = t;
    smaller.erase(smaller.begin() + static_cast<long>(i));
    EXPECT_EQ(verify_vertex_cut(g, smaller, 2).failure, CutFailure::still_connected);
  }
}

TEST(VerifyEdgeCut, Examples) {
  const auto g = build_nkstar(4, 2);
  const auto [vc, ec] = build_cuts_from_X(g, 2, build_fragment_X({4, 2, 2}));
  EXPECT_TRUE(verify_certificate(g, ec).valid);
  std::vector<Edge> star;
  const auto v = at(g, {2, 1});
  for (auto w : g.neighbors(v)) star.emplace_back(std::min(v, w), std::max(v, w));
  const auto iso = verify_edge_cut(g, star, 1);
  EXPECT_EQ(iso.failure, CutFailure::low_degree);
  EXPECT_EQ(iso.witness, v);
  EXPECT_TRUE(verify_edge_cut(g, star, 0).valid);
  EXPECT_EQ(verify_edge_cut(g, {}, 0).failure, CutFailure::still_connected);
  EXPECT_EQ(verify_edge_cut(g, {{0, 11}}, 0).failure, CutFailure::unknown_element);
}

TEST(FragmentStructure, Examples) {
  const auto s = check_fragment_structure({4, 2, 2});
  EXPECT_TRUE(s.all());
  EXPECT_EQ(s.fragment_size, 3u);
  const auto s2 = check_fragment_structure({5, 3, 2});
  EXPECT_TRUE(s2.all());
  EXPECT_EQ(s2.fragment_size, 3u);
}

TEST(FragmentStructure, AllDeskScaleInstances) {
  for (int n = 3; n <= 6; ++n)
    for (int k = 2; k <= n - 1; ++k)
      for (int h = n - k; h <= n - 2; ++h) {
        if (arrangement_count(n, k) > 720) continue;
        const auto s = check_fragment_structure({n, k, h});
        EXPECT_TRUE(s.all()) << n << k << h;
        EXPECT_EQ(s.separator_size, kappa_nkstar_formula(n, k, h).value) << n << k << h;
        EXPECT_EQ(s.separator_size, s.fragment_size * static_cast<std::size_t>(n - 1 - h));
      }
}

TEST(FragmentCuts, RemainderCoreKeepsEverythingElse) {
  const auto g = build_nkstar(4, 2);
  std::vector<std::size_t> frag;
  for (const auto& a : build_fragment_X({4, 2, 2})) frag.push_back(at(g, a.digits()));
  const auto cuts = fragment_cuts(g, frag);
  VertexSet rest = VertexSet::full(g.vertex_count());
  for (auto v : cuts.fragment) rest.erase(v);
  for (auto v : cuts.separator) rest.erase(v);
  EXPECT_EQ(rest.count(), 6u);
  EXPECT_EQ(h_core(g, rest, 2), rest);
}

TEST(Certificate, JsonRoundTripAndTamper) {
  const auto g = build_nkstar(5, 3);
  const auto [vc, ec] = build_cuts_from_X(g, 3, build_fragment_X({5, 3, 3}));
  for (const auto& c : {vc, ec}) {
    const auto j = to_json(c);
    const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_TRUE(verify_certificate(g, back).valid);
    EXPECT_EQ(to_json(back), j);
  }
  auto tampered = vc;
  tampered.cut_vertices.pop_back();
  --tampered.claimed_size;
  EXPECT_FALSE(verify_certificate(g, tampered).valid);
  auto lying = vc;
  ++lying.claimed_size;
  EXPECT_FALSE(verify_certificate(g, lying).valid);
  auto overlap = vc;
  overlap.fragment.push_back(overlap.cut_vertices.front());
  EXPECT_FALSE(verify_certificate(g, overlap).valid);
}

TEST(Certificate, MalformedJsonIsDomainError) {
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"family":"nkstar"})")), DomainError);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"([1,2])")), DomainError);
  EXPECT_THROW(
      certificate_from_json(nlohmann::json::parse(
          R"({"family":"nkstar","n":4,"k":2,"h":2,"kind":"diagonal","fragment":[],"cut":[],"size":0})")),
      DomainError);
}
