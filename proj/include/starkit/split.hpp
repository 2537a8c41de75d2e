#pragma once

// t-split graphs: every base vertex u becomes a block V_u of t independent
// vertices and every base edge uv a perfect matching between V_u and V_v.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starkit/errors.hpp"
#include "starkit/graph.hpp"
#include "starkit/perm.hpp"

namespace starkit {

enum class MatchingRule { parallel, suffix };

inline std::string to_string(MatchingRule r) {
  return r == MatchingRule::parallel ? "parallel" : "lemma2_6";
}

struct SplitMap {
  std::size_t t = 1;
  MatchingRule rule = MatchingRule::parallel;
  std::vector<std::size_t> block_of;              // split vertex -> base vertex
  std::vector<std::vector<std::size_t>> blocks;   // base vertex -> its t split vertices, ascending
  std::map<Edge, std::vector<Edge>> matchings;    // base edge (u<v) -> split edges (u<v)
};

struct SplitResult {
  Graph graph;
  SplitMap map;
};

// Parallel rule: the j-th copy of u is matched with the j-th copy of v. Copy j
// of base label L gets label L followed by j (1-based).
inline SplitResult split_graph(const Graph& g, std::size_t t) {
  if (t < 1) throw DomainError("split_graph: t must be >= 1");
  if (t == 1) {
    SplitMap m;
    m.t = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      m.block_of.push_back(v);
      m.blocks.push_back({v});
    }
    for (auto e : g.edges()) m.matchings[e] = {e};
    return {g, std::move(m)};
  }
  struct Copy {
    Label label;
    std::size_t base;
    std::size_t copy;
  };
  std::vector<Copy> copies;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t j = 0; j < t; ++j) {
      Label l = g.label(v);
      l.push_back(static_cast<int>(j + 1));
      copies.push_back({std::move(l), v, j});
    }
  }
  std::sort(copies.begin(), copies.end(), [](const Copy& a, const Copy& b) { return a.label < b.label; });
  SplitMap m;
  m.t = t;
  m.rule = MatchingRule::parallel;
  m.block_of.resize(copies.size());
  m.blocks.assign(g.vertex_count(), std::vector<std::size_t>(t));
  std::vector<Label> labels;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (i > 0 && copies[i].label == copies[i - 1].label)
      throw DomainError("split_graph: copy labels collide");
    m.block_of[i] = copies[i].base;
    m.blocks[copies[i].base][copies[i].copy] = i;
    labels.push_back(copies[i].label);
  }
  std::vector<TaggedEdge> edges;
  for (const auto& e : g.tagged_edges()) {
    auto& matched = m.matchings[{e.u, e.v}];
    for (std::size_t j = 0; j < t; ++j) {
      auto a = m.blocks[e.u][j], b = m.blocks[e.v][j];
      edges.push_back({std::min(a, b), std::max(a, b), e.tag});
      matched.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(matched.begin(), matched.end());
  }
  for (auto& b : m.blocks) std::sort(b.begin(), b.end());
  auto fam = g.family().value_or(FamilyTag{"custom", 0, 0});
  return {Graph(std::move(labels), edges, FamilyTag{"split", fam.n, fam.k}), std::move(m)};
}

// The (n-k)!-split of S_{n,k} on vertex set P(n). Block V_u holds u followed by
// every ordering of the unused symbols. A swap edge matches equal suffixes; an
// unswap edge u -> v (first digit replaced by s) matches x with the y whose
// suffix is x's suffix with s replaced by u's first digit.
inline SplitResult split_nkstar(int n, int k) {
  if (n < 3 || n > 6 || k < 2 || k > n - 1) throw DomainError("split_nkstar: need 2 <= k <= n-1, n <= 6");
  const Graph base = build_nkstar(n, k);
  const auto full = enumerate_arrangements(n, n);
  SplitMap m;
  m.t = static_cast<std::size_t>(factorial(n - k));
  m.rule = MatchingRule::suffix;
  m.block_of.resize(full.size());
  m.blocks.assign(base.vertex_count(), {});
  for (std::size_t x = 0; x < full.size(); ++x) {
    auto prefix = Arrangement(full[x].prefix(k), n);
    auto u = static_cast<std::size_t>(rank(prefix));
    m.block_of[x] = u;
    m.blocks[u].push_back(x);  // ascending x == lexicographic suffix order
  }
  std::vector<TaggedEdge> edges;
  for (const auto& e : base.tagged_edges()) {
    const auto& u_digits = base.label(e.u);
    auto& matched = m.matchings[{e.u, e.v}];
    for (auto x : m.blocks[e.u]) {
      Label y = base.label(e.v);
      Label suffix = full[x].suffix(k + 1);
      if (e.tag.kind == EdgeKind::unswap) {
        const int s = base.label(e.v)[0];
        auto pos = std::find(suffix.begin(), suffix.end(), s);
        if (pos == suffix.end()) throw StructureError("split_nkstar: unswap symbol not in suffix");
        *pos = u_digits[0];
      }
      y.insert(y.end(), suffix.begin(), suffix.end());
      auto yi = static_cast<std::size_t>(rank(Arrangement(y, n)));
      if (m.block_of[yi] != e.v) throw StructureError("split_nkstar: matched vertex outside target block");
      const int position = e.tag.kind == EdgeKind::swap
                               ? e.tag.position
                               : static_cast<int>(std::find(full[x].digits().begin(), full[x].digits().end(),
                                                            base.label(e.v)[0]) -
                                                  full[x].digits().begin()) + 1;
      edges.push_back({std::min(x, yi), std::max(x, yi), {EdgeKind::swap, position}});
      matched.emplace_back(std::min(x, yi), std::max(x, yi));
    }
    std::sort(matched.begin(), matched.end());
  }
  return {Graph(detail::labels_of(full), edges, FamilyTag{"split", n, k}), std::move(m)};
}

inline std::vector<std::size_t> lift_vertex_cut(const SplitMap& m, const std::vector<std::size_t>& cut) {
  std::vector<std::size_t> out;
  for (auto u : cut) {
    if (u >= m.blocks.size()) throw DomainError("lift_vertex_cut: base rank out of range");
    out.insert(out.end(), m.blocks[u].begin(), m.blocks[u].end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Edge> lift_edge_cut(const SplitMap& m, const std::vector<Edge>& cut) {
  std::vector<Edge> out;
  for (auto [a, b] : cut) {
    auto it = m.matchings.find({std::min(a, b), std::max(a, b)});
    if (it == m.matchings.end()) throw DomainError("lift_edge_cut: not a base edge");
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// True iff every base edge's matching is perfect between the two blocks and
// the split graph has no other edges.
inline bool matchings_are_perfect(const Graph& base, const Graph& split, const SplitMap& m) {
  std::size_t total = 0;
  for (auto e : base.edges()) {
    auto it = m.matchings.find(e);
    if (it == m.matchings.end() || it->second.size() != m.t) return false;
    std::vector<std::size_t> left, right;
    for (auto [a, b] : it->second) {
      if (!split.adjacent(a, b)) return false;
      auto [x, y] = m.block_of[a] == e.first ? std::pair{a, b} : std::pair{b, a};
      if (m.block_of[x] != e.first || m.block_of[y] != e.second) return false;
      left.push_back(x);
      right.push_back(y);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != m.blocks[e.first] || right != m.blocks[e.second]) return false;
    total += it->second.size();
  }
  return total == split.edge_count();
}

inline nlohmann::ordered_json split_map_json(const Graph& base, const Graph& split, const SplitMap& m) {
  nlohmann::ordered_json j;
  j["t"] = m.t;
  j["rule"] = to_string(m.rule);
  nlohmann::ordered_json blocks = nlohmann::ordered_json::object();
  for (std::size_t u = 0; u < m.blocks.size(); ++u) {
    auto arr = nlohmann::ordered_json::array();
    for (auto x : m.blocks[u]) arr.push_back(split.label_text(x));
    blocks[base.label_text(u)] = arr;
  }
  j["blocks"] = blocks;
  return j;
}

}  // namespace starkit
