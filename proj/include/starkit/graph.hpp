#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "starkit/bitset.hpp"
#include "starkit/errors.hpp"
#include "starkit/perm.hpp"

namespace starkit {

using Edge = std::pair<std::size_t, std::size_t>;

enum class EdgeKind : std::uint8_t { plain, swap, unswap };

// For swap edges `position` is the 1-based digit exchanged with the first one.
struct EdgeTag {
  EdgeKind kind = EdgeKind::plain;
  int position = 0;
  bool operator==(const EdgeTag&) const = default;
};

struct FamilyTag {
  std::string name;
  int n = 0;
  int k = 0;
  bool operator==(const FamilyTag&) const = default;
};

struct TaggedEdge {
  std::size_t u;
  std::size_t v;
  EdgeTag tag{};
};

// Immutable simple undirected graph. Vertex i carries labels()[i]; labels are
// strictly increasing in lexicographic order, so for generated families the
// vertex index is the arrangement rank.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<Label> labels, const std::vector<TaggedEdge>& edges,
        std::optional<FamilyTag> family = std::nullopt)
      : labels_(std::move(labels)), family_(std::move(family)) {
    const std::size_t n = labels_.size();
    for (std::size_t i = 1; i < n; ++i)
      if (!(labels_[i - 1] < labels_[i]))
        throw DomainError("graph labels must be strictly increasing");
    rows_.assign(n, VertexSet(n));
    lists_.assign(n, {});
    for (const auto& e : edges) {
      if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
      if (e.u == e.v) throw StructureError("self-loop at " + format_label(labels_[e.u]));
      if (rows_[e.u].contains(e.v))
        throw StructureError("duplicate edge " + format_label(labels_[e.u]) + " " +
                             format_label(labels_[e.v]));
      rows_[e.u].insert(e.v);
      rows_[e.v].insert(e.u);
      lists_[e.u].emplace_back(e.v, e.tag);
      lists_[e.v].emplace_back(e.u, e.tag);
      ++edge_count_;
    }
    for (auto& l : lists_)
      std::sort(l.begin(), l.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t v) const { return labels_.at(v); }
  std::string label_text(std::size_t v) const { return format_label(labels_.at(v)); }
  const std::optional<FamilyTag>& family() const { return family_; }

  std::optional<std::size_t> index_of(const Label& l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
  }
  std::size_t index_of_checked(const Label& l) const {
    auto idx = index_of(l);
    if (!idx) throw DomainError("unknown vertex label " + format_label(l));
    return *idx;
  }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].contains(v); }
  const VertexSet& row(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return lists_[v].size(); }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    if (v >= vertex_count()) throw DomainError("neighbors: vertex rank out of range");
    std::vector<std::size_t> out;
    out.reserve(lists_[v].size());
    for (const auto& [w, tag] : lists_[v]) out.push_back(w);
    return out;
  }
  const std::vector<std::pair<std::size_t, EdgeTag>>& tagged_neighbors(std::size_t v) const {
    return lists_[v];
  }

  std::optional<EdgeTag> edge_tag(std::size_t u, std::size_t v) const {
    const auto& l = lists_[u];
    auto it = std::lower_bound(l.begin(), l.end(), v,
                               [](const auto& p, std::size_t x) { return p.first < x; });
    if (it == l.end() || it->first != v) return std::nullopt;
    return it->second;
  }

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (const auto& [v, tag] : lists_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<TaggedEdge> tagged_edges() const {
    std::vector<TaggedEdge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < vertex_count(); ++u)
      for (const auto& [v, tag] : lists_[u])
        if (u < v) out.push_back({u, v, tag});
    return out;
  }

  std::size_t min_degree() const {
    std::size_t m = vertex_count() == 0 ? 0 : degree(0);
    for (std::size_t v = 1; v < vertex_count(); ++v) m = std::min(m, degree(v));
    return m;
  }
  bool is_regular(std::size_t d) const {
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (degree(v) != d) return false;
    return true;
  }

 private:
  std::vector<Label> labels_;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<std::pair<std::size_t, EdgeTag>>> lists_;
  std::size_t edge_count_ = 0;
  std::optional<FamilyTag> family_;
};

// Connected components of G restricted to `alive`, each sorted; components are
// ordered by their smallest vertex, and traversal starts there.
inline std::vector<std::vector<std::size_t>> components(const Graph& g, const VertexSet& alive) {
  std::vector<std::vector<std::size_t>> out;
  VertexSet seen(g.vertex_count());
  alive.for_each([&](std::size_t s) {
    if (seen.contains(s)) return;
    std::vector<std::size_t> comp{s};
    seen.insert(s);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      auto frontier = (g.row(comp[i]) & alive) - seen;
      frontier.for_each([&](std::size_t w) {
        seen.insert(w);
        comp.push_back(w);
      });
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g, VertexSet::full(g.vertex_count())).size() == 1;
}

namespace detail {

inline std::vector<Label> labels_of(const std::vector<Arrangement>& as) {
  std::vector<Label> out;
  out.reserve(as.size());
  for (const auto& a : as) out.push_back(a.digits());
  return out;
}

inline std::vector<Label> numbered_labels(std::size_t count) {
  std::vector<Label> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back({static_cast<int>(i)});
  return out;
}

}  // namespace detail

// (n,k)-star graph: swap edges exchange the first digit with digit i <= k,
// unswap edges replace the first digit by an unused symbol.
inline Graph build_nkstar(int n, int k) {
  if (n < 2 || n > kMaxSymbols || k < 1 || k > n - 1)
    throw DomainError("build_nkstar: need 1 <= k <= n-1");
  if (arrangement_count(n, k) > 1'000'000) throw DomainError("build_nkstar: too many vertices");
  auto verts = enumerate_arrangements(n, k);
  std::vector<TaggedEdge> edges;
  for (std::size_t u = 0; u < verts.size(); ++u) {
    const auto& a = verts[u];
    for (int i = 2; i <= k; ++i) {
      auto v = static_cast<std::size_t>(rank(swap_digit(a, i)));
      if (u < v) edges.push_back({u, v, {EdgeKind::swap, i}});
    }
    for (int s : a.unused_symbols()) {
      auto v = static_cast<std::size_t>(rank(replace_first(a, s)));
      if (u < v) edges.push_back({u, v, {EdgeKind::unswap, 0}});
    }
  }
  return Graph(detail::labels_of(verts), edges, FamilyTag{"nkstar", n, k});
}

inline Graph build_star(int n) {
  if (n < 2 || n > 8) throw DomainError("build_star: need 2 <= n <= 8");
  auto verts = enumerate_arrangements(n, n);
  std::vector<TaggedEdge> edges;
  for (std::size_t u = 0; u < verts.size(); ++u) {
    for (int i = 2; i <= n; ++i) {
      auto v = static_cast<std::size_t>(rank(swap_digit(verts[u], i)));
      if (u < v) edges.push_back({u, v, {EdgeKind::swap, i}});
    }
  }
  return Graph(detail::labels_of(verts), edges, FamilyTag{"star", n, n});
}

// K_n on labels <1>..<n>; the same edge set as build_nkstar(n, 1).
inline Graph build_complete(int n) {
  if (n < 1 || n > kMaxSymbols) throw DomainError("build_complete: need 1 <= n <= 20");
  std::vector<TaggedEdge> edges;
  for (std::size_t u = 0; u < static_cast<std::size_t>(n); ++u)
    for (std::size_t v = u + 1; v < static_cast<std::size_t>(n); ++v) edges.push_back({u, v});
  return Graph(detail::numbered_labels(static_cast<std::size_t>(n)), edges,
               FamilyTag{"complete", n, 1});
}

inline Graph build_cycle(int m) {
  if (m < 3) throw DomainError("build_cycle: need m >= 3");
  std::vector<TaggedEdge> edges;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); ++i) edges.push_back({i, i + 1});
  edges.push_back({0, static_cast<std::size_t>(m) - 1});
  return Graph(detail::numbered_labels(static_cast<std::size_t>(m)), edges, FamilyTag{"cycle", m, 1});
}

inline Graph build_path(int m) {
  if (m < 1) throw DomainError("build_path: need m >= 1");
  std::vector<TaggedEdge> edges;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m); ++i) edges.push_back({i, i + 1});
  return Graph(detail::numbered_labels(static_cast<std::size_t>(m)), edges, FamilyTag{"path", m, 1});
}

// Graph on labels <1>..<count> from 0-based index pairs; for ad-hoc test graphs.
inline Graph graph_from_edges(std::size_t count, const std::vector<Edge>& edges) {
  std::vector<TaggedEdge> tagged;
  for (auto [u, v] : edges) tagged.push_back({std::min(u, v), std::max(u, v)});
  return Graph(detail::numbered_labels(count), tagged, FamilyTag{"custom", static_cast<int>(count), 1});
}

// Right action of a position permutation: (p * g)[i] = p[g(i)], 1-based.
inline Label compose_positions(const Label& p, const std::vector<int>& g) {
  Label q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[static_cast<std::size_t>(g[i] - 1)];
  return q;
}

// Generators (1 2 3), (1 3 2) and (1 2)(3 i) for 4 <= i <= n, as position maps.
inline std::vector<std::vector<int>> alternating_generators(int n) {
  std::vector<std::vector<int>> gens;
  auto identity = [n] {
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i + 1;
    return g;
  };
  auto c123 = identity();
  c123[0] = 2, c123[1] = 3, c123[2] = 1;
  auto c132 = identity();
  c132[0] = 3, c132[1] = 1, c132[2] = 2;
  gens.push_back(c123);
  gens.push_back(c132);
  for (int i = 4; i <= n; ++i) {
    auto g = identity();
    std::swap(g[0], g[1]);
    std::swap(g[2], g[static_cast<std::size_t>(i - 1)]);
    gens.push_back(g);
  }
  return gens;
}

// Alternating group network: Cayley graph of A_n on the generators above.
inline Graph build_alternating_network(int n) {
  if (n < 3 || n > 6) throw DomainError("build_alternating_network: need 3 <= n <= 6");
  std::vector<Label> labels;
  for (const auto& p : enumerate_arrangements(n, n))
    if (parity(p) == Parity::even) labels.push_back(p.digits());
  const auto gens = alternating_generators(n);
  std::vector<TaggedEdge> edges;
  auto locate = [&](const Label& l) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  for (std::size_t u = 0; u < labels.size(); ++u) {
    for (const auto& g : gens) {
      auto v = locate(compose_positions(labels[u], g));
      if (u < v) edges.push_back({u, v});
    }
  }
  return Graph(std::move(labels), edges, FamilyTag{"an", n, n});
}

}  // namespace starkit
