#pragma once

// Cut verification and the explicit optimal cuts of S_{n,k} for n-k <= h <= n-2.
//
// The fragment X is the set of k-arrangements ending in 1 2 ... (n-1-h); T is
// its outer neighborhood and F the X-T edges.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "starkit/errors.hpp"
#include "starkit/graph.hpp"
#include "starkit/perm.hpp"

namespace starkit {

enum class CutKind { vertex, edge };

inline std::string to_string(CutKind k) { return k == CutKind::vertex ? "vertex" : "edge"; }

enum class CutFailure { none, unknown_element, still_connected, low_degree };

struct CutVerdict {
  bool valid = false;
  CutFailure failure = CutFailure::none;
  std::string reason;
  std::optional<std::size_t> witness;  // offending vertex, if any

  explicit operator bool() const { return valid; }
};

namespace detail {

inline CutVerdict check_remainder(const Graph& g, const VertexSet& alive,
                                  const std::vector<std::size_t>& degree_in_remainder, int h) {
  auto comps = components(g, alive);
  if (comps.size() < 2) {
    CutVerdict v{false, CutFailure::still_connected, "still connected", std::nullopt};
    if (!comps.empty()) v.witness = comps.front().front();
    return v;
  }
  std::optional<std::size_t> worst;
  alive.for_each([&](std::size_t x) {
    if (!worst && degree_in_remainder[x] < static_cast<std::size_t>(h)) worst = x;
  });
  if (worst) {
    return {false, CutFailure::low_degree,
            "min degree " + std::to_string(degree_in_remainder[*worst]) + " < " + std::to_string(h) + " at " +
                g.label_text(*worst),
            worst};
  }
  return {true, CutFailure::none, "valid", std::nullopt};
}

}  // namespace detail

// T is an h-vertex-cut iff G - T is disconnected with min degree >= h.
inline CutVerdict verify_vertex_cut(const Graph& g, const std::vector<std::size_t>& cut, int h) {
  const std::size_t n = g.vertex_count();
  VertexSet alive = VertexSet::full(n);
  for (auto v : cut) {
    if (v >= n) return {false, CutFailure::unknown_element, "cut vertex out of range", std::nullopt};
    alive.erase(v);
  }
  std::vector<std::size_t> deg(n, 0);
  alive.for_each([&](std::size_t v) { deg[v] = g.row(v).count_common(alive); });
  return detail::check_remainder(g, alive, deg, h);
}

// F is an h-edge-cut iff G - F is disconnected with min degree >= h.
inline CutVerdict verify_edge_cut(const Graph& g, const std::vector<Edge>& cut, int h) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (std::size_t v = 0; v < n; ++v) rows.push_back(g.row(v));
  for (auto [a, b] : cut) {
    if (a >= n || b >= n || !g.adjacent(a, b))
      return {false, CutFailure::unknown_element, "not an edge of the graph", std::nullopt};
    rows[a].erase(b);
    rows[b].erase(a);
  }
  std::vector<TaggedEdge> kept;
  for (std::size_t u = 0; u < n; ++u)
    rows[u].for_each([&](std::size_t v) {
      if (u < v) kept.push_back({u, v});
    });
  const Graph reduced(g.labels(), kept);
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v) deg[v] = reduced.degree(v);
  return detail::check_remainder(reduced, VertexSet::full(n), deg, h);
}

struct FamilyParams {
  int n = 0;
  int k = 0;
  int h = -1;
};

namespace detail {
inline void check_high_range(const FamilyParams& p) {
  if (p.n < 3 || p.n > kMaxSymbols || p.k < 2 || p.k > p.n - 1)
    throw DomainError("need 2 <= k <= n-1");
  if (p.h < p.n - p.k || p.h > p.n - 2) throw DomainError("need n-k <= h <= n-2");
}
}  // namespace detail

// Arrangements of P(n,k) whose last n-1-h digits are 1 2 ... (n-1-h), sorted.
inline std::vector<Arrangement> build_fragment_X(const FamilyParams& p) {
  detail::check_high_range(p);
  const int tail = p.n - 1 - p.h;
  const int head = p.k - tail;  // = h+1-(n-k) >= 1
  std::vector<Arrangement> out;
  for (const auto& a : enumerate_arrangements(p.h + 1, head)) {
    Label d;
    for (int x : a.digits()) d.push_back(x + tail);
    for (int s = 1; s <= tail; ++s) d.push_back(s);
    out.emplace_back(std::move(d), p.n);
  }
  return out;
}

struct CutCertificate {
  std::string family = "nkstar";
  FamilyParams params;
  CutKind kind = CutKind::vertex;
  std::vector<Label> fragment;
  std::vector<Label> cut_vertices;
  std::vector<std::pair<Label, Label>> cut_edges;
  std::size_t claimed_size = 0;
};

// Rank-level form of the fragment cuts.
struct FragmentCuts {
  std::vector<std::size_t> fragment;
  std::vector<std::size_t> separator;  // T
  std::vector<Edge> boundary;          // F
};

inline FragmentCuts fragment_cuts(const Graph& g, const std::vector<std::size_t>& fragment) {
  const std::size_t n = g.vertex_count();
  auto x = VertexSet::of(n, fragment);
  VertexSet t(n);
  FragmentCuts out;
  out.fragment = fragment;
  std::sort(out.fragment.begin(), out.fragment.end());
  for (auto v : out.fragment) {
    for (const auto& [w, tag] : g.tagged_neighbors(v)) {
      if (x.contains(w)) continue;
      t.insert(w);
      out.boundary.emplace_back(std::min(v, w), std::max(v, w));
    }
  }
  std::sort(out.boundary.begin(), out.boundary.end());
  out.separator = t.to_vector();
  return out;
}

inline CutCertificate to_certificate(const Graph& g, const FamilyParams& p, CutKind kind,
                                     const std::vector<std::size_t>& fragment,
                                     const std::vector<std::size_t>& cut_vertices,
                                     const std::vector<Edge>& cut_edges) {
  CutCertificate c;
  c.family = g.family() ? g.family()->name : "custom";
  c.params = p;
  c.kind = kind;
  for (auto v : fragment) c.fragment.push_back(g.label(v));
  if (kind == CutKind::vertex) {
    for (auto v : cut_vertices) c.cut_vertices.push_back(g.label(v));
    c.claimed_size = c.cut_vertices.size();
  } else {
    for (auto [u, v] : cut_edges) c.cut_edges.emplace_back(g.label(u), g.label(v));
    c.claimed_size = c.cut_edges.size();
  }
  return c;
}

// T = N(X) \ X and F = E(X, T) for the fragment X of G's parameters. Checks
// |F| = |T| = |X|(n-1-h) and that every T vertex hangs off X by a swap edge.
inline std::pair<CutCertificate, CutCertificate> build_cuts_from_X(const Graph& g, int h,
                                                                   const std::vector<Arrangement>& fragment) {
  if (!g.family() || g.family()->name != "nkstar") throw DomainError("build_cuts_from_X: needs an nkstar graph");
  const FamilyParams p{g.family()->n, g.family()->k, h};
  detail::check_high_range(p);
  std::vector<std::size_t> ranks;
  for (const auto& a : fragment) ranks.push_back(g.index_of_checked(a.digits()));
  auto cuts = fragment_cuts(g, ranks);
  const auto expected = cuts.fragment.size() * static_cast<std::size_t>(p.n - 1 - p.h);
  if (cuts.separator.size() != expected || cuts.boundary.size() != expected)
    throw StructureError("fragment cut sizes differ from |X|(n-1-h)");
  for (auto [u, v] : cuts.boundary) {
    if (g.edge_tag(u, v)->kind != EdgeKind::swap)
      throw StructureError("separator vertex reached by a non-swap edge");
  }
  return {to_certificate(g, p, CutKind::vertex, cuts.fragment, cuts.separator, {}),
          to_certificate(g, p, CutKind::edge, cuts.fragment, {}, cuts.boundary)};
}

struct FragmentStructure {
  std::size_t fragment_size = 0;
  std::size_t separator_size = 0;
  bool induced_is_smaller_star = false;    // G[X] equals S_{h+1, h+1-(n-k)} after relabeling
  bool fragment_degrees_split = false;     // h inside X, n-1-h into T, private T-neighbors
  bool outside_single_separator_neighbor = false;  // every u outside X ∪ T has <= 1 neighbor in T

  bool all() const {
    return induced_is_smaller_star && fragment_degrees_split && outside_single_separator_neighbor;
  }
};

// Checks the three structural facts behind the fragment cut on S_{n,k}. The
// relabeling sends the j-th smallest symbol not in the fixed tail to j.
inline FragmentStructure check_fragment_structure(const FamilyParams& p) {
  detail::check_high_range(p);
  if (arrangement_count(p.n, p.k) > 1'000'000) throw DomainError("check_fragment_structure: graph too large");
  const Graph g = build_nkstar(p.n, p.k);
  const auto xs = build_fragment_X(p);
  std::vector<std::size_t> ranks;
  for (const auto& a : xs) ranks.push_back(g.index_of_checked(a.digits()));
  const auto cuts = fragment_cuts(g, ranks);
  const std::size_t n = g.vertex_count();
  const auto x = VertexSet::of(n, cuts.fragment);
  const auto t = VertexSet::of(n, cuts.separator);

  FragmentStructure r;
  r.fragment_size = cuts.fragment.size();
  r.separator_size = cuts.separator.size();

  // (a) induced subgraph vs the smaller (n,k)-star
  const int tail = p.n - 1 - p.h;
  const int small_n = p.h + 1;
  const int small_k = p.k - tail;
  const Graph small = build_nkstar(small_n, small_k);
  bool iso = small.vertex_count() == cuts.fragment.size();
  std::vector<std::size_t> image(n, 0);
  if (iso) {
    for (auto v : cuts.fragment) {
      Label head(g.label(v).begin(), g.label(v).begin() + small_k);
      for (int& d : head) d -= tail;
      auto idx = small.index_of(head);
      if (!idx) {
        iso = false;
        break;
      }
      image[v] = *idx;
    }
  }
  if (iso) {
    std::size_t induced_edges = 0;
    for (auto u : cuts.fragment)
      for (const auto& [w, tag] : g.tagged_neighbors(u)) {
        if (!x.contains(w) || w < u) continue;
        ++induced_edges;
        if (!small.adjacent(image[u], image[w])) iso = false;
      }
    iso = iso && induced_edges == small.edge_count();
  }
  r.induced_is_smaller_star = iso;

  // (b) degree split and private separator neighbors
  bool split = true;
  VertexSet claimed(n);
  for (auto v : cuts.fragment) {
    const auto inside = g.row(v).count_common(x);
    const auto into_t = g.row(v).count_common(t);
    if (inside != static_cast<std::size_t>(p.h) || into_t != static_cast<std::size_t>(tail)) split = false;
    const auto tn = g.row(v) & t;
    if (claimed.intersects(tn)) split = false;
    claimed |= tn;
  }
  r.fragment_degrees_split = split;

  // (c) outside vertices see at most one separator vertex
  bool single = true;
  for (std::size_t u = 0; u < n && single; ++u) {
    if (x.contains(u) || t.contains(u)) continue;
    if (g.row(u).count_common(t) > 1) single = false;
  }
  r.outside_single_separator_neighbor = single;
  return r;
}

inline nlohmann::ordered_json to_json(const CutCertificate& c) {
  nlohmann::ordered_json j;
  j["family"] = c.family;
  j["n"] = c.params.n;
  j["k"] = c.params.k;
  j["h"] = c.params.h;
  j["kind"] = to_string(c.kind);
  auto frag = nlohmann::ordered_json::array();
  for (const auto& l : c.fragment) frag.push_back(format_label(l));
  j["fragment"] = frag;
  auto cut = nlohmann::ordered_json::array();
  if (c.kind == CutKind::vertex) {
    for (const auto& l : c.cut_vertices) cut.push_back(format_label(l));
  } else {
    for (const auto& [a, b] : c.cut_edges) {
      const auto& lo = std::min(a, b);
      const auto& hi = std::max(a, b);
      cut.push_back({format_label(lo), format_label(hi)});
    }
  }
  j["cut"] = cut;
  j["size"] = c.claimed_size;
  return j;
}

inline CutCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    CutCertificate c;
    c.family = j.value("family", std::string("nkstar"));
    c.params = {j.at("n").get<int>(), j.at("k").get<int>(), j.at("h").get<int>()};
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "vertex")
      c.kind = CutKind::vertex;
    else if (kind == "edge")
      c.kind = CutKind::edge;
    else
      throw DomainError("unknown cut kind '" + kind + "'");
    for (const auto& l : j.value("fragment", nlohmann::json::array())) c.fragment.push_back(parse_label(l.get<std::string>()));
    for (const auto& item : j.at("cut")) {
      if (c.kind == CutKind::vertex) {
        c.cut_vertices.push_back(parse_label(item.get<std::string>()));
      } else {
        if (!item.is_array() || item.size() != 2) throw DomainError("edge cut entries must be label pairs");
        c.cut_edges.emplace_back(parse_label(item[0].get<std::string>()), parse_label(item[1].get<std::string>()));
      }
    }
    c.claimed_size = j.at("size").get<std::size_t>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed certificate: ") + e.what());
  }
}

// Checks a certificate against a graph: labels resolve, the claimed size
// matches, the fragment avoids the cut, and the cut satisfies the definition.
inline CutVerdict verify_certificate(const Graph& g, const CutCertificate& c) {
  auto resolve = [&](const Label& l) { return g.index_of(l); };
  const std::size_t actual = c.kind == CutKind::vertex ? c.cut_vertices.size() : c.cut_edges.size();
  if (actual != c.claimed_size)
    return {false, CutFailure::unknown_element,
            "claimed size " + std::to_string(c.claimed_size) + " but cut has " + std::to_string(actual), std::nullopt};
  if (c.kind == CutKind::vertex) {
    std::vector<std::size_t> cut;
    for (const auto& l : c.cut_vertices) {
      auto v = resolve(l);
      if (!v) return {false, CutFailure::unknown_element, "unknown vertex " + format_label(l), std::nullopt};
      cut.push_back(*v);
    }
    for (const auto& l : c.fragment)
      if (std::find(c.cut_vertices.begin(), c.cut_vertices.end(), l) != c.cut_vertices.end())
        return {false, CutFailure::unknown_element, "fragment meets cut at " + format_label(l), std::nullopt};
    return verify_vertex_cut(g, cut, c.params.h);
  }
  std::vector<Edge> cut;
  for (const auto& [a, b] : c.cut_edges) {
    auto u = resolve(a), v = resolve(b);
    if (!u || !v) return {false, CutFailure::unknown_element, "unknown edge endpoint", std::nullopt};
    cut.emplace_back(std::min(*u, *v), std::max(*u, *v));
  }
  return verify_edge_cut(g, cut, c.params.h);
}

}  // namespace starkit
