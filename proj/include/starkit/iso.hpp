#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include <json.hpp>

#include "starkit/errors.hpp"
#include "starkit/graph.hpp"

namespace starkit {

// Labels with (n,n-1)-arrangements completed to permutations by appending the
// missing symbol. Completion keeps lexicographic order, so ranks are unchanged.
inline std::vector<Label> completed_labels(const Graph& g) {
  const auto& fam = g.family();
  if (!fam || fam->name != "nkstar" || fam->k != fam->n - 1) return g.labels();
  std::vector<Label> out;
  out.reserve(g.vertex_count());
  for (const auto& l : g.labels()) {
    Label full = l;
    for (int s = 1; s <= fam->n; ++s)
      if (std::find(l.begin(), l.end(), s) == l.end()) full.push_back(s);
    out.push_back(std::move(full));
  }
  return out;
}

// Same label set and the same edges between equal labels. A label of
// S_{n,n-1} matches the permutation it extends.
inline bool edge_sets_equal(const Graph& a, const Graph& b) {
  if (a.edge_count() != b.edge_count() || a.vertex_count() != b.vertex_count()) return false;
  if (completed_labels(a) != completed_labels(b)) return false;
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    if (!(a.row(v) == b.row(v))) return false;
  return true;
}

struct IsoWitness {
  std::vector<std::size_t> mapping;  // vertex of the first graph -> vertex of the second
  bool verified = false;
};

// Full re-check that `mapping` is a bijection preserving adjacency and non-adjacency.
inline bool verify_isomorphism(const Graph& a, const Graph& b, const std::vector<std::size_t>& mapping) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto m : mapping) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (a.adjacent(u, v) != b.adjacent(mapping[u], mapping[v])) return false;
  return true;
}

struct IsoOptions {
  std::uint64_t node_budget = 50'000'000;
};

namespace detail {

inline std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t src) {
  std::vector<std::size_t> dist(g.vertex_count(), SIZE_MAX);
  std::queue<std::size_t> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    auto u = q.front();
    q.pop();
    for (const auto& [w, tag] : g.tagged_neighbors(u))
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// Degree followed by the sorted degrees of the neighbors.
inline std::vector<std::size_t> degree_signature(const Graph& g, std::size_t v) {
  std::vector<std::size_t> sig;
  for (const auto& [w, tag] : g.tagged_neighbors(v)) sig.push_back(g.degree(w));
  std::sort(sig.begin(), sig.end());
  sig.insert(sig.begin(), g.degree(v));
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, const IsoOptions& opts) : a_(a), b_(b), opts_(opts) {
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      sig_a_.push_back(degree_signature(a, v));
      sig_b_.push_back(degree_signature(b, v));
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = a_.vertex_count();
    if (n == 0) return std::vector<std::size_t>{};
    // Components are handled one anchor at a time: every vertex of the first
    // graph is reached from an anchor in BFS order.
    dist_a_.assign(n, SIZE_MAX);
    order_.clear();
    parent_.assign(n, SIZE_MAX);
    anchor_of_.assign(n, SIZE_MAX);
    for (std::size_t s = 0; s < n; ++s) {
      if (dist_a_[s] != SIZE_MAX) continue;
      auto d = bfs_distances(a_, s);
      for (std::size_t v = 0; v < n; ++v)
        if (d[v] != SIZE_MAX) {
          dist_a_[v] = d[v];
          anchor_of_[v] = s;
        }
      std::queue<std::size_t> q;
      q.push(s);
      std::vector<bool> seen(n, false);
      seen[s] = true;
      while (!q.empty()) {
        auto u = q.front();
        q.pop();
        order_.push_back(u);
        for (const auto& [w, tag] : a_.tagged_neighbors(u))
          if (!seen[w]) {
            seen[w] = true;
            parent_[w] = u;
            q.push(w);
          }
      }
    }
    map_.assign(n, SIZE_MAX);
    used_.assign(n, false);
    dist_b_.assign(n, {});
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool consistent(std::size_t v, std::size_t c) const {
    if (sig_a_[v] != sig_b_[c]) return false;
    const auto anchor = anchor_of_[v];
    if (anchor != v && dist_b_[map_[anchor]].empty()) return false;
    if (anchor != v && dist_b_[map_[anchor]][c] != dist_a_[v]) return false;
    std::size_t mapped_neighbors = 0;
    for (const auto& [w, tag] : a_.tagged_neighbors(v)) {
      if (map_[w] == SIZE_MAX) continue;
      ++mapped_neighbors;
      if (!b_.adjacent(map_[w], c)) return false;
    }
    std::size_t image_neighbors = 0;
    for (const auto& [w, tag] : b_.tagged_neighbors(c))
      if (used_[w]) ++image_neighbors;
    return mapped_neighbors == image_neighbors;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > opts_.node_budget) throw ResourceError("isomorphism search exceeded its node budget");
    const auto v = order_[depth];
    std::vector<std::size_t> candidates;
    if (parent_[v] != SIZE_MAX) {
      for (const auto& [w, tag] : b_.tagged_neighbors(map_[parent_[v]])) candidates.push_back(w);
    } else {
      for (std::size_t c = 0; c < b_.vertex_count(); ++c) candidates.push_back(c);
    }
    for (auto c : candidates) {
      if (used_[c] || !consistent(v, c)) continue;
      const bool anchor = parent_[v] == SIZE_MAX;
      if (anchor && dist_b_[c].empty()) dist_b_[c] = bfs_distances(b_, c);
      if (anchor) {
        // The anchor's distance profile must match as a multiset.
        auto da = bfs_distances(a_, v), db = dist_b_[c];
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) continue;
      }
      map_[v] = c;
      used_[c] = true;
      if (extend(depth + 1)) return true;
      map_[v] = SIZE_MAX;
      used_[c] = false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  IsoOptions opts_;
  std::vector<std::vector<std::size_t>> sig_a_, sig_b_;
  std::vector<std::size_t> dist_a_, order_, parent_, anchor_of_, map_;
  std::vector<std::vector<std::size_t>> dist_b_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Backtracking isomorphism search. Candidates are pruned by degree signature,
// BFS distance from the anchored vertex, and adjacency to the already-mapped
// vertices. Throws ResourceError when the node budget runs out.
inline std::optional<IsoWitness> isomorphic(const Graph& a, const Graph& b, const IsoOptions& opts = {}) {
  const std::size_t n = a.vertex_count();
  if (n > 1024 || b.vertex_count() > 1024) throw DomainError("isomorphic: graphs too large");
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> da, db;
  for (std::size_t v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  detail::IsoSearch search(a, b, opts);
  auto mapping = search.run();
  if (!mapping) return std::nullopt;
  IsoWitness w{std::move(*mapping), false};
  w.verified = verify_isomorphism(a, b, w.mapping);
  if (!w.verified) throw StructureError("isomorphism witness failed re-verification");
  return w;
}

inline nlohmann::ordered_json to_json(const Graph& a, const Graph& b, const IsoWitness& w) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < w.mapping.size(); ++v) m[a.label_text(v)] = b.label_text(w.mapping[v]);
  j["mapping"] = m;
  j["verified"] = w.verified;
  return j;
}

}  // namespace starkit
