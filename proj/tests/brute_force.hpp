#pragma once

// Subset-enumeration reference values for small graphs (at most 26 vertices).
// Shares nothing with the oracle beyond the Graph type.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "starkit/graph.hpp"

namespace brute {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const starkit::Graph& g) {
  if (g.vertex_count() > 26) throw std::invalid_argument("brute force limited to 26 vertices");
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline bool connected_mask(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return true;
  Mask seen = alive & (~alive + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

inline bool min_degree_at_least(const std::vector<Mask>& adj, Mask alive, int h) {
  for (Mask a = alive; a; a &= a - 1)
    if (std::popcount(adj[std::countr_zero(a)] & alive) < h) return false;
  return true;
}

// Smallest S with G - S disconnected and min degree >= h.
inline std::optional<int> kappa(const starkit::Graph& g, int h) {
  const auto adj = adjacency_masks(g);
  const int n = static_cast<int>(g.vertex_count());
  const Mask all = (Mask{1} << n) - 1;
  std::optional<int> best;
  for (Mask s = 0; s <= all; ++s) {
    const int size = std::popcount(s);
    if (best && size >= *best) continue;
    const Mask alive = all & ~s;
    if (std::popcount(alive) < 2) continue;
    if (!min_degree_at_least(adj, alive, h)) continue;
    if (connected_mask(adj, alive)) continue;
    best = size;
  }
  return best;
}

// Smallest edge set F with G - F disconnected and min degree >= h. Any such F
// contains the boundary of one of its components, so bipartitions suffice.
inline std::optional<int> lambda(const starkit::Graph& g, int h) {
  const auto adj = adjacency_masks(g);
  const int n = static_cast<int>(g.vertex_count());
  const Mask all = (Mask{1} << n) - 1;
  std::optional<int> best;
  // Vertex n-1 stays on the complement side so each bipartition is seen once.
  for (Mask a = 1; a < (Mask{1} << (n - 1)); ++a) {
    const Mask b = all & ~a;
    int boundary = 0;
    bool ok = true;
    for (Mask x = a; x && ok; x &= x - 1) {
      const Mask nb = adj[std::countr_zero(x)];
      boundary += std::popcount(nb & b);
      ok = std::popcount(nb & a) >= h;
    }
    if (!ok || (best && boundary >= *best)) continue;
    if (!min_degree_at_least(adj, b, h)) continue;
    best = boundary;
  }
  return best;
}

inline std::optional<int> measure(const starkit::Graph& g, bool vertex, int h) {
  return vertex ? kappa(g, h) : lambda(g, h);
}

}  // namespace brute
