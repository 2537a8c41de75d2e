#pragma once

// Exact h-super connectivity by exhaustive fragment enumeration.
//
// Every minimum h-vertex-cut T (or h-edge-cut F) has a smallest surviving
// component A: connected, |A| <= |V|/2, and min degree of G[A] >= h. The search
// enumerates such fragments with include/exclude branching and evaluates
//   kappa:  V \ (A ∪ core_h(V \ (A ∪ N(A))))   when the core is nonempty
//   lambda: the edge boundary of A             when G - A has min degree >= h
// and keeps the minimum. Subtrees are dropped only when a lower bound strictly
// exceeds the best value so far, so all optimal fragments are visited and the
// lexicographically smallest witness is independent of scheduling.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "starkit/bitset.hpp"
#include "starkit/errors.hpp"
#include "starkit/formulas.hpp"
#include "starkit/graph.hpp"

namespace starkit {

// Largest W with h_core(G[W]) of min degree >= h, by repeated deletion of
// vertices whose degree inside the surviving set is below h.
inline VertexSet h_core(const Graph& g, VertexSet w, int h) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::size_t> queue;
  w.for_each([&](std::size_t v) {
    deg[v] = g.row(v).count_common(w);
    if (deg[v] < static_cast<std::size_t>(std::max(h, 0))) queue.push_back(v);
  });
  for (auto v : queue) w.erase(v);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& [x, tag] : g.tagged_neighbors(queue[i])) {
      if (!w.contains(x)) continue;
      if (--deg[x] < static_cast<std::size_t>(h)) {
        w.erase(x);
        queue.push_back(x);
      }
    }
  }
  return w;
}

// Same result, but sweeps the vertices in the caller's order, deleting every
// low-degree vertex it meets until a sweep deletes nothing.
inline VertexSet h_core_in_order(const Graph& g, VertexSet w, int h, std::span<const std::size_t> order) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v : order) {
      if (w.contains(v) && g.row(v).count_common(w) < static_cast<std::size_t>(std::max(h, 0))) {
        w.erase(v);
        changed = true;
      }
    }
  }
  return w;
}

struct EnumerationStats {
  std::uint64_t visited = 0;
};

// Calls visit(members) once per connected vertex set of size <= cap, members
// ascending. Each set is generated from its smallest vertex by branching on
// the smallest undecided neighbor (include first).
template <class Visit>
EnumerationStats enumerate_connected_sets(const Graph& g, std::size_t cap, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  if (cap < 1 || cap > n) throw DomainError("enumerate_connected_sets: need 1 <= cap <= |V|");
  EnumerationStats stats;
  std::vector<std::size_t> members;
  auto report = [&](const VertexSet& in) {
    members = in.to_vector();
    ++stats.visited;
    visit(static_cast<const std::vector<std::size_t>&>(members));
  };
  std::function<void(const VertexSet&, const VertexSet&, const VertexSet&)> grow =
      [&](const VertexSet& in, const VertexSet& out, const VertexSet& reach) {
        if (in.count() >= cap) return;
        auto frontier = reach - in - out;
        auto f = frontier.first();
        if (!f) return;
        auto in2 = in;
        in2.insert(*f);
        report(in2);
        grow(in2, out, reach | g.row(*f));
        auto out2 = out;
        out2.insert(*f);
        grow(in, out2, reach);
      };
  for (std::size_t r = 0; r < n; ++r) {
    VertexSet in(n), out(n);
    in.insert(r);
    for (std::size_t v = 0; v < r; ++v) out.insert(v);
    report(in);
    grow(in, out, g.row(r));
  }
  return stats;
}

struct OracleOptions {
  bool symmetry = false;                        // caller asserts vertex-transitivity
  std::optional<std::size_t> fragment_cap;      // default floor(|V|/2)
  std::size_t threads = 0;                      // 0: STARKIT_THREADS, else all cores
  std::optional<std::chrono::milliseconds> timeout;
  bool allow_disconnected = false;
};

struct ExactResult {
  Measure measure = Measure::kappa;
  int h = 0;
  std::optional<std::size_t> value;             // nullopt: no h-cut exists (or timed out)
  std::vector<std::size_t> witness_fragment;
  std::vector<std::size_t> witness_cut_vertices;
  std::vector<Edge> witness_cut_edges;
  std::uint64_t enumerated_fragments = 0;
  bool exhaustive = true;
  bool symmetry_reduced = false;
  bool timed_out = false;

  std::size_t witness_size() const {
    return measure == Measure::kappa ? witness_cut_vertices.size() : witness_cut_edges.size();
  }
};

inline std::size_t resolve_thread_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("STARKIT_THREADS")) {
    char* end = nullptr;
    auto v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

namespace detail {

struct Candidate {
  std::size_t value = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> cut_vertices;
  std::vector<Edge> cut_edges;
  std::vector<std::size_t> fragment;

  bool found() const { return value != std::numeric_limits<std::size_t>::max(); }
  auto key() const { return std::tie(value, cut_vertices, cut_edges, fragment); }
  bool better_than(const Candidate& o) const { return key() < o.key(); }
};

template <std::size_t W>
struct SearchNode {
  FixedBits<W> in;     // fragment A
  FixedBits<W> out;    // vertices that will never join A
  FixedBits<W> reach;  // union of the neighborhoods of A's members
  std::size_t size = 0;
  std::size_t edges_to_out = 0;
  bool evaluate = false;
};

template <std::size_t W>
struct SearchContext {
  std::size_t nv = 0;
  int h = 0;
  std::size_t cap = 0;
  Measure measure = Measure::kappa;
  std::vector<FixedBits<W>> adj;
  std::vector<std::size_t> deg;
  FixedBits<W> all;
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::atomic<bool> stop{false};
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

template <std::size_t W>
class FragmentWorker {
 public:
  using Node = SearchNode<W>;
  using Bits = FixedBits<W>;

  explicit FragmentWorker(SearchContext<W>& ctx) : ctx_(ctx) {}

  const Candidate& best() const { return best_; }
  std::uint64_t enumerated() const { return enumerated_; }

  bool feasible(const Node& node) const {
    const auto h = static_cast<std::size_t>(ctx_.h);
    const std::size_t room = ctx_.cap - node.size;
    const Bits undecided = andnot(ctx_.all, node.in | node.out);
    bool ok = true;
    node.in.for_each([&](std::size_t a) {
      if (!ok) return;
      const auto inside = count_and(ctx_.adj[a], node.in);
      if (inside >= h) return;
      const auto avail = count_and(ctx_.adj[a], undecided);
      if (inside + std::min(avail, room) < h) ok = false;
    });
    if (!ok) return false;
    if (ctx_.measure == Measure::lambda) {
      // vertices kept outside must retain h neighbors outside A
      (node.reach & node.out).for_each([&](std::size_t x) {
        if (ok && ctx_.deg[x] - count_and(ctx_.adj[x], node.in) < h) ok = false;
      });
    }
    return ok;
  }

  std::size_t lower_bound(const Node& node) const {
    const Bits frontier = andnot(node.reach, node.in | node.out);
    if (ctx_.measure == Measure::kappa) {
      // Excluded neighbors of A stay in N(A'). Each frontier vertex f later
      // lands in N(A') itself or, if included, drags its excluded neighbors
      // in; frontier vertices with pairwise disjoint such sets each add one.
      std::size_t lb = count_and(node.reach, node.out);
      Bits used{};
      frontier.for_each([&](std::size_t f) {
        const Bits priv = andnot(ctx_.adj[f] & node.out, node.reach);
        if (priv.any() && !intersects(priv, used)) {
          ++lb;
          used = used | priv;
        }
      });
      return lb;
    }
    std::size_t lb = node.edges_to_out;
    frontier.for_each([&](std::size_t f) {
      lb += std::min(count_and(ctx_.adj[f], node.in), count_and(ctx_.adj[f], node.out));
    });
    return lb;
  }

  std::optional<std::size_t> choose(const Node& node) const {
    const Bits frontier = andnot(node.reach, node.in | node.out);
    if (!frontier.any()) return std::nullopt;
    const auto h = static_cast<std::size_t>(ctx_.h);
    // A member whose every undecided neighbor is required forces the choice.
    const Bits undecided = andnot(ctx_.all, node.in | node.out);
    std::optional<std::size_t> forced;
    node.in.for_each([&](std::size_t a) {
      if (forced) return;
      const auto inside = count_and(ctx_.adj[a], node.in);
      if (inside >= h) return;
      const Bits avail = ctx_.adj[a] & undecided;
      if (inside + avail.count() == h) forced = avail.to_vector().front();
    });
    if (forced) return forced;
    std::size_t pick = 0, pick_links = 0;
    bool have = false;
    frontier.for_each([&](std::size_t f) {
      const auto links = count_and(ctx_.adj[f], node.in);
      if (!have || links > pick_links) {
        pick = f;
        pick_links = links;
        have = true;
      }
    });
    return pick;
  }

  Node include(const Node& node, std::size_t v) const {
    Node c = node;
    c.in.set(v);
    ++c.size;
    c.reach = c.reach | ctx_.adj[v];
    c.edges_to_out += count_and(ctx_.adj[v], node.out);
    c.evaluate = true;
    return c;
  }

  Node exclude(const Node& node, std::size_t v) const {
    Node c = node;
    c.out.set(v);
    c.edges_to_out += count_and(ctx_.adj[v], node.in);
    c.evaluate = false;
    return c;
  }

  void evaluate(const Node& node) {
    ++enumerated_;
    const auto h = static_cast<std::size_t>(ctx_.h);
    bool ok = true;
    node.in.for_each([&](std::size_t a) {
      if (ok && count_and(ctx_.adj[a], node.in) < h) ok = false;
    });
    if (!ok) return;
    const std::size_t bound = ctx_.best.load(std::memory_order_relaxed);
    const Bits boundary = andnot(node.reach, node.in);
    Candidate cand;
    if (ctx_.measure == Measure::kappa) {
      if (boundary.count() > bound) return;
      Bits core = andnot(ctx_.all, node.in | node.reach);
      for (bool changed = true; changed;) {
        changed = false;
        core.for_each([&](std::size_t v) {
          if (count_and(ctx_.adj[v], core) < h) {
            core.reset(v);
            changed = true;
          }
        });
      }
      if (!core.any()) return;
      cand.value = ctx_.nv - node.size - core.count();
      if (cand.value > bound || cand.value > best_.value) return;
      cand.cut_vertices = andnot(ctx_.all, node.in | core).to_vector();
    } else {
      boundary.for_each([&](std::size_t x) {
        if (ok && ctx_.deg[x] - count_and(ctx_.adj[x], node.in) < h) ok = false;
      });
      if (!ok) return;
      std::size_t cut = 0;
      node.in.for_each([&](std::size_t a) { cut += ctx_.deg[a] - count_and(ctx_.adj[a], node.in); });
      cand.value = cut;
      if (cand.value > bound || cand.value > best_.value) return;
      node.in.for_each([&](std::size_t a) {
        andnot(ctx_.adj[a], node.in).for_each([&](std::size_t x) {
          cand.cut_edges.emplace_back(std::min(a, x), std::max(a, x));
        });
      });
      std::sort(cand.cut_edges.begin(), cand.cut_edges.end());
    }
    cand.fragment = node.in.to_vector();
    if (!best_.found() || cand.better_than(best_)) {
      best_ = std::move(cand);
      auto cur = ctx_.best.load(std::memory_order_relaxed);
      while (best_.value < cur && !ctx_.best.compare_exchange_weak(cur, best_.value)) {
      }
    }
  }

  bool expandable(const Node& node) const {
    return node.size < ctx_.cap && lower_bound(node) <= ctx_.best.load(std::memory_order_relaxed);
  }

  void run(const Node& node) {
    if (node.evaluate) evaluate(node);
    dfs(node);
  }

 private:
  void dfs(const Node& node) {
    if ((++ticks_ & 0xFFF) == 0 && ctx_.deadline && std::chrono::steady_clock::now() > *ctx_.deadline)
      ctx_.stop.store(true, std::memory_order_relaxed);
    if (ctx_.stop.load(std::memory_order_relaxed)) return;
    if (node.size >= ctx_.cap) return;
    if (lower_bound(node) > ctx_.best.load(std::memory_order_relaxed)) return;
    auto f = choose(node);
    if (!f) return;
    const Node with = include(node, *f);
    if (feasible(with)) {
      evaluate(with);
      dfs(with);
    }
    const Node without = exclude(node, *f);
    if (feasible(without)) dfs(without);
  }

  SearchContext<W>& ctx_;
  Candidate best_;
  std::uint64_t enumerated_ = 0;
  std::uint64_t ticks_ = 0;
};

template <std::size_t W>
ExactResult run_search(const Graph& g, Measure measure, int h, std::size_t cap, const OracleOptions& opts) {
  const std::size_t nv = g.vertex_count();
  SearchContext<W> ctx;
  ctx.nv = nv;
  ctx.h = h;
  ctx.cap = cap;
  ctx.measure = measure;
  ctx.all = FixedBits<W>::prefix(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    ctx.adj.push_back(FixedBits<W>::from(g.row(v)));
    ctx.deg.push_back(g.degree(v));
  }
  if (opts.timeout) ctx.deadline = std::chrono::steady_clock::now() + *opts.timeout;

  using Node = SearchNode<W>;
  FragmentWorker<W> seed(ctx);
  std::vector<Node> tasks;
  const std::size_t roots = opts.symmetry ? std::min<std::size_t>(1, nv) : nv;
  for (std::size_t r = 0; r < roots && cap >= 1; ++r) {
    Node node;
    node.in.set(r);
    node.size = 1;
    node.reach = ctx.adj[r];
    if (!opts.symmetry)
      for (std::size_t v = 0; v < r; ++v) node.out.set(v);
    node.edges_to_out = count_and(ctx.adj[r], node.out);
    node.evaluate = true;
    if (seed.feasible(node)) tasks.push_back(node);
  }

  // Split the forest into a fixed number of independent subtrees. Nodes that
  // get split are evaluated here, once.
  constexpr std::size_t kTargetTasks = 256;
  for (int round = 0; round < 24 && !tasks.empty() && tasks.size() < kTargetTasks; ++round) {
    std::vector<Node> next;
    bool split_any = false;
    for (const auto& t : tasks) {
      if (next.size() + (tasks.size() - (&t - tasks.data())) >= 2 * kTargetTasks || !seed.expandable(t)) {
        next.push_back(t);
        continue;
      }
      auto f = seed.choose(t);
      if (!f) {
        next.push_back(t);
        continue;
      }
      Node parent = t;
      if (parent.evaluate) seed.evaluate(parent);
      auto with = seed.include(parent, *f);
      if (seed.feasible(with)) next.push_back(with);
      auto without = seed.exclude(parent, *f);
      if (seed.feasible(without)) next.push_back(without);
      split_any = true;
    }
    tasks = std::move(next);
    if (!split_any) break;
  }

  const std::size_t workers = std::min(resolve_thread_count(opts.threads), std::max<std::size_t>(1, tasks.size()));
  std::vector<FragmentWorker<W>> pool;
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(ctx);
  std::atomic<std::size_t> next_task{0};
  auto drain = [&](FragmentWorker<W>& w) {
    for (std::size_t i; (i = next_task.fetch_add(1)) < tasks.size();) {
      if (ctx.stop.load(std::memory_order_relaxed)) break;
      w.run(tasks[i]);
    }
  };
  if (workers == 1) {
    drain(pool[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < workers; ++i) threads.emplace_back(drain, std::ref(pool[i]));
    for (auto& t : threads) t.join();
  }

  Candidate best = seed.best();
  std::uint64_t enumerated = seed.enumerated();
  for (const auto& w : pool) {
    enumerated += w.enumerated();
    if (w.best().found() && (!best.found() || w.best().better_than(best))) best = w.best();
  }

  ExactResult res;
  res.measure = measure;
  res.h = h;
  res.enumerated_fragments = enumerated;
  res.symmetry_reduced = opts.symmetry;
  res.timed_out = ctx.stop.load();
  res.exhaustive = !res.timed_out && cap >= nv / 2;
  // A partial search proves nothing, so a timeout reports no value or witness.
  if (best.found() && !res.timed_out) {
    res.value = best.value;
    res.witness_fragment = std::move(best.fragment);
    res.witness_cut_vertices = std::move(best.cut_vertices);
    res.witness_cut_edges = std::move(best.cut_edges);
  }
  return res;
}

inline ExactResult exact_dispatch(const Graph& g, Measure measure, int h, const OracleOptions& opts) {
  const std::size_t nv = g.vertex_count();
  if (nv == 0) throw DomainError("oracle: empty graph");
  if (h < 0 || static_cast<std::size_t>(h) >= nv) throw DomainError("oracle: need 0 <= h < |V|");
  if (!opts.allow_disconnected && !is_connected(g)) throw DomainError("oracle: graph is disconnected");
  std::size_t cap = std::min(opts.fragment_cap.value_or(nv / 2), nv / 2);
  if (opts.fragment_cap && *opts.fragment_cap < 1) throw DomainError("oracle: fragment cap must be >= 1");
  // Deleting edges never raises a degree, so a vertex of degree < h rules out
  // every h-edge-cut.
  if (cap == 0 || (measure == Measure::lambda && g.min_degree() < static_cast<std::size_t>(h))) {
    ExactResult r;
    r.measure = measure;
    r.h = h;
    r.symmetry_reduced = opts.symmetry;
    return r;
  }
  const std::size_t words = (nv + 63) / 64;
  if (words <= 1) return run_search<1>(g, measure, h, cap, opts);
  if (words <= 2) return run_search<2>(g, measure, h, cap, opts);
  if (words <= 4) return run_search<4>(g, measure, h, cap, opts);
  if (words <= 8) return run_search<8>(g, measure, h, cap, opts);
  if (words <= 16) return run_search<16>(g, measure, h, cap, opts);
  throw DomainError("oracle: graphs above 1024 vertices are out of scope");
}

}  // namespace detail

inline ExactResult exact_kappa_s(const Graph& g, int h, const OracleOptions& opts = {}) {
  return detail::exact_dispatch(g, Measure::kappa, h, opts);
}

inline ExactResult exact_lambda_s(const Graph& g, int h, const OracleOptions& opts = {}) {
  return detail::exact_dispatch(g, Measure::lambda, h, opts);
}

inline ExactResult exact_measure(const Graph& g, Measure m, int h, const OracleOptions& opts = {}) {
  return detail::exact_dispatch(g, m, h, opts);
}

inline nlohmann::ordered_json to_json(const Graph& g, const ExactResult& r) {
  nlohmann::ordered_json j;
  j["measure"] = to_string(r.measure);
  j["h"] = r.h;
  if (r.timed_out)
    j["value"] = "timeout";
  else if (r.value)
    j["value"] = *r.value;
  else
    j["value"] = "none";
  auto frag = nlohmann::ordered_json::array();
  for (auto v : r.witness_fragment) frag.push_back(g.label_text(v));
  j["witness_fragment"] = frag;
  auto cut = nlohmann::ordered_json::array();
  if (r.measure == Measure::kappa) {
    for (auto v : r.witness_cut_vertices) cut.push_back(g.label_text(v));
  } else {
    for (auto [u, v] : r.witness_cut_edges) cut.push_back({g.label_text(u), g.label_text(v)});
  }
  j["witness_cut"] = cut;
  j["enumerated_fragments"] = r.enumerated_fragments;
  j["exhaustive"] = r.exhaustive;
  j["symmetry"] = r.symmetry_reduced;
  return j;
}

}  // namespace starkit
