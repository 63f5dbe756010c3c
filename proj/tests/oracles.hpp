#pragma once

// Naive reference implementations for the test suites. Deliberately
// independent of the library's search code: plain adjacency matrices,
// exhaustive enumeration, no pruning beyond disjointness.

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace oracle {

struct Naive {
  int n = 0;
  std::vector<std::vector<char>> adj;

  explicit Naive(const turan::MultipartiteGraph& g)
      : n(g.vertex_count()),
        adj(static_cast<std::size_t>(g.vertex_count()),
            std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0)) {
    g.for_each_edge([&](int x, int y) {
      adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
      adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    });
  }
};

inline void all_cliques_rec(const Naive& g, int t, std::vector<int>& cur,
                            int from, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == t) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v < g.n; ++v) {
    bool ok = true;
    for (int u : cur) ok = ok && g.adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    if (!ok) continue;
    cur.push_back(v);
    all_cliques_rec(g, t, cur, v + 1, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> all_cliques(
    const turan::MultipartiteGraph& g, int t) {
  Naive ng(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  all_cliques_rec(ng, t, cur, 0, out);
  return out;
}

inline bool disjoint_pick(const std::vector<std::vector<int>>& cliques,
                          std::vector<char>& used, std::size_t from, int need) {
  if (need == 0) return true;
  for (std::size_t i = from; i < cliques.size(); ++i) {
    bool free = true;
    for (int v : cliques[i]) free = free && !used[static_cast<std::size_t>(v)];
    if (!free) continue;
    for (int v : cliques[i]) used[static_cast<std::size_t>(v)] = 1;
    if (disjoint_pick(cliques, used, i + 1, need - 1)) return true;
    for (int v : cliques[i]) used[static_cast<std::size_t>(v)] = 0;
  }
  return false;
}

// exhaustive search over all k-tuples of disjoint t-cliques
inline bool has_packing(const turan::MultipartiteGraph& g, int k, int t) {
  auto cliques = all_cliques(g, t);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  return disjoint_pick(cliques, used, 0, k);
}

// exact ex(K_ns, kK_t) by iterating over every subset of the host's edge
// slots; usable for hosts with at most ~22 slots
inline std::uint64_t brute_force_extremal(const turan::PartSizes& ns, int t,
                                          int k) {
  turan::MultipartiteGraph host{ns};
  std::vector<std::pair<int, int>> slots;
  for (int x = 0; x < host.vertex_count(); ++x)
    for (int y = x + 1; y < host.vertex_count(); ++y)
      if (host.part_of(x) != host.part_of(y)) slots.emplace_back(x, y);
  const std::size_t m = slots.size();
  std::uint64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int edges = std::popcount(mask);
    if (static_cast<std::uint64_t>(edges) <= best) continue;
    turan::MultipartiteGraph g{ns};
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    if (!has_packing(g, k, t)) best = static_cast<std::uint64_t>(edges);
  }
  return best;
}

}  // namespace oracle
