#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// k pairwise vertex-disjoint K_t's; each clique is an ascending id list
struct PackingWitness {
  std::vector<std::vector<int>> cliques;
};

namespace detail {

// Adjacency as single words. The packing decision procedures run on hosts
// of at most 64 vertices, which covers every grid this project touches.
struct CliqueView {
  int n = 0;
  const std::uint64_t* rows = nullptr;

  std::uint64_t row(int v) const { return rows[static_cast<std::size_t>(v)]; }
};

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
inline std::uint64_t above(int v) { return ~((std::uint64_t{2} << v) - 1); }

// scratch clique for the enumerators; hosts are capped well below this
struct CliqueBuf {
  std::array<int, 16> v{};
  int len = 0;
  std::uint64_t mask = 0;

  void push(int u) {
    v[static_cast<std::size_t>(len++)] = u;
    mask |= bit(u);
  }
  void pop() { mask &= ~bit(v[static_cast<std::size_t>(--len)]); }
  std::vector<int> to_vector() const { return {v.begin(), v.begin() + len}; }
};

// t-cliques with lowest vertex v, all vertices within avail, in canonical
// (lexicographic) order. f(buf) returns true to stop; the return value tells
// whether enumeration was stopped.
template <class F>
bool for_cliques_through(const CliqueView& g, std::uint64_t avail, int v,
                         int t, F f) {
  CliqueBuf buf;
  buf.push(v);
  auto rec = [&](auto&& self, std::uint64_t cand) -> bool {
    if (buf.len == t) return f(buf);
    if (std::popcount(cand) < t - buf.len) return false;
    std::uint64_t m = cand;
    while (m) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      buf.push(u);
      if (self(self, cand & g.row(u) & above(u))) return true;
      buf.pop();
    }
    return false;
  };
  return rec(rec, avail & g.row(v) & above(v));
}

inline bool joins_clique(const CliqueView& g, std::uint64_t avail, int v,
                         int t) {
  if (t == 2) return (avail & g.row(v)) != 0;
  if (t == 3) {
    std::uint64_t m = avail & g.row(v);
    while (m) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      if (avail & g.row(v) & g.row(u) & above(u)) return true;
    }
    return false;
  }
  return for_cliques_through(g, avail, v, t,
                             [](const CliqueBuf&) { return true; });
}

// first triangle inside avail, as a mask; 0 if none
inline std::uint64_t first_triangle_in(const CliqueView& g,
                                       std::uint64_t avail) {
  std::uint64_t m = avail;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    std::uint64_t nb = avail & g.row(v) & above(v);
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      const std::uint64_t third = avail & g.row(v) & g.row(u) & above(u);
      if (third) return bit(v) | bit(u) | bit(std::countr_zero(third));
    }
  }
  return 0;
}

// all t-cliques inside avail as vertex masks; gives up past `limit`
inline std::vector<std::uint64_t> collect_cliques(const CliqueView& g,
                                                  std::uint64_t avail, int t,
                                                  std::size_t limit) {
  std::vector<std::uint64_t> out;
  std::uint64_t m = avail;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    const bool stopped =
        for_cliques_through(g, avail, v, t, [&](const CliqueBuf& c) {
          out.push_back(c.mask);
          return out.size() > limit;
        });
    if (stopped) break;
  }
  return out;
}

// Upper bound via a greedy clique hitting set: when a set H of fewer than
// `need` vertices meets every t-clique in avail, any packing has at most
// |H| < need cliques. Returns true when the bound proves impossibility.
inline bool hitting_set_excludes(const CliqueView& g, std::uint64_t avail,
                                 int t, int need) {
  constexpr std::size_t kCliqueLimit = 20000;
  auto cliques = collect_cliques(g, avail, t, kCliqueLimit);
  if (cliques.size() > kCliqueLimit) return false;  // inconclusive
  int picks = 0;
  while (!cliques.empty()) {
    if (picks >= need - 1) return false;  // hitting set not small enough
    std::array<int, 64> cnt{};
    for (std::uint64_t c : cliques)
      for (std::uint64_t w = c; w; w &= w - 1) ++cnt[static_cast<std::size_t>(std::countr_zero(w))];
    int best = 0;
    for (int v = 1; v < g.n; ++v)
      if (cnt[static_cast<std::size_t>(v)] > cnt[static_cast<std::size_t>(best)]) best = v;
    const std::uint64_t b = bit(best);
    std::erase_if(cliques, [b](std::uint64_t c) { return c & b; });
    ++picks;
  }
  return true;  // all cliques hit with picks <= need-1 vertices
}

// Exact search for `need` disjoint t-cliques inside avail. Branches on the
// lowest-indexed vertex that can still join a clique: either one of the
// t-cliques through it is used, or the vertex is excluded for good.
// Deterministic. Cliques are appended to *out deepest-first on success.
inline bool packing_search(const CliqueView& g, std::uint64_t avail, int t,
                           int need, std::vector<std::vector<int>>* out) {
  if (need <= 0) return true;
  if (std::popcount(avail) < t * need) return false;

  if (need == 1 && t == 3 && !out) return first_triangle_in(g, avail) != 0;
  if (need >= 2 && hitting_set_excludes(g, avail, t, need)) return false;

  // lowest vertex that can still join; vertices joining nothing are dropped
  int v = -1;
  std::uint64_t scan = avail;
  while (scan) {
    const int u = std::countr_zero(scan);
    scan &= scan - 1;
    if (joins_clique(g, avail, u, t)) {
      v = u;
      break;
    }
    avail &= ~bit(u);
  }
  if (v < 0 || std::popcount(avail) < t * need) return false;

  bool success = false;
  for_cliques_through(g, avail, v, t, [&](const CliqueBuf& c) {
    if (packing_search(g, avail & ~c.mask, t, need - 1, out)) {
      if (out) out->push_back(c.to_vector());
      success = true;
      return true;
    }
    return false;
  });
  if (success) return true;

  return packing_search(g, avail & ~bit(v), t, need, out);
}

inline std::vector<std::uint64_t> adjacency_words_checked(
    const MultipartiteGraph& g) {
  if (g.vertex_count() > 64)
    fail(ErrorKind::CapExceeded,
         "packing decision procedures support at most 64 vertices");
  return g.adjacency_words();
}

// Adding edge xy (already present in g) to a previously kK_t-free graph
// creates a packing iff some packing uses a t-clique through xy.
inline bool edge_creates_packing(const CliqueView& g, int x, int y, int k,
                                 int t) {
  const std::uint64_t all = g.n >= 64 ? ~std::uint64_t{0} : bit(g.n) - 1;
  if (t == 2)
    return packing_search(g, all & ~(bit(x) | bit(y)), t, k - 1, nullptr);

  const std::uint64_t common = g.row(x) & g.row(y) & all;
  if (t == 3) {
    if (!common) return false;  // no new triangle at all
    if (k == 1) return true;
    if (k == 2) {
      // need one more triangle avoiding x, y and at least one z in common
      const std::uint64_t avail = all & ~(bit(x) | bit(y));
      if (std::popcount(common) >= 4)
        return first_triangle_in(g, avail) != 0;  // any triangle misses a z
      std::uint64_t m = avail;
      while (m) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t nb = avail & g.row(v) & above(v);
        while (nb) {
          const int u = std::countr_zero(nb);
          nb &= nb - 1;
          std::uint64_t third = avail & g.row(v) & g.row(u) & above(u);
          while (third) {
            const int w = std::countr_zero(third);
            third &= third - 1;
            if (common & ~(bit(v) | bit(u) | bit(w))) return true;
          }
        }
      }
      return false;
    }
  }

  // general case: every t-clique through xy, then a (k-1)-packing beside it
  CliqueBuf buf;
  buf.push(x);
  buf.push(y);
  auto rec = [&](auto&& self, std::uint64_t cand) -> bool {
    if (buf.len == t)
      return packing_search(g, all & ~buf.mask, t, k - 1, nullptr);
    std::uint64_t m = cand;
    while (m) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      buf.push(u);
      if (self(self, cand & g.row(u) & above(u))) return true;
      buf.pop();
    }
    return false;
  };
  return rec(rec, common);
}

}  // namespace detail

// Every triple of mutually adjacent vertices exactly once, ascending ids.
// f returns true to stop early.
template <class F>
void for_each_triangle(const MultipartiteGraph& g, F f) {
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x) {
    bool stop = false;
    g.neighbors(x).for_each([&](int y) {
      if (stop || y <= x) return;
      Bitset common = g.common_neighbors(x, y);
      for (int z = common.next_set(y + 1); z >= 0 && !stop;
           z = common.next_set(z + 1))
        stop = f(x, y, z);
    });
    if (stop) return;
  }
}

inline std::vector<std::array<int, 3>> enumerate_triangles(
    const MultipartiteGraph& g) {
  std::vector<std::array<int, 3>> out;
  for_each_triangle(g, [&](int x, int y, int z) {
    out.push_back({x, y, z});
    return false;
  });
  return out;
}

// first triangle in canonical order, if any
inline std::optional<std::array<int, 3>> find_triangle(
    const MultipartiteGraph& g) {
  std::optional<std::array<int, 3>> hit;
  for_each_triangle(g, [&](int x, int y, int z) {
    hit = {{x, y, z}};
    return true;
  });
  return hit;
}

// witness of k disjoint K_t's iff one exists; deterministic
inline std::optional<PackingWitness> find_clique_packing(
    const MultipartiteGraph& g, int k, int t) {
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  if (t < 2) fail(ErrorKind::InvalidParameter, "t must be at least 2");
  const auto rows = detail::adjacency_words_checked(g);
  const detail::CliqueView view{g.vertex_count(), rows.data()};
  const std::uint64_t all =
      g.vertex_count() >= 64 ? ~std::uint64_t{0}
                             : detail::bit(g.vertex_count()) - 1;
  std::vector<std::vector<int>> cliques;
  if (!detail::packing_search(view, all, t, k, &cliques)) return std::nullopt;
  std::reverse(cliques.begin(), cliques.end());
  return PackingWitness{std::move(cliques)};
}

inline bool is_kkt_free(const MultipartiteGraph& g, int k, int t) {
  return !find_clique_packing(g, k, t).has_value();
}

// maximum number of pairwise disjoint K_t's
inline int max_packing_size(const MultipartiteGraph& g, int t) {
  int m = 0;
  while ((m + 1) * t <= g.vertex_count() &&
         find_clique_packing(g, m + 1, t).has_value())
    ++m;
  return m;
}

struct RichEdge {
  int x = 0, y = 0;
  std::vector<int> per_part_common;  // common neighbors of x, y per part
};

struct RichEdgeReport {
  int k = 1;
  std::vector<RichEdge> rich_edges;
  VertexSet z_set;                       // endpoints of rich edges
  int max_same_class_rich_degree = 0;    // rich edges at one vertex into one class
  int cover_size = 0;                    // greedy vertex-cover bound for R
};

// Edges with at least k common neighbors inside a single part, plus the
// derived structural quantities.
inline RichEdgeReport rich_edges(const MultipartiteGraph& g, int k) {
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  RichEdgeReport rep;
  rep.k = k;
  rep.z_set = VertexSet(g.vertex_count());
  std::vector<std::vector<int>> rich_adj(static_cast<std::size_t>(g.vertex_count()));
  g.for_each_edge([&](int x, int y) {
    Bitset common = g.common_neighbors(x, y);
    std::vector<int> per_part(static_cast<std::size_t>(g.part_count()));
    bool rich = false;
    for (int p = 0; p < g.part_count(); ++p) {
      per_part[static_cast<std::size_t>(p)] = common.and_count(g.part_mask(p));
      rich |= per_part[static_cast<std::size_t>(p)] >= k;
    }
    if (!rich) return;
    rep.rich_edges.push_back({x, y, std::move(per_part)});
    rep.z_set.set(x);
    rep.z_set.set(y);
    rich_adj[static_cast<std::size_t>(x)].push_back(y);
    rich_adj[static_cast<std::size_t>(y)].push_back(x);
  });

  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> per_class(static_cast<std::size_t>(g.part_count()), 0);
    for (int u : rich_adj[static_cast<std::size_t>(v)])
      rep.max_same_class_rich_degree =
          std::max(rep.max_same_class_rich_degree,
                   ++per_class[static_cast<std::size_t>(g.part_of(u))]);
  }

  // greedy vertex cover of the rich subgraph: max degree first, lowest id ties
  std::vector<std::vector<int>> adj = rich_adj;
  while (true) {
    int best = -1, best_deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int d = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
      if (d > best_deg) {
        best = v;
        best_deg = d;
      }
    }
    if (best < 0) break;
    for (int u : adj[static_cast<std::size_t>(best)])
      std::erase(adj[static_cast<std::size_t>(u)], best);
    adj[static_cast<std::size_t>(best)].clear();
    ++rep.cover_size;
  }
  return rep;
}

enum class PairClass { Full, Empty, Mixed };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::Full: return "full";
    case PairClass::Empty: return "empty";
    default: return "mixed";
  }
}

// Full: d(Vi \ Z, Vj) = d(Vj \ Z, Vi) = 1 (vacuously 1 on an empty side).
// Empty: e(Vi \ Z, Vj) = e(Vi, Vj \ Z) = 0. Mixed otherwise; Full wins when
// both hold vacuously.
inline PairClass classify_pair(const MultipartiteGraph& g, const VertexSet& z,
                               int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= g.part_count() || j >= g.part_count())
    fail(ErrorKind::InvalidParameter, "need two distinct valid parts");
  const Bitset& vi = g.part_mask(i);
  const Bitset& vj = g.part_mask(j);

  bool full = true;
  std::uint64_t off_z_edges_i = 0, off_z_edges_j = 0;
  vi.for_each([&](int v) {
    if (z.test(v)) return;
    const int d = g.neighbors(v).and_count(vj);
    full &= d == g.part_size(j);
    off_z_edges_i += static_cast<std::uint64_t>(d);
  });
  vj.for_each([&](int v) {
    if (z.test(v)) return;
    const int d = g.neighbors(v).and_count(vi);
    full &= d == g.part_size(i);
    off_z_edges_j += static_cast<std::uint64_t>(d);
  });
  if (full) return PairClass::Full;
  if (off_z_edges_i == 0 && off_z_edges_j == 0) return PairClass::Empty;
  return PairClass::Mixed;
}

}  // namespace turan
