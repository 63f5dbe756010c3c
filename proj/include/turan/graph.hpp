#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turan/bitset.hpp"
#include "turan/error.hpp"
#include "turan/part_sizes.hpp"

namespace turan {

using VertexSet = Bitset;

// Simple r-partite graph. Vertex ids are 0..N-1, grouped contiguously by
// part (part 0 first). No loops, no intra-part edges.
//
// Construction-phase mutation is single-owner; once a graph stops being
// mutated it may be shared read-only across threads.
class MultipartiteGraph {
public:
  explicit MultipartiteGraph(PartSizes parts) : parts_(std::move(parts)) {
    const int r = parts_.r();
    const int n = parts_.total();
    part_offset_.reserve(static_cast<std::size_t>(r) + 1);
    int off = 0;
    for (int p = 0; p < r; ++p) {
      part_offset_.push_back(off);
      off += parts_.size(p);
    }
    part_offset_.push_back(off);
    part_of_.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < r; ++p)
      for (int v = part_offset_[static_cast<std::size_t>(p)]; v < part_offset_[static_cast<std::size_t>(p) + 1]; ++v)
        part_of_[static_cast<std::size_t>(v)] = p;
    adj_.assign(static_cast<std::size_t>(n), Bitset(n));
    part_mask_.assign(static_cast<std::size_t>(r), Bitset(n));
    for (int v = 0; v < n; ++v) part_mask_[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(v)])].set(v);
  }

  const PartSizes& parts() const { return parts_; }
  int part_count() const { return parts_.r(); }
  int vertex_count() const { return parts_.total(); }
  int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
  int part_offset(int p) const { return part_offset_[static_cast<std::size_t>(p)]; }
  int part_size(int p) const { return parts_.size(p); }
  std::uint64_t edge_count() const { return edges_; }

  bool valid_vertex(int v) const { return v >= 0 && v < vertex_count(); }

  bool has_edge(int x, int y) const { return adj_[static_cast<std::size_t>(x)].test(y); }

  // idempotent; throws PartViolation for loops and same-part pairs
  void add_edge(int x, int y) {
    check_cross_pair(x, y);
    if (adj_[static_cast<std::size_t>(x)].test(y)) return;
    adj_[static_cast<std::size_t>(x)].set(y);
    adj_[static_cast<std::size_t>(y)].set(x);
    ++edges_;
  }

  // idempotent (used by search code that owns the graph)
  void remove_edge(int x, int y) {
    check_cross_pair(x, y);
    if (!adj_[static_cast<std::size_t>(x)].test(y)) return;
    adj_[static_cast<std::size_t>(x)].reset(y);
    adj_[static_cast<std::size_t>(y)].reset(x);
    --edges_;
  }

  const Bitset& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const Bitset& part_mask(int p) const { return part_mask_[static_cast<std::size_t>(p)]; }

  int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

  // d(v, V_I) for a set I of part ids
  std::uint64_t degree_to(int v, std::span<const int> parts) const {
    require(valid_vertex(v), "vertex out of range");
    std::uint64_t c = 0;
    for (int p : parts) {
      require(p >= 0 && p < part_count(), "part id out of range");
      c += static_cast<std::uint64_t>(adj_[static_cast<std::size_t>(v)].and_count(part_mask_[static_cast<std::size_t>(p)]));
    }
    return c;
  }
  std::uint64_t degree_to(int v, std::initializer_list<int> parts) const {
    return degree_to(v, std::span<const int>(parts.begin(), parts.size()));
  }

  // e(T; G) = e(G) - e(G \ T): edges with at least one endpoint in T
  std::uint64_t edges_incident(const Bitset& T) const {
    std::uint64_t deg_sum = 0, internal_twice = 0;
    T.for_each([&](int v) {
      deg_sum += static_cast<std::uint64_t>(degree(v));
      internal_twice += static_cast<std::uint64_t>(adj_[static_cast<std::size_t>(v)].and_count(T));
    });
    return deg_sum - internal_twice / 2;
  }

  // N(x) ∩ N(y); throws PartViolation when x, y share a part
  Bitset common_neighbors(int x, int y) const {
    check_cross_pair(x, y);
    return adj_[static_cast<std::size_t>(x)] & adj_[static_cast<std::size_t>(y)];
  }

  // induced subgraph on V \ T; throws DegenerateParts if a part empties
  MultipartiteGraph remove_vertices(const Bitset& T) const {
    const int n = vertex_count();
    std::vector<int> new_sizes(static_cast<std::size_t>(part_count()));
    for (int p = 0; p < part_count(); ++p) {
      int removed = T.and_count(part_mask_[static_cast<std::size_t>(p)]);
      new_sizes[static_cast<std::size_t>(p)] = parts_.size(p) - removed;
      if (new_sizes[static_cast<std::size_t>(p)] <= 0)
        fail(ErrorKind::DegenerateParts,
             "removal empties part " + std::to_string(p + 1));
    }
    MultipartiteGraph h{PartSizes(new_sizes)};
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
      if (!T.test(v)) remap[static_cast<std::size_t>(v)] = next++;
    for (int v = 0; v < n; ++v) {
      if (T.test(v)) continue;
      adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
        if (u > v && !T.test(u)) h.add_edge(remap[static_cast<std::size_t>(v)], remap[static_cast<std::size_t>(u)]);
      });
    }
    return h;
  }

  // ascending (x, y), x < y
  template <class F>
  void for_each_edge(F f) const {
    const int n = vertex_count();
    for (int v = 0; v < n; ++v)
      adj_[static_cast<std::size_t>(v)].for_each([&](int u) {
        if (u > v) f(v, u);
      });
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(edges_);
    for_each_edge([&](int x, int y) { e.emplace_back(x, y); });
    return e;
  }

  // adjacency rows as single words; requires <= 64 vertices
  std::vector<std::uint64_t> adjacency_words() const {
    if (vertex_count() > 64)
      fail(ErrorKind::CapExceeded, "graph has more than 64 vertices");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(vertex_count()));
    for (int v = 0; v < vertex_count(); ++v) rows[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)].word0();
    return rows;
  }

  bool structurally_equal(const MultipartiteGraph& o) const {
    return parts_ == o.parts_ && adj_ == o.adj_;
  }

private:
  void check_cross_pair(int x, int y) const {
    require(valid_vertex(x) && valid_vertex(y), "vertex out of range");
    if (x == y) fail(ErrorKind::PartViolation, "loop at vertex " + std::to_string(x));
    if (part_of(x) == part_of(y))
      fail(ErrorKind::PartViolation,
           "vertices " + std::to_string(x) + " and " + std::to_string(y) +
               " are both in part " + std::to_string(part_of(x) + 1));
  }
  void require(bool ok, const char* msg) const {
    if (!ok) fail(ErrorKind::InvalidParameter, msg);
  }

  PartSizes parts_;
  std::vector<int> part_of_;
  std::vector<int> part_offset_;
  std::vector<Bitset> adj_;
  std::vector<Bitset> part_mask_;
  std::uint64_t edges_ = 0;
};

// Text format, one graph per file:
//   parts s1 s2 ... sr
//   edge u v
// with '#' comments and blank lines ignored. Output edge order is
// lexicographic by (min, max) id so serializations diff bit-exactly.
inline MultipartiteGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto parse_fail = [&](const std::string& msg) -> void {
    fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + msg);
  };

  std::optional<MultipartiteGraph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (!g) {
      if (tok != "parts") parse_fail("expected 'parts' header, got '" + tok + "'");
      std::vector<int> sizes;
      int s;
      while (ls >> s) sizes.push_back(s);
      if (!ls.eof()) parse_fail("malformed part size");
      if (sizes.empty()) parse_fail("'parts' header lists no sizes");
      for (int sz : sizes)
        if (sz <= 0) parse_fail("nonpositive part size " + std::to_string(sz));
      g.emplace(PartSizes(sizes));
      continue;
    }
    if (tok != "edge") parse_fail("expected 'edge', got '" + tok + "'");
    long long u, v;
    if (!(ls >> u >> v)) parse_fail("malformed edge line");
    std::string extra;
    if (ls >> extra) parse_fail("trailing tokens on edge line");
    if (u < 0 || v < 0 || u >= g->vertex_count() || v >= g->vertex_count())
      parse_fail("vertex id out of range");
    if (u == v) parse_fail("loop edge");
    if (g->part_of(static_cast<int>(u)) == g->part_of(static_cast<int>(v)))
      parse_fail("intra-part edge " + std::to_string(u) + " " + std::to_string(v));
    g->add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!g) fail(ErrorKind::Parse, "line 0: missing 'parts' header");
  return *std::move(g);
}

inline std::string serialize_graph(const MultipartiteGraph& g) {
  std::string out = "parts";
  for (int p = 0; p < g.part_count(); ++p)
    out += " " + std::to_string(g.part_size(p));
  out += "\n";
  g.for_each_edge([&](int x, int y) {
    out += "edge " + std::to_string(x) + " " + std::to_string(y) + "\n";
  });
  return out;
}

}  // namespace turan
