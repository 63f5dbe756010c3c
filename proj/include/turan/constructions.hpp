#pragma once

#include <optional>

#include "turan/formulas.hpp"
#include "turan/graph.hpp"

namespace turan {

// Generators for the extremal and near-extremal graphs. Every builder
// relabels the given sizes into non-ascending order first; part indices in
// explicitly supplied partitions refer to that sorted order.

namespace detail {

// a and b must be disjoint
inline void add_complete_between(MultipartiteGraph& g, const Bitset& a,
                                 const Bitset& b) {
  a.for_each([&](int x) {
    b.for_each([&](int y) { g.add_edge(x, y); });
  });
}

inline Bitset parts_union_mask(const MultipartiteGraph& g,
                               std::initializer_list<int> parts) {
  Bitset m(g.vertex_count());
  for (int p : parts) m |= g.part_mask(p);
  return m;
}

// first k-1 vertices of a part
inline Bitset z_in_part(const MultipartiteGraph& g, int part, int k) {
  Bitset z(g.vertex_count());
  for (int i = 0; i < k - 1; ++i) z.set(g.part_offset(part) + i);
  return z;
}

inline void require_z_fits(int part_size, int k) {
  if (part_size < k - 1)
    fail(ErrorKind::InfeasibleConstruction,
         "class of size " + std::to_string(part_size) +
             " cannot hold the " + std::to_string(k - 1) + " special vertices");
}

}  // namespace detail

// K_{V1∪V4, V2∪V3} ∪ K_{Z, V1} with Z the first k-1 vertices of V4.
// Edge count is (n1+n4)(n2+n3) + (k-1)n1.
inline MultipartiteGraph build_g1(const PartSizes& ns, int k) {
  if (ns.r() != 4)
    fail(ErrorKind::InvalidParameter, "construction needs exactly 4 parts");
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  MultipartiteGraph g{ns.sorted()};
  detail::require_z_fits(g.part_size(3), k);
  detail::add_complete_between(g, detail::parts_union_mask(g, {0, 3}),
                               detail::parts_union_mask(g, {1, 2}));
  Bitset z = detail::z_in_part(g, 3, k);
  detail::add_complete_between(g, z, g.part_mask(0));
  return g;
}

// K_{V1, V2∪V3∪V4} ∪ K_{Z, V2∪V3} with Z the first k-1 vertices of V4.
// Edge count is n1(n2+n3+n4) + (k-1)(n2+n3).
inline MultipartiteGraph build_g2(const PartSizes& ns, int k) {
  if (ns.r() != 4)
    fail(ErrorKind::InvalidParameter, "construction needs exactly 4 parts");
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  MultipartiteGraph g{ns.sorted()};
  detail::require_z_fits(g.part_size(3), k);
  detail::add_complete_between(g, g.part_mask(0),
                               detail::parts_union_mask(g, {1, 2, 3}));
  Bitset z = detail::z_in_part(g, 3, k);
  detail::add_complete_between(g, z, detail::parts_union_mask(g, {1, 2}));
  return g;
}

// The conjectured kK_t-free extremal graph: super-classes V_I along a
// partition into t-1 blocks joined completely, plus Z (k-1 vertices of the
// smallest class of the surplus block I0) joined to the rest of V_{I0}.
// Defaults to the argmax partition of conj_value. Edge count is
// (k-1)·n_P + Σ_{I≠I'} n_I·n_I'.
inline MultipartiteGraph build_conjectured(
    const PartSizes& ns, int t, int k,
    std::optional<BlockPartition> partition = {}) {
  const PartSizes sorted = ns.sorted();
  BlockPartition p = partition ? *std::move(partition)
                               : *conj_value(sorted, t, k).partition;
  if (static_cast<int>(p.block_count()) != t - 1)
    fail(ErrorKind::InvalidParameter, "partition must have exactly t-1 blocks");
  p.recompute(sorted);

  MultipartiteGraph g{sorted};
  std::vector<Bitset> super;
  super.reserve(p.block_count());
  for (const auto& block : p.blocks) {
    Bitset m(g.vertex_count());
    for (int part : block) m |= g.part_mask(part);
    super.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < super.size(); ++i)
    for (std::size_t j = i + 1; j < super.size(); ++j)
      detail::add_complete_between(g, super[i], super[j]);

  if (k >= 2 && p.surplus > 0) {
    const auto& block = p.blocks[p.surplus_block];
    // smallest class in I0; ties go to the highest part id, matching the
    // Z ⊆ V4 convention of the 4-part constructions
    int i0 = block.front();
    for (int part : block)
      if (g.part_size(part) <= g.part_size(i0)) i0 = part;
    detail::require_z_fits(g.part_size(i0), k);
    Bitset z = detail::z_in_part(g, i0, k);
    Bitset rest = super[p.surplus_block];
    rest.subtract(g.part_mask(i0));
    detail::add_complete_between(g, z, rest);
  }
  return g;
}

// Complete bipartite graph between the two super-classes of a bipartition;
// triangle-free with minimum degree min(n_I1, n_I2).
inline MultipartiteGraph build_bipartite_along(const PartSizes& ns,
                                               const BlockPartition& bipartition) {
  if (bipartition.block_count() != 2)
    fail(ErrorKind::InvalidParameter, "expected exactly 2 blocks");
  const PartSizes sorted = ns.sorted();
  BlockPartition p = BlockPartition::over(bipartition.blocks, sorted);
  MultipartiteGraph g{sorted};
  Bitset a(g.vertex_count()), b(g.vertex_count());
  for (int part : p.blocks[0]) a |= g.part_mask(part);
  for (int part : p.blocks[1]) b |= g.part_mask(part);
  detail::add_complete_between(g, a, b);
  return g;
}

// The complete multipartite host K_{n1,...,nr}
inline MultipartiteGraph build_complete(const PartSizes& ns) {
  MultipartiteGraph g{ns.sorted()};
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.part_of(x) != g.part_of(y)) g.add_edge(x, y);
  return g;
}

}  // namespace turan
