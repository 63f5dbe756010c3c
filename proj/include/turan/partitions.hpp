#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "turan/error.hpp"
#include "turan/part_sizes.hpp"

namespace turan {

// A partition P of the part ids {0..r-1} into nonempty blocks, with the
// derived quantities n_I (block sum), m_I (block min) and the surplus
// n_P = max_I (n_I - m_I).
//
// Canonical form: parts ascending within blocks, blocks ordered by least
// element. All enumeration and tie-breaking below works on this form.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<std::uint64_t> block_sums;
  std::vector<std::uint64_t> block_mins;
  std::uint64_t surplus = 0;       // n_P
  std::size_t surplus_block = 0;   // first block attaining n_P

  static BlockPartition over(std::vector<std::vector<int>> blocks,
                             const PartSizes& ns) {
    BlockPartition p;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::vector<char> seen(static_cast<std::size_t>(ns.r()), 0);
    int covered = 0;
    for (const auto& b : blocks) {
      if (b.empty()) fail(ErrorKind::InvalidParameter, "empty block");
      for (int part : b) {
        if (part < 0 || part >= ns.r())
          fail(ErrorKind::InvalidParameter, "block refers to invalid part");
        if (seen[static_cast<std::size_t>(part)])
          fail(ErrorKind::InvalidParameter, "blocks are not disjoint");
        seen[static_cast<std::size_t>(part)] = 1;
        ++covered;
      }
    }
    if (covered != ns.r())
      fail(ErrorKind::InvalidParameter, "blocks do not cover all parts");
    p.blocks = std::move(blocks);
    p.recompute(ns);
    return p;
  }

  void recompute(const PartSizes& ns) {
    block_sums.clear();
    block_mins.clear();
    surplus = 0;
    surplus_block = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::uint64_t sum = 0, mn = ~std::uint64_t{0};
      for (int part : blocks[i]) {
        auto s = static_cast<std::uint64_t>(ns.size(part));
        sum += s;
        mn = std::min(mn, s);
      }
      block_sums.push_back(sum);
      block_mins.push_back(mn);
      if (sum - mn > surplus) {
        surplus = sum - mn;
        surplus_block = i;
      }
    }
  }

  std::size_t block_count() const { return blocks.size(); }

  // Σ_{I < I'} n_I · n_I'
  std::uint64_t pair_product_sum() const {
    std::uint64_t total = 0, sq = 0;
    for (auto s : block_sums) {
      total += s;
      sq += s * s;
    }
    return (total * total - sq) / 2;
  }

  // index of the block containing a part id
  std::size_t block_of(int part) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (int q : blocks[i])
        if (q == part) return i;
    fail(ErrorKind::InvalidParameter, "part not in partition");
  }

  friend bool operator==(const BlockPartition& a, const BlockPartition& b) {
    return a.blocks == b.blocks;
  }
};

namespace detail {

// Canonical partitions of {0..r-1} into nonempty blocks, with block count
// between min_blocks and max_blocks. Callback gets the block list; blocks
// emerge already canonical (new blocks opened in order of least element).
template <class F>
void for_each_partition(int r, int min_blocks, int max_blocks, F f) {
  if (r <= 0 || max_blocks <= 0 || min_blocks > r) return;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(max_blocks));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == r) {
      if (static_cast<int>(blocks.size()) >= min_blocks) f(blocks);
      return;
    }
    // can the remaining elements still open enough blocks?
    const int need_more = min_blocks - static_cast<int>(blocks.size());
    if (r - i < need_more) return;
    for (auto& b : blocks) {
      b.push_back(i);
      self(self, i + 1);
      b.pop_back();
    }
    if (static_cast<int>(blocks.size()) < max_blocks) {
      blocks.push_back({i});
      self(self, i + 1);
      blocks.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// number of canonical partitions emitted for (r, min_blocks, max_blocks);
// equals the Stirling numbers S(r, m) summed over the block-count range
inline std::uint64_t count_partitions(int r, int min_blocks, int max_blocks) {
  std::uint64_t c = 0;
  detail::for_each_partition(r, min_blocks, max_blocks,
                             [&](const auto&) { ++c; });
  return c;
}

}  // namespace turan
