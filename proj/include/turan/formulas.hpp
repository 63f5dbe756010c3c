#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "turan/partitions.hpp"

namespace turan {

// Which branch of the 4-partite extremal function attained the maximum.
// G1Term is (n1+n4)(n2+n3) + (k-1)n1, G2Term is n1(n2+n3+n4) + (k-1)(n2+n3).
enum class GTerm { None, G1Term, G2Term, Tie };

inline const char* to_string(GTerm t) {
  switch (t) {
    case GTerm::G1Term: return "g1";
    case GTerm::G2Term: return "g2";
    case GTerm::Tie: return "tie";
    default: return "none";
  }
}

struct FormulaResult {
  std::uint64_t value = 0;
  std::optional<BlockPartition> partition;  // argmax (partition formulas only)
  GTerm term = GTerm::None;                 // g only
  std::vector<int> sort_perm;               // g only: input index at each sorted position
};

// max{(n1+n4)(n2+n3) + (k-1)n1, n1(n2+n3+n4) + (k-1)(n2+n3)} on the
// non-ascending reordering of (a, b, c, d)
inline FormulaResult g_value(int a, int b, int c, int d, int k) {
  const std::array<int, 4> in{a, b, c, d};
  for (int s : in)
    if (s <= 0) fail(ErrorKind::InvalidParameter, "sizes must be positive");
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");

  std::vector<int> perm{0, 1, 2, 3};
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int i, int j) { return in[static_cast<std::size_t>(i)] > in[static_cast<std::size_t>(j)]; });
  const auto n1 = static_cast<std::uint64_t>(in[static_cast<std::size_t>(perm[0])]);
  const auto n2 = static_cast<std::uint64_t>(in[static_cast<std::size_t>(perm[1])]);
  const auto n3 = static_cast<std::uint64_t>(in[static_cast<std::size_t>(perm[2])]);
  const auto n4 = static_cast<std::uint64_t>(in[static_cast<std::size_t>(perm[3])]);
  const auto kk = static_cast<std::uint64_t>(k - 1);

  const std::uint64_t t1 = (n1 + n4) * (n2 + n3) + kk * n1;
  const std::uint64_t t2 = n1 * (n2 + n3 + n4) + kk * (n2 + n3);

  FormulaResult res;
  res.value = std::max(t1, t2);
  res.term = t1 == t2 ? GTerm::Tie : (t1 > t2 ? GTerm::G1Term : GTerm::G2Term);
  res.sort_perm = std::move(perm);
  return res;
}

inline FormulaResult g_value(const PartSizes& ns, int k) {
  if (ns.r() != 4)
    fail(ErrorKind::InvalidParameter, "g is defined for exactly 4 parts");
  return g_value(ns.size(0), ns.size(1), ns.size(2), ns.size(3), k);
}

namespace detail {

// maximize `score` over canonical partitions; lexicographically-least
// canonical argmax wins ties
template <class Score>
FormulaResult maximize_over_partitions(const PartSizes& ns, int min_blocks,
                                       int max_blocks, Score score) {
  FormulaResult best;
  bool have = false;
  for_each_partition(ns.r(), min_blocks, max_blocks,
                     [&](const std::vector<std::vector<int>>& blocks) {
                       BlockPartition p;
                       p.blocks = blocks;
                       p.recompute(ns);
                       const std::uint64_t v = score(p);
                       if (!have || v > best.value ||
                           (v == best.value && blocks < best.partition->blocks)) {
                         have = true;
                         best.value = v;
                         best.partition = std::move(p);
                       }
                     });
  if (!have) fail(ErrorKind::InvalidParameter, "no admissible partition");
  return best;
}

}  // namespace detail

// max over partitions of the part ids into at most t-1 nonempty blocks of
// Σ_{I≠I'} n_I·n_I'  (the K_t-free extremal value)
inline FormulaResult bet_value(const PartSizes& ns, int t) {
  if (t < 2) fail(ErrorKind::InvalidParameter, "t must be at least 2");
  const int cap = std::min(t - 1, ns.r());
  return detail::maximize_over_partitions(
      ns, 1, cap, [](const BlockPartition& p) { return p.pair_product_sum(); });
}

// max over partitions into exactly t-1 nonempty blocks of
// (k-1)·n_P + Σ_{I≠I'} n_I·n_I'  (the conjectured kK_t extremal value)
inline FormulaResult conj_value(const PartSizes& ns, int t, int k) {
  if (t < 3) fail(ErrorKind::InvalidParameter, "t must be at least 3");
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  if (ns.r() < t - 1)
    fail(ErrorKind::InvalidParameter,
         "need at least t-1 parts to form t-1 nonempty blocks");
  const auto kk = static_cast<std::uint64_t>(k - 1);
  return detail::maximize_over_partitions(
      ns, t - 1, t - 1, [kk](const BlockPartition& p) {
        return kk * p.surplus + p.pair_product_sum();
      });
}

// (k-1)(n_1 + ... + n_{r-1}) on non-ascending sizes: the kK_2 extremal value
inline std::uint64_t matching_extremal_value(const PartSizes& ns, int k) {
  if (k < 1) fail(ErrorKind::InvalidParameter, "k must be at least 1");
  return static_cast<std::uint64_t>(k - 1) *
         static_cast<std::uint64_t>(ns.total() - ns.min_size());
}

struct OptimalBipartition {
  BlockPartition partition;           // two blocks
  std::uint64_t mindeg_threshold = 0; // min(n_I1, n_I2)
};

// bipartition {I, I'} of the part ids maximizing min(n_I, n_I'); ties go to
// the lexicographically-least block containing part 0
inline OptimalBipartition optimal_bipartition(const PartSizes& ns) {
  if (ns.r() < 2)
    fail(ErrorKind::InvalidParameter, "bipartition needs at least 2 parts");
  auto res = detail::maximize_over_partitions(
      ns, 2, 2, [](const BlockPartition& p) {
        return std::min(p.block_sums[0], p.block_sums[1]);
      });
  return OptimalBipartition{*std::move(res.partition), res.value};
}

// Δ = max{0, e - g(ns, k)} for a 4-part size vector
inline std::uint64_t delta_excess(std::uint64_t e_count, const PartSizes& ns,
                                  int k) {
  const std::uint64_t g = g_value(ns, k).value;
  return e_count > g ? e_count - g : 0;
}

// g(ns, k) - g(ns', k) where ns' is ns with some entries reduced; may be
// negative for the caller to compare against e(T; G)
inline std::int64_t induction_gap(const PartSizes& ns, const PartSizes& reduced,
                                  int k) {
  if (ns.r() != 4 || reduced.r() != 4)
    fail(ErrorKind::InvalidParameter, "induction gap needs 4-part vectors");
  for (int i = 0; i < 4; ++i)
    if (reduced.size(i) > ns.size(i))
      fail(ErrorKind::InvalidParameter,
           "reduced sizes exceed the original in coordinate " +
               std::to_string(i + 1));
  return static_cast<std::int64_t>(g_value(ns, k).value) -
         static_cast<std::int64_t>(g_value(reduced, k).value);
}

}  // namespace turan
