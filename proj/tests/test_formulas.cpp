#include <gtest/gtest.h>

#include <random>

#include "turan/formulas.hpp"
#include "turan/random.hpp"

using namespace turan;

namespace {

std::vector<std::vector<int>> blocks1(std::vector<std::vector<int>> b) {
  // spec-style 1-based blocks -> internal 0-based
  for (auto& blk : b)
    for (auto& p : blk) --p;
  return b;
}

}  // namespace

TEST(GValue, SpecExamples) {
  FormulaResult tie = g_value(7, 4, 3, 2, 2);
  EXPECT_EQ(tie.value, 70u);
  EXPECT_EQ(tie.term, GTerm::Tie);  // n1 = n2+n3 boundary

  FormulaResult r = g_value(5, 4, 3, 2, 2);
  EXPECT_EQ(r.value, 54u);
  EXPECT_EQ(r.term, GTerm::G1Term);

  // permutation rule: unsorted input gives the sorted value
  FormulaResult p = g_value(2, 5, 3, 4, 2);
  EXPECT_EQ(p.value, 54u);
  EXPECT_EQ(p.sort_perm, (std::vector<int>{1, 3, 2, 0}));

  EXPECT_THROW(g_value(0, 1, 1, 1, 1), Error);
  EXPECT_THROW(g_value(1, 1, 1, 1, 0), Error);
}

TEST(BetValue, SpecExamples) {
  FormulaResult a = bet_value(PartSizes{1, 1, 1, 1, 1}, 3);
  EXPECT_EQ(a.value, 6u);
  EXPECT_EQ(a.partition->block_count(), 2u);

  FormulaResult b = bet_value(PartSizes{5, 4, 3, 2}, 3);
  EXPECT_EQ(b.value, 49u);
  EXPECT_EQ(b.partition->blocks, blocks1({{1, 4}, {2, 3}}));

  // r <= t-1: every part its own block, the complete host is K_t-free
  FormulaResult c = bet_value(PartSizes{2, 2}, 3);
  EXPECT_EQ(c.value, 4u);
  EXPECT_EQ(c.partition->block_count(), 2u);
}

TEST(ConjValue, SpecExamples) {
  // k = 1 reduces to bet
  for (const auto& sizes : std::vector<std::vector<int>>{
           {5, 4, 3, 2}, {3, 2, 2, 2, 2}, {2, 2}, {7, 1, 1}}) {
    const PartSizes ns(sizes);
    EXPECT_EQ(conj_value(ns, 3, 1).value, bet_value(ns, 3).value);
  }

  FormulaResult a = conj_value(PartSizes{5, 4, 3, 2}, 3, 2);
  EXPECT_EQ(a.value, 54u);
  EXPECT_EQ(a.partition->blocks, blocks1({{1, 4}, {2, 3}}));
  EXPECT_EQ(a.partition->surplus, 5u);

  FormulaResult b = conj_value(PartSizes{3, 2, 2, 2, 2}, 3, 2);
  EXPECT_EQ(b.value, 34u);
  EXPECT_EQ(b.partition->surplus, 4u);
  std::vector<std::uint64_t> sums = b.partition->block_sums;
  std::sort(sums.begin(), sums.end());
  EXPECT_EQ(sums, (std::vector<std::uint64_t>{5, 6}));

  EXPECT_THROW(conj_value(PartSizes{3, 3}, 4, 2), Error);  // r < t-1
}

TEST(MatchingValue, SpecExamples) {
  EXPECT_EQ(matching_extremal_value(PartSizes{2, 2, 2}, 2), 4u);
  EXPECT_EQ(matching_extremal_value(PartSizes{9, 4, 1}, 1), 0u);
  EXPECT_EQ(matching_extremal_value(PartSizes{5, 4, 3, 2}, 3), 24u);
}

TEST(OptimalBipartition, SpecExamples) {
  OptimalBipartition a = optimal_bipartition(PartSizes{3, 2, 2});
  EXPECT_EQ(a.mindeg_threshold, 3u);
  EXPECT_EQ(a.partition.blocks, blocks1({{1}, {2, 3}}));

  EXPECT_EQ(optimal_bipartition(PartSizes{1, 1}).mindeg_threshold, 1u);

  OptimalBipartition c = optimal_bipartition(PartSizes{5, 4, 3, 2, 1});
  EXPECT_EQ(c.mindeg_threshold, 7u);
  EXPECT_EQ(c.partition.blocks, blocks1({{1, 3}, {2, 4, 5}}));

  EXPECT_THROW(optimal_bipartition(PartSizes{4}), Error);
}

TEST(DeltaExcess, SpecExamples) {
  // e(G1) for (5,4,3,2), k=2 is g by construction
  EXPECT_EQ(delta_excess(54, PartSizes{5, 4, 3, 2}, 2), 0u);
  // complete K_{2,2,2,2}: 24 edges vs g = 16
  EXPECT_EQ(delta_excess(24, PartSizes{2, 2, 2, 2}, 1), 8u);
  EXPECT_EQ(delta_excess(0, PartSizes{2, 2, 2, 2}, 1), 0u);
}

TEST(InductionGap, SpecExamples) {
  EXPECT_EQ(induction_gap(PartSizes{8, 3, 2, 2}, PartSizes{7, 3, 2, 2}, 2), 7);
  EXPECT_EQ(induction_gap(PartSizes{5, 4, 3, 2}, PartSizes{5, 4, 3, 2}, 2), 0);
  EXPECT_EQ(induction_gap(PartSizes{5, 4, 3, 2}, PartSizes{5, 4, 3, 1}, 1), 7);
  EXPECT_THROW(induction_gap(PartSizes{5, 4, 3, 2}, PartSizes{6, 4, 3, 2}, 1),
               Error);
}

TEST(Partitions, StirlingCounts) {
  EXPECT_EQ(count_partitions(5, 2, 2), 15u);   // S(5,2)
  EXPECT_EQ(count_partitions(5, 1, 2), 16u);   // S(5,1)+S(5,2)
  EXPECT_EQ(count_partitions(4, 2, 2), 7u);    // S(4,2)
  EXPECT_EQ(count_partitions(4, 1, 4), 15u);   // Bell(4)
  EXPECT_EQ(count_partitions(6, 3, 3), 90u);   // S(6,3)
}

TEST(Partitions, OverValidatesAndDerives) {
  const PartSizes ns{5, 4, 3, 2};
  BlockPartition p = BlockPartition::over(blocks1({{2, 3}, {1, 4}}), ns);
  EXPECT_EQ(p.blocks, blocks1({{1, 4}, {2, 3}}));  // canonicalized
  EXPECT_EQ(p.block_sums, (std::vector<std::uint64_t>{7, 7}));
  EXPECT_EQ(p.block_mins, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(p.surplus, 5u);
  EXPECT_EQ(p.surplus_block, 0u);
  EXPECT_EQ(p.pair_product_sum(), 49u);

  EXPECT_THROW(BlockPartition::over(blocks1({{1, 2}}), ns), Error);
  EXPECT_THROW(BlockPartition::over(blocks1({{1, 2}, {2, 3, 4}}), ns), Error);
}

TEST(Formulas, PermutationInvariance) {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    std::vector<int> s = random_non_ascending_sizes(4, 1, 9, rng);
    std::vector<int> sh = s;
    std::shuffle(sh.begin(), sh.end(), rng);
    const int k = 1 + static_cast<int>(rng() % 4);
    EXPECT_EQ(g_value(s[0], s[1], s[2], s[3], k).value,
              g_value(sh[0], sh[1], sh[2], sh[3], k).value);
    EXPECT_EQ(bet_value(PartSizes(s), 3).value, bet_value(PartSizes(sh), 3).value);
    EXPECT_EQ(conj_value(PartSizes(s), 3, k).value,
              conj_value(PartSizes(sh), 3, k).value);
    EXPECT_EQ(matching_extremal_value(PartSizes(s), k),
              matching_extremal_value(PartSizes(sh), k));
    EXPECT_EQ(optimal_bipartition(PartSizes(s)).mindeg_threshold,
              optimal_bipartition(PartSizes(sh)).mindeg_threshold);
  }
}

TEST(Formulas, Monotonicity) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 100; ++it) {
    std::vector<int> s = random_non_ascending_sizes(4, 1, 9, rng);
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> bigger = s;
    bigger[rng() % 4] += 1 + static_cast<int>(rng() % 3);
    EXPECT_LE(g_value(s[0], s[1], s[2], s[3], k).value,
              g_value(bigger[0], bigger[1], bigger[2], bigger[3], k).value);
    EXPECT_LE(g_value(s[0], s[1], s[2], s[3], k).value,
              g_value(s[0], s[1], s[2], s[3], k + 1).value);
    EXPECT_LE(bet_value(PartSizes(s), 3).value,
              bet_value(PartSizes(bigger), 3).value);
    EXPECT_LE(conj_value(PartSizes(s), 3, k).value,
              conj_value(PartSizes(bigger), 3, k).value);
    EXPECT_LE(conj_value(PartSizes(s), 3, k).value,
              conj_value(PartSizes(s), 3, k + 1).value);
  }
}

TEST(Formulas, GEqualsBetAtKOne) {
  // sampled here; the acceptance suite sweeps entries <= 12 exhaustively
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    std::vector<int> s = random_non_ascending_sizes(4, 1, 12, rng);
    EXPECT_EQ(g_value(s[0], s[1], s[2], s[3], 1).value,
              bet_value(PartSizes(s), 3).value)
        << PartSizes(s).to_string();
  }
}

TEST(Formulas, ConjMatchesGWhenN4Large) {
  // 4 parts, n4 >= 4k: the eq-(1) maximum over bipartitions agrees with g
  std::mt19937_64 rng(13);
  for (int it = 0; it < 1000; ++it) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::vector<int> s(4);
    for (auto& v : s) v = 4 * k + static_cast<int>(rng() % 20);
    std::sort(s.begin(), s.end(), std::greater<int>());
    EXPECT_EQ(conj_value(PartSizes(s), 3, k).value,
              g_value(s[0], s[1], s[2], s[3], k).value)
        << PartSizes(s).to_string() << " k=" << k;
  }
}

TEST(Formulas, ArgmaxReevaluation) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const int r = 2 + static_cast<int>(rng() % 4);
    std::vector<int> s = random_non_ascending_sizes(r, 1, 10, rng);
    const PartSizes ns(s);
    const int k = 1 + static_cast<int>(rng() % 3);

    FormulaResult bet = bet_value(ns, 3);
    EXPECT_EQ(bet.partition->pair_product_sum(), bet.value);

    FormulaResult conj = conj_value(ns, 3, k);
    EXPECT_EQ(static_cast<std::uint64_t>(k - 1) * conj.partition->surplus +
                  conj.partition->pair_product_sum(),
              conj.value);
  }
}
