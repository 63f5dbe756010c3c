#include <gtest/gtest.h>

#include "turan/bitset.hpp"

using turan::Bitset;

TEST(Bitset, SetTestResetCount) {
  Bitset b(130);
  EXPECT_TRUE(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 3);
  EXPECT_TRUE(b.test(64));
  b.reset(64);
  EXPECT_FALSE(b.test(64));
  EXPECT_EQ(b.count(), 2);
}

TEST(Bitset, Iteration) {
  Bitset b = Bitset::of(70, {3, 63, 64, 69});
  EXPECT_EQ(b.to_vector(), (std::vector<int>{3, 63, 64, 69}));
  EXPECT_EQ(b.next_set(0), 3);
  EXPECT_EQ(b.next_set(4), 63);
  EXPECT_EQ(b.next_set(65), 69);
  EXPECT_EQ(b.next_set(70), -1);
}

TEST(Bitset, SetAlgebra) {
  Bitset a = Bitset::of(100, {1, 2, 3, 80});
  Bitset b = Bitset::of(100, {2, 3, 4, 99});
  EXPECT_EQ((a & b).to_vector(), (std::vector<int>{2, 3}));
  EXPECT_EQ(a.and_count(b), 2);
  EXPECT_TRUE(a.intersects(b));
  Bitset c = a;
  c.subtract(b);
  EXPECT_EQ(c.to_vector(), (std::vector<int>{1, 80}));
  EXPECT_TRUE((a & b).is_subset_of(a));
}
