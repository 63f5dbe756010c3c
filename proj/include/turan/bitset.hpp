#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace turan {

// Word-packed vertex set with a fixed capacity chosen at construction.
// Binary operations require both operands to have the same capacity.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int capacity)
      : n_(capacity), w_((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}

  static Bitset of(int capacity, std::initializer_list<int> bits) {
    Bitset b(capacity);
    for (int i : bits) b.set(i);
    return b;
  }
  static Bitset from_indices(int capacity, std::span<const int> bits) {
    Bitset b(capacity);
    for (int i : bits) b.set(i);
    return b;
  }

  int capacity() const { return n_; }

  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this := this \ o
  Bitset& subtract(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  int and_count(const Bitset& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  // smallest set index >= from, or -1
  int next_set(int from) const {
    if (from >= n_) return -1;
    if (from < 0) from = 0;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        int i = static_cast<int>(wi * 64) + std::countr_zero(w);
        return i < n_ ? i : -1;
      }
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int i = next_set(0); i >= 0; i = next_set(i + 1)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  // low 64 bits; valid view of the whole set when capacity <= 64
  std::uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace turan
