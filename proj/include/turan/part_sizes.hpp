#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "turan/error.hpp"

namespace turan {

// Class sizes (n_1, ..., n_r). Parts are indexed 0..r-1 internally; all
// user-facing text uses 1-based ids.
class PartSizes {
public:
  explicit PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) fail(ErrorKind::InvalidSizes, "need at least one part");
    for (std::size_t i = 0; i < sizes_.size(); ++i)
      if (sizes_[i] <= 0)
        fail(ErrorKind::InvalidSizes, "part " + std::to_string(i + 1) +
                                          " has nonpositive size " +
                                          std::to_string(sizes_[i]));
  }
  PartSizes(std::initializer_list<int> sizes)
      : PartSizes(std::vector<int>(sizes)) {}

  int r() const { return static_cast<int>(sizes_.size()); }
  int size(int part) const { return sizes_[static_cast<std::size_t>(part)]; }
  int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
  int min_size() const { return *std::min_element(sizes_.begin(), sizes_.end()); }
  const std::vector<int>& sizes() const { return sizes_; }

  // sum of sizes over a set of part ids
  std::uint64_t sum_over(std::span<const int> parts) const {
    std::uint64_t s = 0;
    for (int p : parts) s += static_cast<std::uint64_t>(sizes_[static_cast<std::size_t>(p)]);
    return s;
  }

  bool is_sorted_non_ascending() const {
    return std::is_sorted(sizes_.begin(), sizes_.end(), std::greater<int>());
  }

  // stable permutation: sort_permutation()[i] = original index of the part at
  // sorted position i
  std::vector<int> sort_permutation() const {
    std::vector<int> perm(sizes_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return sizes_[static_cast<std::size_t>(a)] > sizes_[static_cast<std::size_t>(b)]; });
    return perm;
  }

  std::vector<int> sorted_view() const {
    std::vector<int> s = sizes_;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
  }

  PartSizes sorted() const { return PartSizes(sorted_view()); }

  std::string to_string(char sep = '-') const {
    std::string s;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(sizes_[i]);
    }
    return s;
  }

  friend bool operator==(const PartSizes&, const PartSizes&) = default;

private:
  std::vector<int> sizes_;
};

}  // namespace turan
