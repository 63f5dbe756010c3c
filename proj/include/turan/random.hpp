#pragma once

#include <random>

#include "turan/graph.hpp"

namespace turan {

// each cross-part pair becomes an edge independently with probability p
inline MultipartiteGraph random_subgraph(const PartSizes& ns, double p,
                                         std::mt19937_64& rng) {
  MultipartiteGraph g{ns};
  std::bernoulli_distribution coin(p);
  const int n = g.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (g.part_of(x) != g.part_of(y) && coin(rng)) g.add_edge(x, y);
  return g;
}

inline std::vector<int> random_non_ascending_sizes(int r, int lo, int hi,
                                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(lo, hi);
  std::vector<int> s(static_cast<std::size_t>(r));
  for (auto& v : s) v = pick(rng);
  std::sort(s.begin(), s.end(), std::greater<int>());
  return s;
}

}  // namespace turan
