#pragma once

#include "mulex/multigraph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace mulex::testing {

inline Multigraph random_graph(std::mt19937_64& rng, std::size_t n, Weight lo, Weight hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Weight> w(n * (n - 1) / 2);
  for (auto& x : w) x = static_cast<Weight>(d(rng));
  return Multigraph(n, std::move(w));
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = static_cast<Vertex>(i);
  std::shuffle(pi.begin(), pi.end(), rng);
  return pi;
}

/// Calls fn on every multigraph of order n with weights in [0, cap].
inline void for_each_graph(std::size_t n, Weight cap, const std::function<void(const Multigraph&)>& fn) {
  const std::size_t m = n * (n - 1) / 2;
  std::vector<Weight> w(m, 0);
  while (true) {
    fn(Multigraph(n, w));
    std::size_t i = 0;
    while (i < m && w[i] == cap) w[i++] = 0;
    if (i == m) return;
    ++w[i];
  }
}

/// Multigraph from a weight list in pair order, for short literals.
inline Multigraph mg(std::size_t n, std::vector<int> w) {
  std::vector<Weight> ws(w.begin(), w.end());
  return Multigraph(n, std::move(ws));
}

}  // namespace mulex::testing
