#pragma once

#include "mulex/quotient.hpp"

#include <functional>
#include <random>
#include <vector>

namespace mulex::testing {

/// Neat multigraph built directly: weight 1 inside classes, a random constant
/// 2 or 3 across each pair of classes.
inline Multigraph random_neat(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> cls(0, n - 1);
  std::vector<std::size_t> owner(n);
  for (auto& o : owner) o = cls(rng);
  std::vector<Weight> cross(n * n);
  std::bernoulli_distribution three(0.5);
  for (auto& c : cross) c = three(rng) ? 3 : 2;
  Multigraph g(n, 1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (owner[x] == owner[y]) continue;
      const auto a = std::min(owner[x], owner[y]), b = std::max(owner[x], owner[y]);
      g.set_weight(x, y, cross[a * n + b]);
    }
  }
  return g;
}

inline VWGraph random_forest(std::mt19937_64& rng, std::size_t parts, std::uint32_t max_weight) {
  std::uniform_int_distribution<std::uint32_t> wd(1, max_weight);
  std::vector<std::uint32_t> w(parts);
  for (auto& x : w) x = wd(rng);
  std::vector<PartEdge> edges;
  std::bernoulli_distribution attach(0.75);
  for (PartIndex i = 1; i < parts; ++i) {
    if (!attach(rng)) continue;
    std::uniform_int_distribution<PartIndex> pd(0, i - 1);
    edges.push_back({pd(rng), i});
  }
  return VWGraph(std::move(w), std::move(edges));
}

/// Every vertex-weighted graph with non-increasing part sizes summing to n,
/// over every labelled edge set. Covers all neat positive-weight graphs of
/// order n up to isomorphism.
inline void for_each_vw_graph(std::uint32_t n, const std::function<void(const VWGraph&)>& fn) {
  std::vector<std::uint32_t> parts;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t left, std::uint32_t cap) {
    if (left == 0) {
      const std::size_t k = parts.size();
      std::vector<PartEdge> all;
      for (PartIndex i = 0; i < k; ++i) {
        for (PartIndex j = i + 1; j < k; ++j) all.push_back({i, j});
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::vector<PartEdge> e;
        for (std::size_t b = 0; b < all.size(); ++b) {
          if (mask >> b & 1) e.push_back(all[b]);
        }
        fn(VWGraph(parts, std::move(e)));
      }
      return;
    }
    for (std::uint32_t p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

}  // namespace mulex::testing
