#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mulex {

/// Calls fn(span of k sorted indices) for every k-subset of {0..n-1}, in
/// lexicographic order. fn may return false to stop early; returns false iff
/// stopped.
template <typename Fn>
bool for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::uint32_t> idx(k);
  for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(std::span<const std::uint32_t>(idx))) return false;
    if (k == 0) return true;
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && idx[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) return true;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace mulex
