#pragma once

#include "mulex/interval.hpp"
#include "mulex/multigraph.hpp"
#include "mulex/numeric.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mulex {

/// Work cap for pattern and edge enumeration (weight functions, or edge-subset visits).
inline constexpr std::uint64_t kDefaultContainerBudget = 50'000'000;

/// Vertex (f, u) of H(n): pair f = {x, y} with multiplicity u.
struct HVertex {
  Vertex x = 0;
  Vertex y = 0;
  Weight u = 0;
  friend bool operator==(const HVertex&, const HVertex&) = default;
};

/// id = pair_index(n, x, y) * (q + 1) + u.
std::uint64_t encode_hvertex(std::size_t n, std::uint64_t q, const HVertex& v);
HVertex decode_hvertex(std::size_t n, std::uint64_t q, std::uint64_t id);

struct PatternCount {
  std::uint64_t g = 0;
  std::uint64_t functions_scanned = 0;
};

/// Weight functions on the pairs of [s] (pair_index order) with every weight
/// <= q and total > q. visit, if set, sees each one. BudgetExceeded if
/// (q+1)^C(s,2) is above the budget.
PatternCount bad_patterns(std::uint32_t s, std::uint64_t q,
                          const std::function<void(std::span<const Weight>)>& visit = {},
                          std::uint64_t budget = kDefaultContainerBudget);

struct ContainerStats {
  std::size_t n = 0;
  std::uint32_t s = 0;
  std::uint64_t q = 0;
  std::uint64_t N = 0;
  BigInt edge_count = 0;
  Rational avg_degree = 0;
  std::uint64_t g = 0;
};

ContainerStats hypergraph_stats(std::size_t n, std::uint32_t s, std::uint64_t q,
                                std::uint64_t budget = kDefaultContainerBudget);

/// Streams the edges of H(n) as sorted vertex ids. Checks the shape of every edge.
void for_each_edge(std::size_t n, std::uint32_t s, std::uint64_t q,
                   const std::function<void(std::span<const std::uint64_t>)>& visit,
                   std::uint64_t budget = kDefaultContainerBudget);

struct CodegreeProfile {
  ContainerStats stats;
  Rational tau = 1;
  /// Index j - 2 for j = 2..C(s,2).
  std::vector<Rational> delta_j;
  std::vector<BigInt> sum_dj;
  /// dj_max[j-2][x] = d^(j)(x).
  std::vector<std::vector<std::uint64_t>> dj_max;
  Rational delta = 0;
};

/// Exact co-degree statistics by walking every edge and all of its subsets.
CodegreeProfile codegree_profile(std::size_t n, std::uint32_t s, std::uint64_t q, const Rational& tau,
                                 std::uint64_t budget = kDefaultContainerBudget);

/// Delta(H, tau) from sum_dj, d, N and tau alone.
Rational recompute_delta(const CodegreeProfile& p);

/// d(sigma) for every sigma of size 2..C(s,2) inside some edge, keyed by sorted ids.
std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> realized_codegrees(
    std::size_t n, std::uint32_t s, std::uint64_t q, std::uint64_t budget = kDefaultContainerBudget);

struct DSigmaCheck {
  std::uint32_t j = 0;
  std::uint64_t realized = 0;  // sigma with |sigma| = j and d(sigma) > 0
  std::uint64_t max_d = 0;
  Interval bound;  // g n^{s - 1/2 - sqrt(2j)}
  std::uint64_t violations = 0;
};

struct HypothesisReport {
  std::size_t n = 0;
  std::uint32_t s = 0;
  std::uint64_t q = 0;
  Rational epsilon;
  unsigned precision = 0;
  Interval tau;        // n^{-1/(4s)}
  Interval delta;      // Delta(H, tau)
  Rational threshold;  // epsilon / (12 r!)
  bool holds = false;  // Delta <= threshold, certified
  std::optional<bool> tau_below_half;
  std::vector<DSigmaCheck> dsigma;
  std::uint64_t dsigma_violations() const;
};

/// Throws std::invalid_argument unless 0 < epsilon < 1/2, PrecisionError if the
/// comparison stays undecided at kMaxPrecision.
HypothesisReport check_hypothesis(std::size_t n, std::uint32_t s, std::uint64_t q, const Rational& epsilon,
                                  unsigned bits = 64, std::uint64_t budget = kDefaultContainerBudget);

/// {(f, w(f))}, sorted ids.
std::vector<std::uint64_t> independent_set_of(const Multigraph& g, std::uint64_t q);

/// No edge of H(n) inside the set.
bool is_independent(std::size_t n, std::uint32_t s, std::uint64_t q, std::span<const std::uint64_t> ids);

/// The multigraph when the set has exactly one vertex per pair.
std::optional<Multigraph> graph_of(std::size_t n, std::uint64_t q, std::span<const std::uint64_t> ids);

}  // namespace mulex
