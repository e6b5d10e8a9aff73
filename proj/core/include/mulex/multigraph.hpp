#pragma once

#include "mulex/numeric.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mulex {

/// Vertices are 0-based in the API; the .mg text format is positional.
using Vertex = std::uint32_t;
using Weight = std::uint8_t;
using VertexSet = std::vector<Vertex>;

/// Complete multigraph ([n], w): one multiplicity per unordered pair.
///
/// Weights are stored row-major over pairs (0,1),(0,2),...,(0,n-1),(1,2),...
/// which is also the order of the .mg format.
class Multigraph {
 public:
  explicit Multigraph(std::size_t n = 1, Weight fill = 0);
  Multigraph(std::size_t n, std::vector<Weight> weights);

  std::size_t order() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return weights_.size(); }

  Weight weight(Vertex x, Vertex y) const { return weights_[pair_index(x, y)]; }
  void set_weight(Vertex x, Vertex y, Weight w) { weights_[pair_index(x, y)] = w; }

  std::span<const Weight> weights() const noexcept { return weights_; }

  /// Index of pair {x,y} in weights(); x != y required.
  std::size_t pair_index(Vertex x, Vertex y) const;
  static std::size_t pair_index(std::size_t n, Vertex x, Vertex y);

  /// Induced sub-multigraph on the listed vertices, relabelled 0..k-1 in list order.
  Multigraph induced(std::span<const Vertex> vertices) const;

  /// pi[v] is the new label of v.
  Multigraph relabeled(std::span<const Vertex> pi) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_;
  std::vector<Weight> weights_;
};

struct GraphStats {
  std::uint64_t sum = 0;      // S(G)
  ProductValue product = 1;   // P(G)
  Weight multiplicity = 0;    // mu(G), 0 when n = 1
};

GraphStats stats(const Multigraph& g);
ProductValue product(const Multigraph& g);
std::uint64_t weight_sum(const Multigraph& g);
Weight multiplicity(const Multigraph& g);

/// Total multiplicity inside a vertex subset.
std::uint64_t window_sum(const Multigraph& g, std::span<const Vertex> window);

/// All s-subsets X with S(G[X]) > q, lexicographic. Empty when n < s.
std::vector<VertexSet> violations(const Multigraph& g, std::uint32_t s, std::uint64_t q);

bool is_sq_graph(const Multigraph& g, std::uint32_t s, std::uint64_t q);

/// Triples whose three multiplicities form the given multiset.
std::vector<std::array<Vertex, 3>> triangles(const Multigraph& g, std::array<Weight, 3> pattern);

/// (1,2,3)-triangles, Gamma(G).
std::vector<std::array<Vertex, 3>> gamma_123(const Multigraph& g);

/// Some X with G[X] isomorphic to C_t(3,2), listed in cycle order; nullopt if none.
std::optional<VertexSet> find_cycle_copy(const Multigraph& g, std::uint32_t t);

struct WindowMetrics {
  std::uint64_t sum = 0;     // S_z(X)
  ProductValue product = 1;  // P_z(X)
};

/// Cross sum and product from z into X. Throws std::invalid_argument if z is in X.
WindowMetrics window_metrics(const Multigraph& g, std::span<const Vertex> x, Vertex z);

/// G+ : every multiplicity incremented.
Multigraph plus_one(const Multigraph& g);

/// Number of submultigraphs of G, i.e. P(G+).
ProductValue count_submultigraphs(const Multigraph& g);

/// |{xy : w(xy) != w'(xy)}|. Throws std::invalid_argument on mismatched order.
std::uint64_t edit_distance(const Multigraph& a, const Multigraph& b);

/// distance <= delta * n^2.
bool is_delta_close(const Multigraph& a, const Multigraph& b, const Rational& delta);

/// W_a(n) member with L = {0..n-r-1}, R = {n-r..n-1}; weights a-1 / a / a+1.
Multigraph build_W(std::size_t n, std::size_t r, Weight a = 2);

/// C_t(3,2) with cycle edges (i, i+1 mod t) of weight 3 and chords of weight 2.
Multigraph build_cycle(std::size_t t);

inline constexpr std::size_t kDefaultCanonicalLimit = 10;

/// Lexicographically least weight sequence over all relabelings, as bytes.
/// Equal keys iff isomorphic. Throws std::invalid_argument when n > limit.
std::string canonical_key(const Multigraph& g, std::size_t limit = kDefaultCanonicalLimit);

/// The multigraph whose weight sequence is the key (the canonical representative).
Multigraph from_canonical_key(const std::string& key);

bool is_isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace mulex
