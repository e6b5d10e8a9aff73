#pragma once

#include "mulex/multigraph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mulex {

using PartIndex = std::uint32_t;
using PartEdge = std::pair<PartIndex, PartIndex>;

/// Vertex-weighted simple graph: part sizes plus the weight-3 relation
/// between parts. Non-adjacent parts are joined at multiplicity 2.
class VWGraph {
 public:
  VWGraph() = default;
  /// Normalizes edges to i < j, sorted and unique. Throws std::invalid_argument
  /// on zero weights, loops, or out-of-range indices.
  VWGraph(std::vector<std::uint32_t> parts, std::vector<PartEdge> edges);

  std::size_t size() const noexcept { return parts_.size(); }
  std::uint32_t part(PartIndex i) const { return parts_.at(i); }
  const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
  const std::vector<PartEdge>& edges() const noexcept { return edges_; }

  bool has_edge(PartIndex i, PartIndex j) const;
  std::size_t degree(PartIndex i) const;
  std::uint64_t total_weight() const;

  friend bool operator==(const VWGraph&, const VWGraph&) = default;

 private:
  std::vector<std::uint32_t> parts_;
  std::vector<PartEdge> edges_;
};

/// mu <= 3 and no (1,1,2), (1,1,3) or (1,2,3) triangle.
bool is_neat(const Multigraph& g);

/// Classes of the weight-1 relation, each sorted, ordered by least vertex.
/// Requires a neat multigraph with all weights >= 1.
std::vector<VertexSet> neat_classes(const Multigraph& g);

/// The vertex-weighted graph of weight-1 classes, edges where the cross weight is 3.
/// Throws std::invalid_argument for non-neat input or zero weights; throws
/// InvariantViolation if a cross weight is not constant.
VWGraph quotient(const Multigraph& g);

/// prod 3^{|U||V|} over edges times prod 2^{|U||V|} over non-edges.
ProductValue f_pi(const VWGraph& h);

bool is_forest(const VWGraph& h);

/// Center of a star (k >= 2 parts, k-1 edges, one part adjacent to all).
/// For two parts joined by an edge, part 0.
std::optional<PartIndex> star_center(const VWGraph& h);
bool is_star(const VWGraph& h);

struct Realization {
  Multigraph graph;
  bool forest = true;  // false: NC(n) is not guaranteed
};

/// Neat multigraph whose quotient is h. Part i occupies a consecutive label
/// block in part order unless part_of_vertex assigns labels explicitly.
Realization realize(const VWGraph& h,
                    const std::optional<std::vector<PartIndex>>& part_of_vertex = std::nullopt);

struct StarTransform {
  VWGraph graph;
  PartIndex center = 0;
  bool strict = false;
  std::optional<PartEdge> witness;  // (center, W) with equal weights, when not strict
};

/// Rewires a forest into a star centered at a maximum-weight part without
/// lowering f_pi. Throws std::invalid_argument for non-forests or < 2 parts.
StarTransform star_transform(const VWGraph& h);

/// Splits non-center part W of a star into parts of weight |W|-1 (kept at W's
/// index) and 1 (appended), both joined to the center.
VWGraph split_leaf(const VWGraph& h, PartIndex leaf);

struct GXConstruction {
  Multigraph graph;
  std::size_t r_x = 0;           // |R| inside X, = ceil(beta t)
  std::size_t r_rest = 0;        // |R| outside X, optimal for W(n - t)
  ProductValue rest_product = 1;  // P(A), A in P(W(n - t))
};

/// The W(n) member assembled from an optimal W(n - t) on [n] \ X and the
/// W(t) member with |R| = ceil(beta t) on X. X is 0-based, 2 <= |X| <= n.
GXConstruction build_G_X(std::size_t n, const VertexSet& x);

}  // namespace mulex
