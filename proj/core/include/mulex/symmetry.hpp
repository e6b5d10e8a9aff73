#pragma once

#include "mulex/multigraph.hpp"

#include <utility>
#include <vector>

namespace mulex {

using Replacement = std::pair<Vertex, Vertex>;  // (source x, target y): x becomes a clone of y

/// Record of an elimination run. products and gamma_sizes include the
/// initial state, so both are one longer than steps.
struct ReplacementTrace {
  std::vector<Replacement> steps;
  std::vector<std::pair<ProductValue, ProductValue>> p_values;  // p(source), p(target) before each step
  std::vector<ProductValue> products;
  std::vector<std::size_t> gamma_sizes;
};

/// p(y): product of the multiplicities at y. 1 when n = 1.
ProductValue vertex_product(const Multigraph& g, Vertex y);

/// G_xy: x copies y's multiplicities and w(xy) becomes 1.
Multigraph replace(const Multigraph& g, Vertex x, Vertex y);

/// Left-to-right composition of replace.
Multigraph replace_seq(const Multigraph& g, const std::vector<Replacement>& pairs);

struct Elimination {
  Multigraph graph;
  ReplacementTrace trace;
};

/// Removes every (1,2,3)-triangle from G in D(n) without lowering P.
/// Throws std::invalid_argument when G is not in D(n).
Elimination eliminate_123(const Multigraph& g);

struct ImproveStep {
  Multigraph graph;
  std::vector<Replacement> move;  // empty when no improving move exists
};

/// One P-increasing move at a (3,1,1)- or (2,1,1)-triangle, if any.
/// Throws std::invalid_argument when G is not in D(n).
ImproveStep local_improve_step(const Multigraph& g);

/// G itself, or the result of one improving move.
Multigraph local_improve(const Multigraph& g);

/// Iterates local_improve until no move applies.
Multigraph local_improve_fixpoint(const Multigraph& g, std::vector<std::vector<Replacement>>* moves = nullptr);

}  // namespace mulex
