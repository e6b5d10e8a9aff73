#pragma once

#include "mulex/multigraph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mulex {

enum class Objective { product, sum };

/// Search universe. all: F(n,s,q). The others add mu <= 3 and the (3,8) and
/// (4,15) windows, then filter leaves by the family predicate.
enum class Family { all, D, C, NC, W };

enum class EdgeOrder { lexicographic, reverse, colex };

std::string to_string(Objective o);
std::string to_string(Family f);
Objective parse_objective(const std::string& s);
Family parse_family(const std::string& s);

struct SearchOptions {
  Objective objective = Objective::product;
  Family family = Family::all;
  unsigned weight_cap = 0;          // 0: q for family all, 3 otherwise
  std::size_t witness_cap = 100;    // 0: keep every isomorphism class
  std::uint64_t node_budget = 0;    // 0: unlimited
  unsigned threads = 1;
  bool prune = true;                // bound pruning; window feasibility is always enforced
  EdgeOrder order = EdgeOrder::colex;
};

struct ExtremalResult {
  Objective objective = Objective::product;
  Family family = Family::all;
  std::size_t n = 0;
  std::uint32_t s = 0;
  std::uint64_t q = 0;
  BigInt value = 0;
  /// One representative per isomorphism class, sorted by canonical key.
  std::vector<Multigraph> witnesses;
  bool witnesses_truncated = false;
  std::uint64_t nodes_explored = 0;
};

struct CountResult {
  std::size_t n = 0;
  std::uint32_t s = 0;
  std::uint64_t q = 0;
  BigInt count = 0;
  bool exact = true;
  std::uint64_t nodes_explored = 0;
};

/// |F(n,s,q)| by depth-first assignment with window-sum pruning.
/// Throws std::invalid_argument for n < s, BudgetExceeded past the budget.
CountResult count_F(std::size_t n, std::uint32_t s, std::uint64_t q, const SearchOptions& opts = {});

/// Exact optimum of the objective over the family, with optimal graphs up to isomorphism.
ExtremalResult extremal(std::size_t n, std::uint32_t s, std::uint64_t q, const SearchOptions& opts = {});

/// All optimal graphs up to isomorphism (no witness cap).
std::vector<Multigraph> extremal_set(std::size_t n, std::uint32_t s, std::uint64_t q, SearchOptions opts = {});

struct CrossCheck {
  std::size_t block = 0;  // index into triples, then pairs
  Vertex z = 0;
  std::uint64_t sum = 0;
  ProductValue product = 1;
  bool ok = true;  // sum within the bound implies product within the bound
};

struct ViolationDecomposition {
  std::vector<std::array<Vertex, 3>> triples;
  std::vector<std::array<Vertex, 2>> pairs;
  VertexSet remainder;
  bool remainder_in_D = false;
  std::vector<CrossCheck> cross_checks;
  bool cross_checks_ok() const;
};

/// Greedy disjoint triples with S >= 9, then disjoint pairs with S >= 4 on the
/// rest. Throws InvariantViolation if G is in F(n,4,15) but the remainder is not in D.
ViolationDecomposition violation_decomposition(const Multigraph& g);

/// a + b <= 4 implies ab <= 4, and a + b + c <= 6 implies abc <= 8, over all naturals.
bool arithgeom_holds();

}  // namespace mulex
