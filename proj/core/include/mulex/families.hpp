#pragma once

#include "mulex/multigraph.hpp"

namespace mulex {

/// Membership of one multigraph in every family the reduction chain uses.
///
/// A_{i,j,k} means F(n,4,15) plus omitting (i,j,k)-triangles, so A_{3,2,1}
/// and A_{1,2,3} coincide. Implications: W => NC => C => D => F(n,4,15).
struct FamilyFlags {
  bool F_4_15 = false;
  bool F_3_8 = false;
  bool F_le3_4_15 = false;
  bool D = false;
  bool A_311 = false;
  bool A_211 = false;
  bool A_321 = false;
  bool A_123 = false;
  bool C = false;
  bool NC = false;
  bool W = false;

  friend bool operator==(const FamilyFlags&, const FamilyFlags&) = default;
};

FamilyFlags family_membership(const Multigraph& g);

bool in_D(const Multigraph& g);
bool in_C(const Multigraph& g);
bool in_NC(const Multigraph& g);

/// NC by exhaustive C_t(3,2) search over 3 <= t <= n (no quotient shortcut).
bool in_NC_exhaustive(const Multigraph& g);

/// Whether some partition (L, R) realizes W(n).
bool in_W(const Multigraph& g);

/// W membership by trying all 2^n bipartitions; requires n <= 20.
bool in_W_bipartitions(const Multigraph& g);

/// W membership by reading L off the weight-1 pairs; exact for every n.
bool in_W_structural(const Multigraph& g);

/// Smallest t >= 3 with C_t(3,2) in G, or 0 if none.
std::uint32_t shortest_cycle_copy(const Multigraph& g);

}  // namespace mulex
