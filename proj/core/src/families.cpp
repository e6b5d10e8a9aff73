#include "mulex/families.hpp"

#include "mulex/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulex {

namespace {

bool omits(const Multigraph& g, std::array<Weight, 3> pattern) { return triangles(g, pattern).empty(); }

bool all_positive(const Multigraph& g) {
  const auto w = g.weights();
  return std::all_of(w.begin(), w.end(), [](Weight x) { return x > 0; });
}

// L given as a membership mask; checks the W(n) weight pattern exactly.
bool realizes_W(const Multigraph& g, const std::vector<bool>& in_l) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      Weight want = in_l[x] && in_l[y] ? 1 : (!in_l[x] && !in_l[y] ? 2 : 3);
      if (g.weight(x, y) != want) return false;
    }
  }
  return true;
}

}  // namespace

FamilyFlags family_membership(const Multigraph& g) {
  FamilyFlags f;
  f.F_4_15 = is_sq_graph(g, 4, 15);
  f.F_3_8 = is_sq_graph(g, 3, 8);
  f.F_le3_4_15 = f.F_4_15 && multiplicity(g) <= 3;
  f.D = f.F_le3_4_15 && f.F_3_8;
  f.A_311 = f.F_4_15 && omits(g, {3, 1, 1});
  f.A_211 = f.F_4_15 && omits(g, {2, 1, 1});
  f.A_321 = f.F_4_15 && omits(g, {3, 2, 1});
  f.A_123 = f.A_321;
  f.C = f.D && f.A_311 && f.A_211 && f.A_321;
  if (f.C) {
    f.NC = all_positive(g) ? is_forest(quotient(g)) : shortest_cycle_copy(g) == 0;
  }
  f.W = f.NC && in_W(g);
  return f;
}

bool in_D(const Multigraph& g) {
  return multiplicity(g) <= 3 && is_sq_graph(g, 3, 8) && is_sq_graph(g, 4, 15);
}

bool in_C(const Multigraph& g) {
  return in_D(g) && omits(g, {3, 1, 1}) && omits(g, {2, 1, 1}) && omits(g, {3, 2, 1});
}

bool in_NC(const Multigraph& g) { return family_membership(g).NC; }

bool in_NC_exhaustive(const Multigraph& g) { return in_C(g) && shortest_cycle_copy(g) == 0; }

bool in_W(const Multigraph& g) { return g.order() <= 20 ? in_W_bipartitions(g) : in_W_structural(g); }

bool in_W_bipartitions(const Multigraph& g) {
  const std::size_t n = g.order();
  if (n > 20) throw std::invalid_argument("bipartition scan limited to n <= 20");
  std::vector<bool> in_l(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (std::size_t v = 0; v < n; ++v) in_l[v] = (mask >> v) & 1u;
    if (realizes_W(g, in_l)) return true;
  }
  return false;
}

bool in_W_structural(const Multigraph& g) {
  const std::size_t n = g.order();
  std::vector<bool> in_l(n, false);
  bool any_one = false;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.weight(x, y) == 1) {
        in_l[x] = in_l[y] = true;
        any_one = true;
      }
    }
  }
  if (any_one) return realizes_W(g, in_l);
  // |L| <= 1
  if (realizes_W(g, in_l)) return true;
  for (std::size_t v = 0; v < n; ++v) {
    in_l.assign(n, false);
    in_l[v] = true;
    if (realizes_W(g, in_l)) return true;
  }
  return false;
}

std::uint32_t shortest_cycle_copy(const Multigraph& g) {
  for (std::uint32_t t = 3; t <= g.order(); ++t) {
    if (find_cycle_copy(g, t)) return t;
  }
  return 0;
}

}  // namespace mulex
