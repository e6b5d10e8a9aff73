#include "mulex/symmetry.hpp"

#include "mulex/errors.hpp"
#include "mulex/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace mulex {

ProductValue vertex_product(const Multigraph& g, Vertex y) {
  ProductValue p = 1;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x != y) p *= static_cast<unsigned long>(g.weight(x, y));
  }
  return p;
}

Multigraph replace(const Multigraph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("replace needs distinct vertices");
  if (x >= g.order() || y >= g.order()) throw std::out_of_range("replace vertex out of range");
  Multigraph h = g;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != x && u != y) h.set_weight(x, u, g.weight(y, u));
  }
  h.set_weight(x, y, 1);
  return h;
}

Multigraph replace_seq(const Multigraph& g, const std::vector<Replacement>& pairs) {
  Multigraph h = g;
  for (const auto& [x, y] : pairs) h = replace(h, x, y);
  return h;
}

namespace {

struct Oriented {
  Vertex u, v, z;  // w(uv) = 1, w(uz) = 2, w(vz) = 3
};

Oriented orient_123(const Multigraph& g, const std::array<Vertex, 3>& tri) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Vertex u = tri[i], v = tri[j], z = tri[3 - i - j];
      if (g.weight(u, v) == 1 && g.weight(u, z) == 2 && g.weight(v, z) == 3) return {u, v, z};
    }
  }
  throw InvariantViolation("triangle is not a (1,2,3)-triangle");
}

}  // namespace

Elimination eliminate_123(const Multigraph& g) {
  if (!in_D(g)) throw std::invalid_argument("eliminate_123 needs a member of D(n)");
  Elimination r{g, {}};
  ProductValue p_cur = product(g);
  auto gamma = gamma_123(g);
  r.trace.products.push_back(p_cur);
  r.trace.gamma_sizes.push_back(gamma.size());

  while (!gamma.empty()) {
    const Oriented o = orient_123(r.graph, gamma.front());
    const ProductValue pu = vertex_product(r.graph, o.u);
    const ProductValue pv = vertex_product(r.graph, o.v);
    Multigraph uv = replace(r.graph, o.u, o.v);
    Multigraph vu = replace(r.graph, o.v, o.u);
    Replacement step;
    Multigraph next;
    // with a zero weight somewhere the p comparison says nothing about P, so only |Gamma| can move
    const bool zero = p_cur == 0;
    if (!zero && pv > pu) {
      step = {o.u, o.v};
      next = std::move(uv);
    } else if (!zero && pu > pv) {
      step = {o.v, o.u};
      next = std::move(vu);
    } else {
      const auto guv = gamma_123(uv).size();
      const auto gvu = gamma_123(vu).size();
      const bool take_uv = guv < gvu || (guv == gvu && o.u < o.v);
      step = take_uv ? Replacement{o.u, o.v} : Replacement{o.v, o.u};
      next = take_uv ? std::move(uv) : std::move(vu);
    }
    const ProductValue p_next = product(next);
    auto gamma_next = gamma_123(next);
    const bool progress = p_next > p_cur || (p_next == p_cur && gamma_next.size() < gamma.size());
    if (!progress) throw InvariantViolation("(1,2,3) elimination step made no progress");
    if (!in_D(next)) throw InvariantViolation("replacement left D(n)");
    r.trace.steps.push_back(step);
    r.trace.p_values.emplace_back(step.first == o.u ? pu : pv, step.first == o.u ? pv : pu);
    r.trace.products.push_back(p_next);
    r.trace.gamma_sizes.push_back(gamma_next.size());
    r.graph = std::move(next);
    p_cur = p_next;
    gamma = std::move(gamma_next);
  }
  return r;
}

ImproveStep local_improve_step(const Multigraph& g) {
  if (!in_D(g)) throw std::invalid_argument("local_improve needs a member of D(n)");
  const ProductValue p = product(g);
  std::vector<std::array<Vertex, 3>> cands = triangles(g, {3, 1, 1});
  const auto more = triangles(g, {2, 1, 1});
  cands.insert(cands.end(), more.begin(), more.end());
  std::sort(cands.begin(), cands.end());
  for (const auto& tri : cands) {
    // u is the vertex on both weight-1 pairs
    Vertex u = tri[0], v = tri[1], z = tri[2];
    for (int i = 0; i < 3; ++i) {
      const Vertex a = tri[i], b = tri[(i + 1) % 3], c = tri[(i + 2) % 3];
      if (g.weight(a, b) == 1 && g.weight(a, c) == 1) {
        u = a;
        v = b;
        z = c;
        break;
      }
    }
    if (vertex_product(g, v) < vertex_product(g, z)) std::swap(v, z);
    std::vector<Replacement> move;
    if (vertex_product(g, v) > vertex_product(g, u)) {
      move = {{u, v}};
    } else {
      move = {{v, u}, {z, u}};
    }
    Multigraph h = replace_seq(g, move);
    if (product(h) > p) {
      if (!in_D(h)) throw InvariantViolation("replacement left D(n)");
      return {std::move(h), std::move(move)};
    }
  }
  return {g, {}};
}

Multigraph local_improve(const Multigraph& g) { return local_improve_step(g).graph; }

Multigraph local_improve_fixpoint(const Multigraph& g, std::vector<std::vector<Replacement>>* moves) {
  Multigraph cur = g;
  while (true) {
    ImproveStep s = local_improve_step(cur);
    if (s.move.empty()) return cur;
    if (moves) moves->push_back(s.move);
    cur = std::move(s.graph);
  }
}

}  // namespace mulex
