#include "mulex/quotient.hpp"

#include "mulex/analysis.hpp"
#include "mulex/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mulex {

VWGraph::VWGraph(std::vector<std::uint32_t> parts, std::vector<PartEdge> edges)
    : parts_(std::move(parts)), edges_(std::move(edges)) {
  for (auto p : parts_) {
    if (p == 0) throw std::invalid_argument("part weights must be positive");
  }
  for (auto& [i, j] : edges_) {
    if (i == j) throw std::invalid_argument("loop in vertex-weighted graph");
    if (i >= parts_.size() || j >= parts_.size()) throw std::invalid_argument("edge index out of range");
    if (i > j) std::swap(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool VWGraph::has_edge(PartIndex i, PartIndex j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), PartEdge{i, j});
}

std::size_t VWGraph::degree(PartIndex i) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [i](const PartEdge& e) { return e.first == i || e.second == i; }));
}

std::uint64_t VWGraph::total_weight() const { return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0}); }

bool is_neat(const Multigraph& g) {
  if (multiplicity(g) > 3) return false;
  return triangles(g, {1, 1, 2}).empty() && triangles(g, {1, 1, 3}).empty() && triangles(g, {1, 2, 3}).empty();
}

std::vector<VertexSet> neat_classes(const Multigraph& g) {
  if (!is_neat(g)) throw std::invalid_argument("multigraph is not neat");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<int> cls(n, -1);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = static_cast<int>(out.size());
    VertexSet c{v};
    for (Vertex u = v + 1; u < n; ++u) {
      const Weight w = g.weight(v, u);
      if (w == 0) throw std::invalid_argument("quotient needs all weights >= 1");
      if (w == 1) {
        if (cls[u] >= 0) throw InvariantViolation("weight-1 relation is not transitive");
        cls[u] = cls[v];
        c.push_back(u);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

VWGraph quotient(const Multigraph& g) {
  const auto classes = neat_classes(g);
  std::vector<std::uint32_t> parts;
  for (const auto& c : classes) parts.push_back(static_cast<std::uint32_t>(c.size()));
  std::vector<PartEdge> edges;
  for (PartIndex i = 0; i < classes.size(); ++i) {
    for (const Vertex a : classes[i]) {
      for (const Vertex b : classes[i]) {
        if (a < b && g.weight(a, b) != 1) throw InvariantViolation("weight-1 class with a heavier inner pair");
      }
    }
    for (PartIndex j = i + 1; j < classes.size(); ++j) {
      const Weight w = g.weight(classes[i].front(), classes[j].front());
      for (const Vertex a : classes[i]) {
        for (const Vertex b : classes[j]) {
          if (g.weight(a, b) != w) throw InvariantViolation("cross weight between weight-1 classes is not constant");
        }
      }
      if (w != 2 && w != 3) throw InvariantViolation("cross weight between classes outside {2, 3}");
      if (w == 3) edges.emplace_back(i, j);
    }
  }
  return VWGraph(std::move(parts), std::move(edges));
}

ProductValue f_pi(const VWGraph& h) {
  unsigned long e2 = 0, e3 = 0;
  for (PartIndex i = 0; i < h.size(); ++i) {
    for (PartIndex j = i + 1; j < h.size(); ++j) {
      const unsigned long ab = static_cast<unsigned long>(h.part(i)) * h.part(j);
      (h.has_edge(i, j) ? e3 : e2) += ab;
    }
  }
  return pow_big(2, e2) * pow_big(3, e3);
}

namespace {

std::vector<std::size_t> make_dsu(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::size_t find(std::vector<std::size_t>& p, std::size_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool centered_at(const VWGraph& h, PartIndex v) {
  return h.edges().size() + 1 == h.size() && h.degree(v) + 1 == h.size();
}

}  // namespace

bool is_forest(const VWGraph& h) {
  auto p = make_dsu(h.size());
  for (const auto& [i, j] : h.edges()) {
    const auto a = find(p, i);
    const auto b = find(p, j);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

std::optional<PartIndex> star_center(const VWGraph& h) {
  if (h.size() < 2) return std::nullopt;
  for (PartIndex v = 0; v < h.size(); ++v) {
    if (centered_at(h, v)) return v;
  }
  return std::nullopt;
}

bool is_star(const VWGraph& h) { return star_center(h).has_value(); }

Realization realize(const VWGraph& h, const std::optional<std::vector<PartIndex>>& part_of_vertex) {
  const std::size_t n = h.total_weight();
  std::vector<PartIndex> owner;
  if (part_of_vertex) {
    owner = *part_of_vertex;
    if (owner.size() != n) throw std::invalid_argument("label map size differs from total part weight");
    std::vector<std::uint32_t> seen(h.size(), 0);
    for (auto p : owner) {
      if (p >= h.size()) throw std::invalid_argument("label map names a missing part");
      ++seen[p];
    }
    if (seen != h.parts()) throw std::invalid_argument("label map disagrees with part weights");
  } else {
    for (PartIndex i = 0; i < h.size(); ++i) owner.insert(owner.end(), h.part(i), i);
  }
  Multigraph g(n, 1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (owner[x] == owner[y]) continue;
      g.set_weight(x, y, h.has_edge(owner[x], owner[y]) ? 3 : 2);
    }
  }
  return {std::move(g), is_forest(h)};
}

StarTransform star_transform(const VWGraph& h) {
  if (h.size() < 2) throw std::invalid_argument("star transform needs at least 2 parts");
  if (!is_forest(h)) throw std::invalid_argument("star transform needs a forest");
  const auto& parts = h.parts();
  const PartIndex v = static_cast<PartIndex>(std::max_element(parts.begin(), parts.end()) - parts.begin());

  std::vector<PartEdge> edges = h.edges();
  auto adjacent = [&](PartIndex a, PartIndex b) {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), PartEdge{a, b}) != edges.end();
  };
  auto deg = [&](PartIndex a) {
    return std::count_if(edges.begin(), edges.end(), [a](const PartEdge& e) { return e.first == a || e.second == a; });
  };
  auto join = [&](PartIndex a, PartIndex b) { edges.push_back(a < b ? PartEdge{a, b} : PartEdge{b, a}); };

  // Step 0: attach isolated parts to the center
  bool step0 = false;
  for (PartIndex x = 0; x < h.size(); ++x) {
    if (x != v && deg(x) == 0) {
      join(v, x);
      step0 = true;
    }
  }

  std::optional<PartEdge> first_move;
  while (true) {
    VWGraph cur(parts, edges);
    if (centered_at(cur, v)) break;
    // lowest-index part off the center's neighbourhood with degree one
    std::optional<PartIndex> y;
    for (PartIndex c = 0; c < h.size(); ++c) {
      if (c != v && !adjacent(v, c) && deg(c) == 1) {
        y = c;
        break;
      }
    }
    if (!y) {
      // a moved leaf can strand its old neighbour
      for (PartIndex c = 0; c < h.size() && !y; ++c) {
        if (c != v && deg(c) == 0) {
          join(v, c);
          step0 = true;
          y = c;
        }
      }
      if (!y) throw InvariantViolation("star transform found no movable leaf");
      continue;
    }
    auto it = std::find_if(edges.begin(), edges.end(),
                           [&](const PartEdge& e) { return e.first == *y || e.second == *y; });
    const PartIndex w = it->first == *y ? it->second : it->first;
    edges.erase(it);
    join(v, *y);
    if (!first_move) first_move = PartEdge{v, w};
  }

  StarTransform r;
  r.graph = VWGraph(parts, edges);
  r.center = v;
  const ProductValue before = f_pi(h);
  const ProductValue after = f_pi(r.graph);
  if (after < before) throw InvariantViolation("star transform lowered f_pi");
  r.strict = after > before;
  if (!r.strict && first_move && !step0) {
    if (h.part(first_move->first) != h.part(first_move->second)) {
      throw InvariantViolation("equal f_pi without equal center and neighbour weights");
    }
    r.witness = first_move;
  }
  return r;
}

VWGraph split_leaf(const VWGraph& h, PartIndex leaf) {
  const auto center = star_center(h);
  if (!center) throw std::invalid_argument("split_leaf needs a star");
  if (leaf >= h.size() || leaf == *center) throw std::invalid_argument("split_leaf needs a non-center part");
  if (h.part(leaf) < 2) throw std::invalid_argument("split_leaf needs a part of weight > 1");
  std::vector<std::uint32_t> parts = h.parts();
  parts[leaf] -= 1;
  parts.push_back(1);
  std::vector<PartEdge> edges = h.edges();
  edges.emplace_back(*center, static_cast<PartIndex>(parts.size() - 1));
  return VWGraph(std::move(parts), std::move(edges));
}

GXConstruction build_G_X(std::size_t n, const VertexSet& x) {
  const std::size_t t = x.size();
  if (t < 2 || t > n) throw std::invalid_argument("build_G_X needs 2 <= |X| <= n");
  std::vector<bool> in_x(n, false);
  for (Vertex v : x) {
    if (v >= n || in_x[v]) throw std::invalid_argument("X must hold distinct vertices of [n]");
    in_x[v] = true;
  }
  GXConstruction r;
  r.r_x = ceil_beta(t);
  const std::size_t m = n - t;
  if (m > 0) {
    const WOptimum a = w_optimum(m);
    r.r_rest = a.y;
    r.rest_product = a.value;
  }
  // first |L| vertices of each side (in label order) go to L
  VertexSet xs = x;
  std::sort(xs.begin(), xs.end());
  VertexSet ys;
  for (Vertex v = 0; v < n; ++v) {
    if (!in_x[v]) ys.push_back(v);
  }
  std::vector<bool> in_l(n, false);
  for (std::size_t i = 0; i < t - r.r_x; ++i) in_l[xs[i]] = true;
  for (std::size_t i = 0; i < m - r.r_rest; ++i) in_l[ys[i]] = true;
  Multigraph g(n, 2);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      g.set_weight(a, b, in_l[a] && in_l[b] ? 1 : (in_l[a] != in_l[b] ? 3 : 2));
    }
  }
  r.graph = std::move(g);
  return r;
}

}  // namespace mulex
