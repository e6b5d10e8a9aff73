#include "mulex/multigraph.hpp"

#include "mulex/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mulex {

namespace {

std::size_t pairs_for(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

Multigraph::Multigraph(std::size_t n, Weight fill) : n_(n), weights_(pairs_for(n), fill) {
  if (n == 0) throw std::invalid_argument("multigraph needs at least one vertex");
}

Multigraph::Multigraph(std::size_t n, std::vector<Weight> weights)
    : n_(n), weights_(std::move(weights)) {
  if (n == 0) throw std::invalid_argument("multigraph needs at least one vertex");
  if (weights_.size() != pairs_for(n)) {
    throw std::invalid_argument("weight vector length must be C(n,2)");
  }
}

std::size_t Multigraph::pair_index(std::size_t n, Vertex x, Vertex y) {
  if (x == y || x >= n || y >= n) throw std::out_of_range("bad vertex pair");
  if (x > y) std::swap(x, y);
  return static_cast<std::size_t>(x) * n - static_cast<std::size_t>(x) * (x + 1) / 2 +
         (y - x - 1);
}

std::size_t Multigraph::pair_index(Vertex x, Vertex y) const { return pair_index(n_, x, y); }

Multigraph Multigraph::induced(std::span<const Vertex> vertices) const {
  Multigraph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      h.set_weight(static_cast<Vertex>(i), static_cast<Vertex>(j),
                   weight(vertices[i], vertices[j]));
    }
  }
  return h;
}

Multigraph Multigraph::relabeled(std::span<const Vertex> pi) const {
  if (pi.size() != n_) throw std::invalid_argument("permutation size mismatch");
  Multigraph h(n_);
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y) h.set_weight(pi[x], pi[y], weight(x, y));
  }
  return h;
}

GraphStats stats(const Multigraph& g) {
  GraphStats s;
  for (Weight w : g.weights()) {
    s.sum += w;
    s.product *= w;
    s.multiplicity = std::max(s.multiplicity, w);
  }
  return s;
}

ProductValue product(const Multigraph& g) {
  ProductValue p = 1;
  for (Weight w : g.weights()) p *= w;
  return p;
}

std::uint64_t weight_sum(const Multigraph& g) {
  std::uint64_t s = 0;
  for (Weight w : g.weights()) s += w;
  return s;
}

Weight multiplicity(const Multigraph& g) {
  auto w = g.weights();
  return w.empty() ? Weight{0} : *std::max_element(w.begin(), w.end());
}

std::uint64_t window_sum(const Multigraph& g, std::span<const Vertex> window) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) s += g.weight(window[i], window[j]);
  }
  return s;
}

std::vector<VertexSet> violations(const Multigraph& g, std::uint32_t s, std::uint64_t q) {
  if (s < 2) throw std::invalid_argument("window size s must be at least 2");
  std::vector<VertexSet> out;
  for_each_combination(static_cast<std::uint32_t>(g.order()), s, [&](auto x) {
    if (window_sum(g, x) > q) out.emplace_back(x.begin(), x.end());
    return true;
  });
  return out;
}

bool is_sq_graph(const Multigraph& g, std::uint32_t s, std::uint64_t q) {
  if (s < 2) throw std::invalid_argument("window size s must be at least 2");
  return for_each_combination(static_cast<std::uint32_t>(g.order()), s,
                              [&](auto x) { return window_sum(g, x) <= q; });
}

std::vector<std::array<Vertex, 3>> triangles(const Multigraph& g, std::array<Weight, 3> pattern) {
  std::sort(pattern.begin(), pattern.end());
  std::vector<std::array<Vertex, 3>> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const Weight wab = g.weight(a, b);
      if (wab != pattern[0] && wab != pattern[1] && wab != pattern[2]) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        std::array<Weight, 3> ws{wab, g.weight(a, c), g.weight(b, c)};
        std::sort(ws.begin(), ws.end());
        if (ws == pattern) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<std::array<Vertex, 3>> gamma_123(const Multigraph& g) {
  return triangles(g, {1, 2, 3});
}

namespace {

// Extends path[0..k-1] to a copy of C_t(3,2). path[0] is the least vertex of
// the copy; path[1] < path[t-1] removes the reflection.
bool extend_cycle(const Multigraph& g, std::uint32_t t, VertexSet& path, std::vector<char>& used) {
  const std::size_t k = path.size();
  const auto n = static_cast<Vertex>(g.order());
  if (k == t) return true;
  for (Vertex v = path[0] + 1; v < n; ++v) {
    if (used[v]) continue;
    if (g.weight(path[k - 1], v) != 3) continue;
    if (k == t - 1 && t > 3 && v < path[1]) continue;
    bool ok = true;
    for (std::size_t j = 0; j + 1 < k && ok; ++j) {
      const Weight want = (j == 0 && k == t - 1) ? 3 : 2;
      ok = g.weight(path[j], v) == want;
    }
    if (!ok) continue;
    used[v] = 1;
    path.push_back(v);
    if (extend_cycle(g, t, path, used)) return true;
    path.pop_back();
    used[v] = 0;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_cycle_copy(const Multigraph& g, std::uint32_t t) {
  if (t < 3 || t > g.order()) throw std::invalid_argument("need 3 <= t <= n");
  const auto n = static_cast<Vertex>(g.order());
  std::vector<char> used(n, 0);
  VertexSet path;
  path.reserve(t);
  for (Vertex start = 0; start + t <= n; ++start) {
    path.assign(1, start);
    used[start] = 1;
    if (extend_cycle(g, t, path, used)) return path;
    used[start] = 0;
  }
  return std::nullopt;
}

WindowMetrics window_metrics(const Multigraph& g, std::span<const Vertex> x, Vertex z) {
  if (std::find(x.begin(), x.end(), z) != x.end()) {
    throw std::invalid_argument("window_metrics: z must lie outside X");
  }
  WindowMetrics m;
  for (Vertex v : x) {
    const Weight w = g.weight(v, z);
    m.sum += w;
    m.product *= w;
  }
  return m;
}

Multigraph plus_one(const Multigraph& g) {
  std::vector<Weight> w(g.weights().begin(), g.weights().end());
  for (auto& x : w) {
    if (x == 255) throw std::overflow_error("multiplicity 255 cannot be incremented");
    ++x;
  }
  return Multigraph(g.order(), std::move(w));
}

ProductValue count_submultigraphs(const Multigraph& g) {
  ProductValue p = 1;
  for (Weight w : g.weights()) p *= static_cast<unsigned long>(w) + 1;
  return p;
}

std::uint64_t edit_distance(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order()) throw std::invalid_argument("edit_distance: orders differ");
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.pair_count(); ++i) d += a.weights()[i] != b.weights()[i];
  return d;
}

bool is_delta_close(const Multigraph& a, const Multigraph& b, const Rational& delta) {
  const Rational n(static_cast<unsigned long>(a.order()));
  return Rational(static_cast<unsigned long>(edit_distance(a, b))) <= delta * n * n;
}

Multigraph build_W(std::size_t n, std::size_t r, Weight a) {
  if (r > n) throw std::invalid_argument("build_W: |R| exceeds n");
  if (a < 2 || a == 255) throw std::invalid_argument("build_W: need 2 <= a < 255");
  const std::size_t l = n - r;
  Multigraph g(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const bool xl = x < l;
      const bool yl = y < l;
      g.set_weight(x, y, xl && yl ? a - 1 : (!xl && !yl ? a : a + 1));
    }
  }
  return g;
}

Multigraph build_cycle(std::size_t t) {
  if (t < 3) throw std::invalid_argument("build_cycle: need t >= 3");
  Multigraph g(t, 2);
  for (Vertex i = 0; i < t; ++i) g.set_weight(i, static_cast<Vertex>((i + 1) % t), 3);
  return g;
}

std::string canonical_key(const Multigraph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit) throw std::invalid_argument("canonical_key: order above configured limit");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const std::size_t m = g.pair_count();
  std::string best(g.weights().begin(), g.weights().end());
  std::string cur(m, '\0');
  do {
    // perm[i] is the old vertex placed at position i
    bool smaller = false;
    std::size_t idx = 0;
    bool abandon = false;
    for (std::size_t i = 0; i < n && !abandon; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        const char c = static_cast<char>(g.weight(perm[i], perm[j]));
        cur[idx] = c;
        if (!smaller) {
          const auto uc = static_cast<unsigned char>(c);
          const auto ub = static_cast<unsigned char>(best[idx]);
          if (uc < ub) {
            smaller = true;
          } else if (uc > ub) {
            abandon = true;
            break;
          }
        }
      }
    }
    if (smaller) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Multigraph from_canonical_key(const std::string& key) {
  std::size_t n = 1;
  while (n * (n - 1) / 2 < key.size()) ++n;
  if (n * (n - 1) / 2 != key.size()) throw std::invalid_argument("key length is not C(n,2)");
  std::vector<Weight> w(key.begin(), key.end());
  return Multigraph(n, std::move(w));
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.order() != b.order()) return false;
  auto sa = std::vector<Weight>(a.weights().begin(), a.weights().end());
  auto sb = std::vector<Weight>(b.weights().begin(), b.weights().end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return canonical_key(a) == canonical_key(b);
}

}  // namespace mulex
