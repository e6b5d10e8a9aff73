#include "mulex/containers.hpp"

#include "mulex/analysis.hpp"
#include "mulex/combinatorics.hpp"
#include "mulex/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace mulex {

namespace {

std::uint64_t pairs_of(std::uint64_t s) { return s * (s - 1) / 2; }

void require_q(std::uint64_t q) {
  if (q > 255) throw std::invalid_argument("multiplicity bound above 255");
}

BigInt factorial(std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

std::vector<std::vector<Weight>> collect_patterns(std::uint32_t s, std::uint64_t q, std::uint64_t budget) {
  std::vector<std::vector<Weight>> out;
  bad_patterns(
      s, q, [&](std::span<const Weight> w) { out.emplace_back(w.begin(), w.end()); }, budget);
  return out;
}

void check_edge_budget(const BigInt& work, std::uint64_t budget) {
  if (work > BigInt(std::to_string(budget))) {
    throw BudgetExceeded("container enumeration above budget", 0);
  }
}

// Streams edges from precomputed patterns.
template <typename Fn>
void stream_edges(std::size_t n, std::uint32_t s, std::uint64_t q, const std::vector<std::vector<Weight>>& patterns,
                  Fn&& visit) {
  const std::uint64_t r = pairs_of(s);
  std::vector<std::uint64_t> ids(r);
  std::vector<std::uint64_t> base(r);
  for_each_combination(static_cast<std::uint32_t>(n), s, [&](std::span<const std::uint32_t> a) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) base[k++] = Multigraph::pair_index(n, a[i], a[j]) * (q + 1);
    }
    for (const auto& pat : patterns) {
      std::set<Vertex> verts;
      for (std::size_t e = 0; e < r; ++e) {
        ids[e] = base[e] + pat[e];
        const HVertex hv = decode_hvertex(n, q, ids[e]);
        verts.insert(hv.x);
        verts.insert(hv.y);
        if (e > 0 && ids[e] / (q + 1) <= ids[e - 1] / (q + 1)) {
          throw InvariantViolation("edge of H(n) repeats a pair");
        }
      }
      if (verts.size() != s) throw InvariantViolation("edge of H(n) does not span s vertices");
      visit(std::span<const std::uint64_t>(ids));
    }
    return true;
  });
}

}  // namespace

std::uint64_t encode_hvertex(std::size_t n, std::uint64_t q, const HVertex& v) {
  if (v.u > q) throw std::out_of_range("multiplicity above q");
  return Multigraph::pair_index(n, v.x, v.y) * (q + 1) + v.u;
}

HVertex decode_hvertex(std::size_t n, std::uint64_t q, std::uint64_t id) {
  const std::uint64_t f = id / (q + 1);
  HVertex v;
  v.u = static_cast<Weight>(id % (q + 1));
  std::uint64_t rest = f;
  for (Vertex x = 0; x + 1 < n; ++x) {
    const std::uint64_t row = n - 1 - x;
    if (rest < row) {
      v.x = x;
      v.y = static_cast<Vertex>(x + 1 + rest);
      return v;
    }
    rest -= row;
  }
  throw std::out_of_range("vertex id outside H(n)");
}

PatternCount bad_patterns(std::uint32_t s, std::uint64_t q, const std::function<void(std::span<const Weight>)>& visit,
                          std::uint64_t budget) {
  require_q(q);
  const std::uint64_t r = s < 2 ? 0 : pairs_of(s);
  check_edge_budget(pow_big(q + 1, r), budget);
  PatternCount out;
  std::vector<Weight> w(r, 0);
  std::uint64_t sum = 0;
  while (true) {
    ++out.functions_scanned;
    if (sum > q) {
      ++out.g;
      if (visit) visit(std::span<const Weight>(w));
    }
    std::size_t i = 0;
    while (i < r && w[i] == q) {
      sum -= w[i];
      w[i] = 0;
      ++i;
    }
    if (i == r) break;
    ++w[i];
    ++sum;
  }
  return out;
}

ContainerStats hypergraph_stats(std::size_t n, std::uint32_t s, std::uint64_t q, std::uint64_t budget) {
  if (s < 2) throw std::invalid_argument("s must be at least 2");
  ContainerStats st;
  st.n = n;
  st.s = s;
  st.q = q;
  st.g = bad_patterns(s, q, {}, budget).g;
  st.N = (q + 1) * (n * (n - 1) / 2);
  st.edge_count = BigInt(std::to_string(st.g)) * binomial(n, s);
  if (st.N > 0) {
    st.avg_degree = Rational(BigInt(std::to_string(pairs_of(s))) * st.edge_count, BigInt(std::to_string(st.N)));
    st.avg_degree.canonicalize();
  }
  return st;
}

void for_each_edge(std::size_t n, std::uint32_t s, std::uint64_t q,
                   const std::function<void(std::span<const std::uint64_t>)>& visit, std::uint64_t budget) {
  if (s < 2) throw std::invalid_argument("s must be at least 2");
  const auto patterns = collect_patterns(s, q, budget);
  check_edge_budget(BigInt(std::to_string(patterns.size())) * binomial(n, s), budget);
  stream_edges(n, s, q, patterns, visit);
}

std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> realized_codegrees(std::size_t n, std::uint32_t s,
                                                                                      std::uint64_t q,
                                                                                      std::uint64_t budget) {
  if (s < 2) throw std::invalid_argument("s must be at least 2");
  const std::uint64_t r = pairs_of(s);
  const auto patterns = collect_patterns(s, q, budget);
  check_edge_budget(BigInt(std::to_string(patterns.size())) * binomial(n, s) * pow_big(2, r), budget);
  std::map<std::vector<std::uint64_t>, std::uint64_t> d;
  std::vector<std::uint64_t> sigma;
  stream_edges(n, s, q, patterns, [&](std::span<const std::uint64_t> e) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
      if (std::popcount(mask) < 2) continue;
      sigma.clear();
      for (std::uint64_t i = 0; i < r; ++i) {
        if (mask >> i & 1) sigma.push_back(e[i]);
      }
      ++d[sigma];
    }
  });
  return {d.begin(), d.end()};
}

CodegreeProfile codegree_profile(std::size_t n, std::uint32_t s, std::uint64_t q, const Rational& tau,
                                 std::uint64_t budget) {
  if (tau <= 0) throw std::invalid_argument("tau must be positive");
  CodegreeProfile p;
  p.stats = hypergraph_stats(n, s, q, budget);
  p.tau = tau;
  const std::uint64_t r = pairs_of(s);
  const std::size_t levels = r >= 2 ? r - 1 : 0;
  p.delta_j.assign(levels, 0);
  p.sum_dj.assign(levels, 0);
  p.dj_max.assign(levels, std::vector<std::uint64_t>(p.stats.N, 0));
  if (p.stats.edge_count == 0) return p;

  for (const auto& [sigma, d] : realized_codegrees(n, s, q, budget)) {
    auto& row = p.dj_max[sigma.size() - 2];
    for (auto x : sigma) row[x] = std::max(row[x], d);
  }
  for (std::size_t k = 0; k < levels; ++k) {
    for (auto v : p.dj_max[k]) p.sum_dj[k] += BigInt(std::to_string(v));
  }
  p.delta = recompute_delta(p);
  const Rational dN = p.stats.avg_degree * Rational(BigInt(std::to_string(p.stats.N)));
  Rational tpow = 1;
  for (std::size_t k = 0; k < levels; ++k) {
    tpow *= tau;  // tau^{j-1}, j = k + 2
    p.delta_j[k] = Rational(p.sum_dj[k]) / (dN * tpow);
    p.delta_j[k].canonicalize();
  }
  return p;
}

Rational recompute_delta(const CodegreeProfile& p) {
  if (p.stats.avg_degree == 0) return 0;
  const std::uint64_t r = pairs_of(p.stats.s);
  const Rational dN = p.stats.avg_degree * Rational(BigInt(std::to_string(p.stats.N)));
  Rational total = 0;
  Rational tpow = 1;
  for (std::size_t k = 0; k < p.sum_dj.size(); ++k) {
    const std::uint64_t j = k + 2;
    tpow *= p.tau;
    const Rational dj = Rational(p.sum_dj[k]) / (dN * tpow);
    total += dj / Rational(pow_big(2, (j - 1) * (j - 2) / 2));
  }
  total *= Rational(pow_big(2, pairs_of(r))) / 2;
  total.canonicalize();
  return total;
}

std::uint64_t HypothesisReport::dsigma_violations() const {
  std::uint64_t v = 0;
  for (const auto& c : dsigma) v += c.violations;
  return v;
}

HypothesisReport check_hypothesis(std::size_t n, std::uint32_t s, std::uint64_t q, const Rational& epsilon,
                                  unsigned bits, std::uint64_t budget) {
  if (!(epsilon > 0 && epsilon < Rational(1, 2))) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  HypothesisReport rep;
  rep.n = n;
  rep.s = s;
  rep.q = q;
  rep.epsilon = epsilon;
  const std::uint64_t r = pairs_of(s);
  rep.threshold = epsilon / Rational(BigInt(12) * factorial(r));
  rep.threshold.canonicalize();

  // Delta(tau) = sum_j c_j tau^{-(j-1)} with c_j = Delta_j at tau = 1.
  const CodegreeProfile unit = codegree_profile(n, s, q, 1, budget);
  const auto codegrees = realized_codegrees(n, s, q, budget);
  std::vector<Rational> coeff(unit.delta_j.size());
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    const std::uint64_t j = k + 2;
    coeff[k] = unit.delta_j[k] * Rational(pow_big(2, pairs_of(r))) / 2 / Rational(pow_big(2, (j - 1) * (j - 2) / 2));
  }

  for (unsigned p = std::max(bits, 16u);; p *= 2) {
    if (p > kMaxPrecision) throw PrecisionError("container hypothesis undecided at the precision cap");
    const Interval ln_n = log_of(Rational(static_cast<unsigned long>(n)), p);
    rep.precision = p;
    rep.tau = exp_of(ln_n * Interval(Rational(-1, static_cast<long>(4 * s))), p);
    rep.delta = Interval(0);
    for (std::size_t k = 0; k < coeff.size(); ++k) {
      if (coeff[k] == 0) continue;
      const Interval inv_tau_pow = exp_of(ln_n * Interval(Rational(static_cast<long>(k + 1), static_cast<long>(4 * s))), p);
      rep.delta += Interval(coeff[k]) * inv_tau_pow;
    }
    const bool le = rep.delta.hi() <= rep.threshold;
    const bool gt = rep.delta.lo() > rep.threshold;
    if (!le && !gt) continue;
    rep.holds = le;
    const Interval half_gap = rep.tau - Interval(Rational(1, 2));
    if (half_gap.certainly_negative()) {
      rep.tau_below_half = true;
    } else if (half_gap.certainly_nonnegative()) {
      rep.tau_below_half = false;
    }

    rep.dsigma.clear();
    bool decided = true;
    for (std::uint64_t j = 2; j <= r && decided; ++j) {
      DSigmaCheck c;
      c.j = static_cast<std::uint32_t>(j);
      const Interval expo =
          Interval(Rational(2 * static_cast<long>(s) - 1, 2)) - sqrt_of(Interval(static_cast<long>(2 * j)), p);
      c.bound = Interval(static_cast<long>(unit.stats.g)) * exp_of(ln_n * expo, p);
      for (const auto& [sigma, d] : codegrees) {
        if (sigma.size() != j) continue;
        ++c.realized;
        c.max_d = std::max(c.max_d, d);
        const Rational dv(static_cast<unsigned long>(d));
        if (dv > c.bound.hi()) {
          ++c.violations;
        } else if (dv > c.bound.lo()) {
          decided = false;
          break;
        }
      }
      rep.dsigma.push_back(c);
    }
    if (decided) return rep;
  }
}

std::vector<std::uint64_t> independent_set_of(const Multigraph& g, std::uint64_t q) {
  std::vector<std::uint64_t> ids;
  const std::size_t n = g.order();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const Weight w = g.weight(x, y);
      if (w <= q) ids.push_back(encode_hvertex(n, q, {x, y, w}));
    }
  }
  return ids;
}

bool is_independent(std::size_t n, std::uint32_t s, std::uint64_t q, std::span<const std::uint64_t> ids) {
  const std::set<std::uint64_t> in(ids.begin(), ids.end());
  bool independent = true;
  for_each_edge(n, s, q, [&](std::span<const std::uint64_t> e) {
    if (!independent) return;
    if (std::all_of(e.begin(), e.end(), [&](std::uint64_t v) { return in.count(v) > 0; })) independent = false;
  });
  return independent;
}

std::optional<Multigraph> graph_of(std::size_t n, std::uint64_t q, std::span<const std::uint64_t> ids) {
  Multigraph g(n);
  std::vector<bool> seen(n * (n - 1) / 2, false);
  for (auto id : ids) {
    const HVertex v = decode_hvertex(n, q, id);
    const std::size_t f = Multigraph::pair_index(n, v.x, v.y);
    if (seen[f]) return std::nullopt;
    seen[f] = true;
    g.set_weight(v.x, v.y, v.u);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return std::nullopt;
  return g;
}

}  // namespace mulex
