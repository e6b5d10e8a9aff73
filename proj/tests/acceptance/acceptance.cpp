// One PASS/FAIL line per acceptance criterion. Exit status 1 if any line fails.

#include "../unit/container_oracle.hpp"
#include "../unit/quotient_gen.hpp"

#include "mulex/analysis.hpp"
#include "mulex/containers.hpp"
#include "mulex/families.hpp"
#include "mulex/mg_format.hpp"
#include "mulex/quotient.hpp"
#include "mulex/search.hpp"
#include "mulex/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mulex;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "FAILED ") + what);
  }
};

Multigraph random_graph(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Weight> w(n * (n - 1) / 2);
  for (auto& x : w) x = static_cast<Weight>(d(rng));
  return Multigraph(n, std::move(w));
}

std::string str(const BigInt& v) { return to_decimal(v); }

std::string oneline(const Multigraph& g) {
  std::string s = to_mg(g);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', '|');
  return s;
}

// Least edit distance over relabelings of b.
std::uint64_t distance_up_to_iso(const Multigraph& a, const Multigraph& b) {
  std::vector<Vertex> pi(b.order());
  std::iota(pi.begin(), pi.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edit_distance(a, b.relabeled(pi)));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return best;
}

Outcome criterion1() {
  Outcome o;
  SearchOptions opts;
  opts.witness_cap = 0;
  const auto r = extremal(4, 4, 15, opts);
  o.check(r.value == 216, "ex_P(4,4,15) = " + str(r.value));
  const auto w = build_W(4, 3);
  std::size_t iso = 0;
  for (const auto& g : r.witnesses) iso += is_isomorphic(g, w);
  o.check(iso == r.witnesses.size(), std::to_string(r.witnesses.size()) + " witness classes, " + std::to_string(iso) +
                                         " isomorphic to W(4) with |R|=3");
  for (const auto& g : r.witnesses) {
    if (!is_isomorphic(g, w)) o.notes.push_back("non-W witness " + oneline(g));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto r = extremal(5, 4, 15);
  o.check(r.value >= 7776, "ex_P(5,4,15) = " + str(r.value));
  const bool c5 = std::any_of(r.witnesses.begin(), r.witnesses.end(),
                              [](const Multigraph& g) { return find_cycle_copy(g, 5).has_value(); });
  o.check(c5, "witness containing C5(3,2)");
  SearchOptions wopt;
  wopt.family = Family::W;
  const auto ws = extremal_set(5, 4, 15, wopt);
  const BigInt wmax = ws.empty() ? BigInt(0) : product(ws[0]);
  o.check(wmax == 5832, "max over W(5) = " + str(wmax));
  o.check(w_optimum(5).value == 5832, "closed-form W(5) optimum = " + str(w_optimum(5).value));
  SearchOptions raw;
  raw.prune = false;
  const auto u = extremal(5, 4, 15, raw);
  o.check(u.value == r.value, "unpruned DFS = " + str(u.value));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto c4 = count_F(4, 4, 9);
  o.check(c4.count == 5005 && c4.count == binomial(15, 6), "|F(4,4,9)| = " + str(c4.count) + ", C(15,6) = 5005");
  for (std::size_t n : {4u, 5u}) {
    const auto c = count_F(n, 4, 9).count;
    const auto e = extremal(n, 4, 15).value;
    o.check(c >= e, "n=" + std::to_string(n) + ": |F(n,4,9)| = " + str(c) + " >= ex_P(n,4,15) = " + str(e));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::size_t n : {4u, 5u}) {
    SearchOptions d;
    d.family = Family::D;
    const auto set = extremal_set(n, 4, 15, d);
    bool free = !set.empty();
    for (const auto& g : set) free = free && triangles(g, {3, 1, 1}).empty() && triangles(g, {2, 1, 1}).empty();
    o.check(free, "n=" + std::to_string(n) + ": " + std::to_string(set.size()) +
                      " extremal D graphs, none with (3,1,1)/(2,1,1) triangles");
    const bool meets_c = std::any_of(set.begin(), set.end(), [](const Multigraph& g) { return in_C(g); });
    o.check(meets_c, "n=" + std::to_string(n) + ": P(D) meets C");
  }
  for (std::size_t n : {4u, 5u, 6u}) {
    SearchOptions nc;
    nc.family = Family::NC;
    const auto set = extremal_set(n, 4, 15, nc);
    const bool meets_w = std::any_of(set.begin(), set.end(), [](const Multigraph& g) { return in_W(g); });
    o.check(meets_w, "n=" + std::to_string(n) + ": P(NC) meets W (" + std::to_string(set.size()) + " classes)");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uint64_t bad1 = 0, bad3 = 0;
  for (int it = 0; it < 10000; ++it) {
    const std::size_t n = 3 + it % 6;
    const auto g = random_graph(rng, n, 1, 3);
    std::vector<Vertex> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    const Vertex x = pi[0], y = pi[1];
    if (product(replace(g, x, y)) * vertex_product(g, x) * g.weight(x, y) != vertex_product(g, y) * product(g)) ++bad1;
    const Vertex u = pi[0], v = pi[1], z = pi[2];
    const ProductValue lhs = product(replace_seq(g, {{v, u}, {z, u}})) * vertex_product(g, v) * vertex_product(g, z) *
                             g.weight(u, z) * g.weight(u, z) * g.weight(u, v) * g.weight(u, v);
    const ProductValue rhs = vertex_product(g, u) * vertex_product(g, u) * g.weight(v, z) * product(g);
    if (lhs != rhs) ++bad3;
  }
  o.check(bad1 == 0, "single replacement identity mismatches: " + std::to_string(bad1) + " / 10000");
  o.check(bad3 == 0, "double replacement identity mismatches: " + std::to_string(bad3) + " / 10000");
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uint64_t fpi_bad = 0;
  for (int it = 0; it < 10000; ++it) {
    const auto g = mulex::testing::random_neat(rng, 1 + it % 9);
    if (!is_neat(g) || f_pi(quotient(g)) != product(g)) ++fpi_bad;
  }
  o.check(fpi_bad == 0, "P = f_pi(quotient) mismatches: " + std::to_string(fpi_bad) + " / 10000");

  std::uint64_t graphs = 0, forest_bad = 0;
  for (std::uint32_t n = 1; n <= 7; ++n) {
    mulex::testing::for_each_vw_graph(n, [&](const VWGraph& h) {
      ++graphs;
      const auto g = realize(h).graph;
      if (is_forest(h) != in_NC_exhaustive(g)) ++forest_bad;
    });
  }
  o.check(forest_bad == 0, "forest <=> NC over " + std::to_string(graphs) + " neat graphs (n <= 7): " +
                              std::to_string(forest_bad) + " mismatches");

  std::uint64_t star_bad = 0, strict = 0, witnessed = 0;
  for (int it = 0; it < 1000; ++it) {
    const auto h = mulex::testing::random_forest(rng, 2 + it % 11, 1 + it % 4);
    const auto s = star_transform(h);
    const auto before = f_pi(h), after = f_pi(s.graph);
    auto centered_at = [](const VWGraph& g, PartIndex c) {
      return g.edges().size() + 1 == g.size() && g.degree(c) + 1 == g.size();
    };
    bool ok = centered_at(s.graph, s.center) && after >= before && s.strict == (after > before);
    const bool centered = centered_at(h, s.center);
    if (!s.strict && !centered) {
      ok = ok && s.witness && s.witness->first == s.center && h.part(s.witness->first) == h.part(s.witness->second);
      witnessed += s.witness.has_value();
    }
    strict += s.strict;
    star_bad += !ok;
  }
  o.check(star_bad == 0, "star_transform on 1000 forests: " + std::to_string(strict) + " strict, " +
                             std::to_string(witnessed) + " equality witnesses, " + std::to_string(star_bad) + " bad");

  std::uint64_t split_bad = 0, splits = 0;
  for (int it = 0; it < 1000; ++it) {
    const std::size_t k = 2 + it % 8;
    std::uniform_int_distribution<std::uint32_t> wd(1, 5);
    std::vector<std::uint32_t> parts(k);
    for (auto& p : parts) p = wd(rng);
    std::vector<PartEdge> edges;
    for (PartIndex i = 1; i < k; ++i) edges.push_back({0, i});
    const VWGraph h(parts, edges);
    const auto c = *star_center(h);
    for (PartIndex leaf = 0; leaf < k; ++leaf) {
      if (leaf == c || h.part(leaf) < 2) continue;
      ++splits;
      if (f_pi(split_leaf(h, leaf)) != f_pi(h) * pow_big(2, h.part(leaf) - 1)) ++split_bad;
    }
  }
  o.check(split_bad == 0, "split_leaf factor 2^{|W|-1} on " + std::to_string(splits) + " splits");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto app = check_appendix_inequalities(kDefaultPrecision);
  for (const auto& c : app.checks) o.check(c.holds == std::optional<bool>(true), c.name + " certified");
  const auto cert = find_constants(60);
  o.check(cert.K == 62, "K = " + std::to_string(cert.K) + " at 60 bits");
  o.check(cert.K_three_digit == 63, "K = " + std::to_string(cert.K_three_digit) + " under 3-digit log bounds");
  o.check(verify_certificate(cert), "certificate re-verifies");
  const auto& g = cert.gamma_app;
  o.check(g.lo() > Rational(1, 10) && g.hi() < Rational(11, 100), "gamma in (0.10, 0.11): ~" + std::to_string(g.approx()));
  const auto h = grid_verify(GridCheck::h_lt_f, {62, 300}, {62, 300});
  o.check(h.failures.empty(), "h < f at " + std::to_string(h.points) + " points, 62 <= t <= n <= 300");
  const auto spots = spot_check_hf_decay(cert, 20);
  const bool spots_ok = spots.size() == 20 && std::all_of(spots.begin(), spots.end(), [&](const SpotCheck& s) {
                          return s.holds && s.n >= cert.M1;
                        });
  o.check(spots_ok, "h < 2^{-gamma n} f at 20 spot checks with n >= M1 = " + std::to_string(cert.M1));
  const auto k = grid_verify(GridCheck::k_lt_f, {2, 300}, {50, 300});
  o.check(k.failures.empty(), "k < f at " + std::to_string(k.points) + " points, 2 <= t <= n, 50 <= n <= 300");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto& c = constants(kDefaultPrecision);
  const Rational w = Rational(1, 1000000);
  // agreement to two decimals
  o.check(c.beta.lo() >= Rational(725, 1000) && c.beta.hi() < Rational(735, 1000),
          "beta ~" + std::to_string(c.beta.approx()) + " rounds to 0.73");
  o.check(c.two_pow_gamma.lo() >= Rational(1485, 1000) && c.two_pow_gamma.hi() < Rational(1495, 1000),
          "2^gamma ~" + std::to_string(c.two_pow_gamma.approx()) + " rounds to 1.49");
  o.check(c.beta.width() < w && c.two_pow_gamma.width() < w && c.gamma.width() < w, "widths < 1e-6");
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.check(bad_patterns(3, 2).g == 17, "g(3,2) = " + std::to_string(bad_patterns(3, 2).g));
  for (std::size_t n : {6u, 7u}) {
    const auto st = hypergraph_stats(n, 3, 2);
    std::uint64_t edges = 0;
    for_each_edge(n, 3, 2, [&](std::span<const std::uint64_t>) { ++edges; });
    const BigInt formula = binomial(n, 3) * 17;
    Rational d(BigInt(formula * 3), BigInt(std::to_string(3 * n * (n - 1) / 2)));
    d.canonicalize();
    const std::uint64_t N = 3 * n * (n - 1) / 2;
    const bool ok = st.N == N && st.edge_count == formula && BigInt(std::to_string(edges)) == formula &&
                    st.avg_degree == d;
    o.check(ok, "n=" + std::to_string(n) + ": N = " + std::to_string(st.N) + ", edges = " + str(st.edge_count) +
                    ", d = " + to_fraction_string(st.avg_degree));
  }
  const Rational tau(1, 2);
  const auto oracle = mulex::testing::subset_oracle(6, 2, tau);
  const auto p = codegree_profile(6, 3, 2, tau);
  o.check(p.delta == oracle.delta && p.dj_max == oracle.dj_max,
          "Delta(H, 1/2) at (6,3,2) = " + to_fraction_string(p.delta) + ", oracle " + to_fraction_string(oracle.delta));
  const auto hyp = check_hypothesis(8, 3, 2, Rational(1, 4));
  std::uint64_t realized = 0;
  for (const auto& d : hyp.dsigma) realized += d.realized;
  o.check(hyp.dsigma_violations() == 0, "d(sigma) bound at (8,3,2): " + std::to_string(hyp.dsigma_violations()) +
                                            " violations over " + std::to_string(realized) + " sigma");
  return o;
}

Outcome criterion10() {
  Outcome o;
  SearchOptions sum;
  sum.objective = Objective::sum;
  const auto s4 = extremal(4, 4, 15, sum);
  o.check(s4.value == 15 && sum_formula(4) == 15, "ex_S(4,4,15) = " + str(s4.value) + ", sum_formula(4) = " +
                                                      std::to_string(sum_formula(4)));
  const auto s5 = extremal(5, 4, 15, sum);
  const bool cycle = weight_sum(build_cycle(5)) == 25 && is_sq_graph(build_cycle(5), 4, 15);
  o.check(s5.value >= 25 && cycle, "ex_S(5,4,15) = " + str(s5.value) + " vs sum_formula(5) = " +
                                       std::to_string(sum_formula(5)) + ", C5(3,2) sum 25");
  const auto p5 = extremal(5, 4, 15);
  std::uint64_t best = ~std::uint64_t{0};
  for (const auto& a : p5.witnesses) {
    for (const auto& b : s5.witnesses) best = std::min(best, distance_up_to_iso(a, b));
  }
  o.notes.push_back("edit distance between product- and sum-extremal witnesses at n=5: " + std::to_string(best));
  // distance from each witness to the nearest W(5) member, and is_delta_close agreeing with it
  bool consistent = true;
  std::uint64_t lo = ~std::uint64_t{0}, hi = 0;
  for (const auto* set : {&p5.witnesses, &s5.witnesses}) {
    for (const auto& g : *set) {
      std::uint64_t d = ~std::uint64_t{0};
      Multigraph nearest;
      for (std::size_t y = 0; y <= 5; ++y) {
        const auto w = build_W(5, y);
        const auto dy = distance_up_to_iso(g, w);
        if (dy < d) {
          d = dy;
          nearest = w;
        }
      }
      consistent = consistent && (d == 0) == in_W(g);
      // closeness is label-dependent; the best relabeling realizes d
      std::vector<Vertex> pi(5);
      std::iota(pi.begin(), pi.end(), 0);
      bool close = false, closer = false;
      do {
        const auto h = nearest.relabeled(pi);
        close = close || is_delta_close(g, h, Rational(static_cast<long>(d), 25));
        if (d > 0) closer = closer || is_delta_close(g, h, Rational(static_cast<long>(d) - 1, 25));
      } while (std::next_permutation(pi.begin(), pi.end()));
      consistent = consistent && close && !closer;
      if (set == &p5.witnesses) {
        o.notes.push_back("product witness " + oneline(g) + " is " + std::to_string(d) + "/25-far from W(5)");
      } else {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    }
  }
  o.notes.push_back(std::to_string(s5.witnesses.size()) + " sum witness classes, " + std::to_string(lo) + "/25 to " +
                    std::to_string(hi) + "/25 from W(5)");
  o.check(consistent, "distance to W(5) matches is_delta_close and W membership");
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries{
      {1, 60, criterion1},   {2, 600, criterion2}, {3, 600, criterion3},  {4, 1800, criterion4},
      {5, 600, criterion5},  {6, 1800, criterion6}, {7, 600, criterion7}, {8, 60, criterion8},
      {9, 600, criterion9},  {10, 600, criterion10},
  };
  int failed = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = e.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > e.limit_s) o.check(false, "runtime over " + std::to_string(static_cast<int>(e.limit_s)) + " s");
    std::ostringstream line;
    line << "criterion " << e.id << ": " << (o.pass ? "PASS" : "FAIL") << " (" << std::fixed;
    line.precision(2);
    line << secs << " s)";
    for (const auto& n : o.notes) line << "; " << n;
    std::printf("%s\n", line.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failed, entries.size());
  return failed == 0 ? 0 : 1;
}
