// mulex command-line driver. Every subcommand prints a RunReport as JSON.

#include "mulex/analysis.hpp"
#include "mulex/containers.hpp"
#include "mulex/errors.hpp"
#include "mulex/families.hpp"
#include "mulex/mg_format.hpp"
#include "mulex/quotient.hpp"
#include "mulex/report.hpp"
#include "mulex/search.hpp"
#include "mulex/symmetry.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

#ifndef MULEX_VERSION
#define MULEX_VERSION "unknown"
#endif

using namespace mulex;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 2, kBudget = 3, kUsage = 64, kBadInput = 65 };

struct Common {
  unsigned threads = 1;
  std::uint64_t node_budget = 0;
  std::uint64_t container_budget = kDefaultContainerBudget;
  std::string out;
};

struct Outcome {
  Json results;
  bool verified = true;
};

Json versions() {
  return Json{{"mulex", MULEX_VERSION},
              {"gmp", gmp_version},
              {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                    std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                    std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
}

Json graph_json(const Multigraph& g) {
  return Json{{"mg", to_mg(g)}, {"product", to_decimal(product(g))}, {"sum", weight_sum(g)}};
}

Multigraph random_graph(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Weight> w(n * (n - 1) / 2);
  for (auto& x : w) x = static_cast<Weight>(d(rng));
  return Multigraph(n, std::move(w));
}

Json check(bool ok, const std::string& what, Outcome& o) {
  o.verified = o.verified && ok;
  return Json{{"check", what}, {"holds", ok}};
}

// verify suites

Outcome verify_appendix(unsigned bits) {
  Outcome o;
  const auto app = check_appendix_inequalities(bits);
  const auto cert = find_constants(bits);
  Json checks = Json::array();
  checks.push_back(check(app.all_hold(), "appendix inequalities certified", o));
  checks.push_back(check(verify_certificate(cert), "constants certificate re-verifies", o));
  checks.push_back(check(cert.gamma_app.lo() > Rational(1, 10) && cert.gamma_app.hi() < Rational(11, 100),
                         "gamma in (0.10, 0.11)", o));
  o.results = Json{{"checks", checks}, {"appendix", to_json(app)}, {"certificate", to_json(cert)}};
  return o;
}

Outcome verify_grids(std::uint64_t n_max, unsigned threads, unsigned bits) {
  Outcome o;
  const auto cert = find_constants(bits);
  const auto h = grid_verify(GridCheck::h_lt_f, {cert.K, n_max}, {cert.K, n_max}, threads);
  const auto k = grid_verify(GridCheck::k_lt_f, {2, n_max}, {50, n_max}, threads);
  const auto spots = spot_check_hf_decay(cert, 20);
  Json spot_json = Json::array();
  bool spots_ok = spots.size() == 20;
  for (const auto& s : spots) {
    spots_ok = spots_ok && s.holds && s.n >= cert.M1;
    spot_json.push_back(Json{{"n", s.n}, {"t", s.t}, {"margin", interval_json(s.margin)}, {"holds", s.holds}});
  }
  Json checks = Json::array();
  checks.push_back(check(h.failures.empty(), "h < f for K <= t <= n <= " + std::to_string(n_max), o));
  checks.push_back(check(k.failures.empty(), "k < f for 2 <= t <= n, 50 <= n <= " + std::to_string(n_max), o));
  checks.push_back(check(spots_ok, "h < 2^{-gamma n} f at 20 spot checks", o));
  o.results = Json{{"checks", checks}, {"h_lt_f", to_json(h)}, {"k_lt_f", to_json(k)}, {"hf_decay", spot_json}};
  return o;
}

Outcome verify_lemmas(std::uint64_t samples, unsigned threads) {
  Outcome o;
  Json checks = Json::array();
  std::mt19937_64 rng(1);
  std::uint64_t bad = 0;
  for (std::uint64_t it = 0; it < samples; ++it) {
    const std::size_t n = 3 + it % 6;
    const auto g = random_graph(rng, n, 1, 3);
    std::vector<Vertex> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    const Vertex u = pi[0], v = pi[1], z = pi[2];
    bad += product(replace(g, u, v)) * vertex_product(g, u) * g.weight(u, v) != vertex_product(g, v) * product(g);
    const ProductValue lhs = product(replace_seq(g, {{v, u}, {z, u}})) * vertex_product(g, v) * vertex_product(g, z) *
                             g.weight(u, z) * g.weight(u, z) * g.weight(u, v) * g.weight(u, v);
    bad += lhs != vertex_product(g, u) * vertex_product(g, u) * g.weight(v, z) * product(g);
  }
  checks.push_back(check(bad == 0, "replacement identities on " + std::to_string(samples) + " random graphs", o));

  SearchOptions opts;
  opts.threads = threads;
  for (std::size_t n : {4u, 5u}) {
    opts.family = Family::D;
    const auto set = extremal_set(n, 4, 15, opts);
    bool free = !set.empty();
    for (const auto& g : set) free = free && triangles(g, {3, 1, 1}).empty() && triangles(g, {2, 1, 1}).empty();
    checks.push_back(check(free, "P(D(" + std::to_string(n) + ")) has no (3,1,1) or (2,1,1) triangle", o));
    const bool meets = std::any_of(set.begin(), set.end(), [](const Multigraph& g) { return in_C(g); });
    checks.push_back(check(meets, "P(D(" + std::to_string(n) + ")) meets C", o));
  }
  for (std::size_t n : {4u, 5u, 6u}) {
    opts.family = Family::NC;
    const auto set = extremal_set(n, 4, 15, opts);
    const bool meets = std::any_of(set.begin(), set.end(), [](const Multigraph& g) { return in_W(g); });
    checks.push_back(check(meets, "P(NC(" + std::to_string(n) + ")) meets W", o));
  }

  std::uint64_t forest_bad = 0, star_bad = 0;
  for (std::uint64_t it = 0; it < 1000; ++it) {
    const std::size_t parts = 2 + it % 11;
    std::uniform_int_distribution<std::uint32_t> wd(1, 4);
    std::vector<std::uint32_t> w(parts);
    for (auto& x : w) x = wd(rng);
    std::vector<PartEdge> edges;
    std::bernoulli_distribution coin(0.75);
    for (PartIndex i = 1; i < parts; ++i) {
      if (coin(rng)) edges.push_back({std::uniform_int_distribution<PartIndex>(0, i - 1)(rng), i});
    }
    const VWGraph h(w, edges);
    const auto g = realize(h).graph;
    if (g.order() <= 8) forest_bad += in_NC(g) != in_NC_exhaustive(g);
    const auto s = star_transform(h);
    star_bad += f_pi(s.graph) < f_pi(h) || f_pi(quotient(g)) != product(g);
  }
  checks.push_back(check(forest_bad == 0, "forest <=> NC on realized random forests", o));
  checks.push_back(check(star_bad == 0, "star_transform never lowers f_pi; f_pi = P", o));
  o.results = Json{{"checks", checks}};
  return o;
}

Outcome verify_containers(std::uint64_t budget) {
  Outcome o;
  Json checks = Json::array();
  checks.push_back(check(bad_patterns(3, 2, {}, budget).g == 17, "g(3,2) = 17", o));
  Json stats = Json::array();
  for (std::size_t n : {6u, 7u}) {
    const auto st = hypergraph_stats(n, 3, 2, budget);
    checks.push_back(check(st.edge_count == binomial(n, 3) * 17, "edge count at n = " + std::to_string(n), o));
    stats.push_back(to_json(st));
  }
  const auto hyp = check_hypothesis(8, 3, 2, Rational(1, 4), 64, budget);
  checks.push_back(check(hyp.dsigma_violations() == 0, "d(sigma) bound at (8,3,2)", o));
  const auto p = codegree_profile(6, 3, 2, Rational(1, 2), budget);
  checks.push_back(check(recompute_delta(p) == p.delta, "Delta recomputes from degree sums", o));
  o.results = Json{{"checks", checks}, {"stats", stats}, {"profile", to_json(p)}, {"hypothesis", to_json(hyp)}};
  return o;
}

// W_a optimum over |R| against the search over F(n, 4, 6a+3) with mu <= a+1.
Outcome conjecture(unsigned a, std::size_t n, const Common& c) {
  Outcome o;
  BigInt best = 0;
  std::size_t best_r = 0;
  for (std::size_t r = 0; r <= n; ++r) {
    const auto p = product(build_W(n, r, static_cast<Weight>(a)));
    if (p > best) {
      best = p;
      best_r = r;
    }
  }
  SearchOptions opts;
  opts.weight_cap = a + 1;
  opts.threads = c.threads;
  opts.node_budget = c.node_budget;
  const std::uint64_t q = 6 * a + 3;
  const auto r = extremal(n, 4, q, opts);
  const auto k = conjecture_constants(a);
  o.results = Json{{"a", a},
                   {"n", n},
                   {"q", q},
                   {"W_a_optimum", to_decimal(best)},
                   {"W_a_r", best_r},
                   {"search", to_json(r)},
                   {"search_exceeds_W_a", r.value > best},
                   {"beta_a", interval_json(k.beta_a)},
                   {"gamma_a", interval_json(k.gamma_a)}};
  return o;
}

int emit(const std::string& command, const Json& params, const Outcome& o, double secs, const Common& c) {
  Json report{{"command", command},
              {"parameters", params},
              {"results", o.results},
              {"wall_time", secs},
              {"versions", versions()}};
  const std::string text = report.dump(2);
  std::cout << text << '\n';
  if (!c.out.empty()) {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "cannot write " << c.out << '\n';
      return kBadInput;
    }
    f << text << '\n';
  }
  return o.verified ? kOk : kVerifyFailed;
}

unsigned default_threads() {
  if (const char* env = std::getenv("MULEX_THREADS")) {
    try {
      return static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact search and certified checks for multigraphs with bounded local sums", "mulex"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", MULEX_VERSION);

  Common c;
  c.threads = default_threads();
  app.add_option("--threads", c.threads, "Worker threads (default: MULEX_THREADS or 1)")->capture_default_str();
  app.add_option("--node-budget", c.node_budget, "Search node cap, 0 for none");
  app.add_option("--container-budget", c.container_budget, "Pattern/edge enumeration cap")->capture_default_str();
  app.add_option("--out", c.out, "Also write the report to FILE");

  std::size_t n = 0;
  std::uint32_t s = 0;
  std::uint64_t q = 0;

  auto* count = app.add_subcommand("count", "|F(n,s,q)|");
  count->add_option("n", n)->required();
  count->add_option("s", s)->required();
  count->add_option("q", q)->required();

  std::string objective = "product", family = "all";
  std::size_t witness_cap = 100;
  bool no_prune = false;
  auto* ext = app.add_subcommand("extremal", "Exact optimum over a family");
  ext->add_option("n", n)->required();
  ext->add_option("s", s)->required();
  ext->add_option("q", q)->required();
  ext->add_option("--objective", objective)->check(CLI::IsMember({"product", "sum"}))->capture_default_str();
  ext->add_option("--family", family)->check(CLI::IsMember({"all", "D", "C", "NC", "W"}))->capture_default_str();
  ext->add_option("--witness-cap", witness_cap, "0 keeps every class")->capture_default_str();
  ext->add_flag("--no-prune", no_prune, "Plain DFS without the bound");

  std::string file, mode = "eliminate123";
  auto* sym = app.add_subcommand("symmetrize", "Symmetrization on a .mg file");
  sym->add_option("FILE", file)->required();
  sym->add_option("--mode", mode)->check(CLI::IsMember({"eliminate123", "improve"}))->capture_default_str();

  auto* quo = app.add_subcommand("quotient", "Quotient of a neat .mg file");
  quo->add_option("FILE", file)->required();
  auto* star = app.add_subcommand("star-transform", "Star transform of a vertex-weighted forest (JSON)");
  star->add_option("FILE", file)->required();
  auto* real = app.add_subcommand("realize", "Neat multigraph of a vertex-weighted graph (JSON)");
  real->add_option("FILE", file)->required();

  std::string suite;
  std::uint64_t grid_max = 300, samples = 10000;
  unsigned bits = kDefaultPrecision;
  auto* ver = app.add_subcommand("verify", "Run a check suite");
  ver->add_option("SUITE", suite)->required()->check(CLI::IsMember({"appendix", "grids", "lemmas", "containers"}));
  ver->add_option("--grid-max", grid_max, "Largest n on the grids")->capture_default_str();
  ver->add_option("--samples", samples, "Random graphs for the identities")->capture_default_str();
  ver->add_option("--precision", bits, "Bits for certified arithmetic")->capture_default_str();

  auto* cons = app.add_subcommand("constants", "Certified constants and the appendix certificate");
  cons->add_option("--precision", bits, "Bits")->capture_default_str();

  unsigned a = 2;
  auto* conj = app.add_subcommand("conjecture", "W_a optimum against bounded search (reported, not asserted)");
  conj->add_option("--a", a)->required()->check(CLI::Range(2u, 64u));
  conj->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  Outcome o;
  Json params;
  std::string command;
  try {
    if (*count) {
      command = "count";
      params = Json{{"n", n}, {"s", s}, {"q", q}, {"node_budget", c.node_budget}, {"threads", c.threads}};
      SearchOptions opts;
      opts.threads = c.threads;
      opts.node_budget = c.node_budget;
      o.results = to_json(count_F(n, s, q, opts));
    } else if (*ext) {
      command = "extremal";
      params = Json{{"n", n},           {"s", s},           {"q", q},
                    {"objective", objective}, {"family", family}, {"witness_cap", witness_cap},
                    {"prune", !no_prune},     {"node_budget", c.node_budget}, {"threads", c.threads}};
      SearchOptions opts;
      opts.objective = parse_objective(objective);
      opts.family = parse_family(family);
      opts.witness_cap = witness_cap;
      opts.prune = !no_prune;
      opts.threads = c.threads;
      opts.node_budget = c.node_budget;
      o.results = to_json(extremal(n, s, q, opts));
    } else if (*sym) {
      command = "symmetrize";
      params = Json{{"file", file}, {"mode", mode}};
      const auto g = read_mg_file(file);
      if (mode == "eliminate123") {
        const auto r = eliminate_123(g);
        o.results = Json{{"input", graph_json(g)}, {"output", graph_json(r.graph)}, {"trace", to_json(r.trace)}};
      } else {
        std::vector<std::vector<Replacement>> moves;
        const auto h = local_improve_fixpoint(g, &moves);
        Json mv = Json::array();
        for (const auto& m : moves) {
          Json one = Json::array();
          for (const auto& [x, y] : m) one.push_back({x, y});
          mv.push_back(one);
        }
        o.results = Json{{"input", graph_json(g)}, {"output", graph_json(h)}, {"moves", mv}};
      }
    } else if (*quo) {
      command = "quotient";
      params = Json{{"file", file}};
      const auto g = read_mg_file(file);
      const auto h = quotient(g);
      o.results = Json{{"quotient", to_json(h)},
                       {"f_pi", to_decimal(f_pi(h))},
                       {"product", to_decimal(product(g))},
                       {"forest", is_forest(h)}};
    } else if (*star) {
      command = "star-transform";
      params = Json{{"file", file}};
      const auto h = read_vwgraph_file(file);
      const auto r = star_transform(h);
      o.results = Json{{"input", to_json(h)},
                       {"output", to_json(r.graph)},
                       {"center", r.center},
                       {"f_pi_before", to_decimal(f_pi(h))},
                       {"f_pi_after", to_decimal(f_pi(r.graph))},
                       {"strict", r.strict},
                       {"witness", r.witness ? Json{r.witness->first, r.witness->second} : Json(nullptr)}};
    } else if (*real) {
      command = "realize";
      params = Json{{"file", file}};
      const auto h = read_vwgraph_file(file);
      const auto r = realize(h);
      o.results = Json{{"graph", graph_json(r.graph)}, {"forest", r.forest}, {"f_pi", to_decimal(f_pi(h))}};
    } else if (*ver) {
      command = "verify " + suite;
      params = Json{{"suite", suite}, {"precision", bits}, {"threads", c.threads}};
      if (suite == "appendix") {
        o = verify_appendix(bits);
      } else if (suite == "grids") {
        params["grid_max"] = grid_max;
        o = verify_grids(grid_max, c.threads, bits);
      } else if (suite == "lemmas") {
        params["samples"] = samples;
        o = verify_lemmas(samples, c.threads);
      } else {
        params["container_budget"] = c.container_budget;
        o = verify_containers(c.container_budget);
      }
    } else if (*cons) {
      command = "constants";
      params = Json{{"precision", bits}};
      const auto& k = constants(bits);
      o.results = Json{{"beta", interval_json(k.beta)},
                       {"gamma", interval_json(k.gamma)},
                       {"two_pow_gamma", interval_json(k.two_pow_gamma)},
                       {"gamma_appendix", interval_json(k.gamma_appendix)},
                       {"certificate", to_json(find_constants(bits))}};
    } else if (*conj) {
      command = "conjecture";
      params = Json{{"a", a}, {"n", n}, {"node_budget", c.node_budget}, {"threads", c.threads}};
      o = conjecture(a, n, c);
    }
  } catch (const FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded after " << e.nodes_explored() << " nodes: " << e.what() << '\n';
    return kBudget;
  } catch (const PrecisionError& e) {
    std::cerr << "precision: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return emit(command, params, o, elapsed(), c);
}
