#include "mulex/report.hpp"

#include "mulex/errors.hpp"
#include "mulex/mg_format.hpp"

#include <fstream>
#include <sstream>

namespace mulex {

namespace {

std::string frac(const Rational& r) { return to_fraction_string(r); }

const char* grid_name(GridCheck c) {
  switch (c) {
    case GridCheck::h_lt_f: return "h_lt_f";
    case GridCheck::k_lt_f: return "k_lt_f";
    case GridCheck::hf_decay: return "hf_decay";
  }
  return "h_lt_f";
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json interval_json(const Interval& x) {
  return Json{{"lo", frac(x.lo())}, {"hi", frac(x.hi())}, {"approx", x.approx()}};
}

Json prime_power_json(const PrimePower& p) {
  return Json{{"two_exp", p.e2}, {"three_exp", p.e3}, {"five_exp", p.e5}};
}

Json to_json(const VWGraph& h) {
  Json edges = Json::array();
  for (const auto& [i, j] : h.edges()) edges.push_back({i, j});
  return Json{{"parts", h.parts()}, {"edges", edges}};
}

VWGraph vwgraph_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("parts") || !j.contains("edges")) {
      throw FormatError("VWGraph JSON needs \"parts\" and \"edges\"");
    }
    std::vector<std::uint32_t> parts;
    for (const auto& p : j.at("parts")) {
      if (!p.is_number_unsigned()) throw FormatError("part sizes must be naturals");
      parts.push_back(p.get<std::uint32_t>());
    }
    std::vector<PartEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw FormatError("edges must be [i, j] pairs of part indices");
      }
      edges.emplace_back(e[0].get<PartIndex>(), e[1].get<PartIndex>());
    }
    return VWGraph(std::move(parts), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

VWGraph read_vwgraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(e.what());
  }
  return vwgraph_from_json(j);
}

Json to_json(const ReplacementTrace& t) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    Json s{{"source", t.steps[i].first}, {"target", t.steps[i].second}};
    if (i < t.p_values.size()) {
      s["p_source"] = to_decimal(t.p_values[i].first);
      s["p_target"] = to_decimal(t.p_values[i].second);
    }
    steps.push_back(s);
  }
  Json products = Json::array();
  for (const auto& p : t.products) products.push_back(to_decimal(p));
  return Json{{"steps", steps}, {"products", products}, {"gamma_sizes", t.gamma_sizes}};
}

Json to_json(const ExtremalResult& r) {
  Json w = Json::array();
  for (const auto& g : r.witnesses) w.push_back(to_mg(g));
  return Json{{"objective", to_string(r.objective)},
              {"family", to_string(r.family)},
              {"n", r.n},
              {"s", r.s},
              {"q", r.q},
              {"value", to_decimal(r.value)},
              {"witnesses", w},
              {"witnesses_truncated", r.witnesses_truncated},
              {"nodes", r.nodes_explored}};
}

Json to_json(const CountResult& r) {
  return Json{{"n", r.n}, {"s", r.s}, {"q", r.q}, {"count", to_decimal(r.count)}, {"exact", r.exact},
              {"nodes", r.nodes_explored}};
}

Json to_json(const FamilyFlags& f) {
  return Json{{"F_4_15", f.F_4_15}, {"F_3_8", f.F_3_8}, {"F_le3_4_15", f.F_le3_4_15}, {"D", f.D},
              {"A_311", f.A_311},   {"A_211", f.A_211}, {"A_321", f.A_321},           {"A_123", f.A_123},
              {"C", f.C},           {"NC", f.NC},       {"W", f.W}};
}

Json to_json(const ContainerStats& s) {
  return Json{{"n", s.n},
              {"s", s.s},
              {"q", s.q},
              {"N", s.N},
              {"edge_count", to_decimal(s.edge_count)},
              {"avg_degree", frac(s.avg_degree)},
              {"g", s.g}};
}

Json to_json(const CodegreeProfile& p) {
  Json dj = Json::array();
  Json sums = Json::array();
  for (const auto& v : p.delta_j) dj.push_back(frac(v));
  for (const auto& v : p.sum_dj) sums.push_back(to_decimal(v));
  return Json{{"stats", to_json(p.stats)},
              {"tau", frac(p.tau)},
              {"delta_j", dj},
              {"sum_dj", sums},
              {"delta", frac(p.delta)}};
}

Json to_json(const HypothesisReport& r) {
  Json ds = Json::array();
  for (const auto& c : r.dsigma) {
    ds.push_back(Json{{"j", c.j},
                      {"realized", c.realized},
                      {"max_d", c.max_d},
                      {"bound", interval_json(c.bound)},
                      {"violations", c.violations}});
  }
  return Json{{"n", r.n},
              {"s", r.s},
              {"q", r.q},
              {"epsilon", frac(r.epsilon)},
              {"precision", r.precision},
              {"tau", interval_json(r.tau)},
              {"tau_below_half", opt_bool(r.tau_below_half)},
              {"delta", interval_json(r.delta)},
              {"threshold", frac(r.threshold)},
              {"holds", r.holds},
              {"dsigma", ds},
              {"dsigma_violations", r.dsigma_violations()}};
}

Json to_json(const AppendixReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"statement", c.statement},
                          {"reduced_statement", c.reduced_statement},
                          {"direct", interval_json(c.direct)},
                          {"reduced", interval_json(c.reduced)},
                          {"holds", opt_bool(c.holds)}});
  }
  return Json{{"precision", r.precision}, {"all_hold", r.all_hold()}, {"checks", checks}};
}

Json to_json(const ConstantsCertificate& c) {
  return Json{{"precision", c.precision},
              {"K", c.K},
              {"K_minimal", c.K_minimal},
              {"K_three_digit", c.K_three_digit},
              {"gamma_app", interval_json(c.gamma_app)},
              {"T", interval_json(c.T)},
              {"M1", c.M1},
              {"Kprime", c.Kprime},
              {"Tprime_bound", interval_json(c.Tprime_bound)},
              {"M_complem2", c.M_complem2 ? Json(*c.M_complem2) : Json(nullptr)},
              {"linear_coefficients_match", c.linear_coefficients_match},
              {"provenance", c.provenance}};
}

Json to_json(const Bounds& b) {
  return Json{{"f", prime_power_json(b.f)},
              {"h", prime_power_json(b.h)},
              {"k", prime_power_json(b.k)},
              {"c", b.c},
              {"fstar_log2", interval_json(b.fstar_log2)}};
}

Json to_json(const GridReport& g) {
  Json fails = Json::array();
  for (const auto& f : g.failures) {
    fails.push_back(Json{{"n", f.n}, {"t", f.t}, {"lhs", prime_power_json(f.lhs)}, {"rhs", prime_power_json(f.rhs)}});
  }
  return Json{{"check", grid_name(g.which)},
              {"points", g.points},
              {"failure_count", g.failures.size()},
              {"failures", fails},
              {"min_clean_n", g.min_clean_n ? Json(*g.min_clean_n) : Json(nullptr)}};
}

Json to_json(const PropsReport& p) {
  return Json{{"n", p.n},
              {"t", p.t},
              {"a1", p.a1},
              {"a2", p.a2},
              {"a1_margin", interval_json(p.a1_margin)},
              {"a2_margin", interval_json(p.a2_margin)}};
}

}  // namespace mulex
