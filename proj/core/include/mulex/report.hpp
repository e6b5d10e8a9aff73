#pragma once

#include "mulex/analysis.hpp"
#include "mulex/containers.hpp"
#include "mulex/families.hpp"
#include "mulex/quotient.hpp"
#include "mulex/search.hpp"
#include "mulex/symmetry.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace mulex {

using Json = nlohmann::ordered_json;

Json interval_json(const Interval& x);
Json prime_power_json(const PrimePower& p);

Json to_json(const VWGraph& h);
/// {"parts": [...], "edges": [[i,j],...]} with 0-based part indices.
/// Throws FormatError on malformed input.
VWGraph vwgraph_from_json(const Json& j);
VWGraph read_vwgraph_file(const std::string& path);

Json to_json(const ReplacementTrace& t);
Json to_json(const ExtremalResult& r);
Json to_json(const CountResult& r);
Json to_json(const FamilyFlags& f);
Json to_json(const ContainerStats& s);
Json to_json(const CodegreeProfile& p);
Json to_json(const HypothesisReport& r);
Json to_json(const AppendixReport& r);
Json to_json(const ConstantsCertificate& c);
Json to_json(const Bounds& b);
Json to_json(const GridReport& g);
Json to_json(const PropsReport& p);

}  // namespace mulex
