#include "helpers.hpp"

#include "mulex/errors.hpp"
#include "mulex/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace mulex;

TEST(ReportJson, VWGraphRoundTrip) {
  VWGraph h({2, 1, 3}, {{2, 0}, {1, 2}});
  Json j = to_json(h);
  EXPECT_EQ(j.dump(), R"({"parts":[2,1,3],"edges":[[0,2],[1,2]]})");
  VWGraph back = vwgraph_from_json(j);
  EXPECT_EQ(back.parts(), h.parts());
  EXPECT_EQ(back.edges(), h.edges());
}

TEST(ReportJson, VWGraphRejects) {
  EXPECT_THROW(vwgraph_from_json(Json::parse(R"({"parts":[1,2]})")), FormatError);
  EXPECT_THROW(vwgraph_from_json(Json::parse(R"({"parts":[1,0],"edges":[]})")), FormatError);
  EXPECT_THROW(vwgraph_from_json(Json::parse(R"({"parts":[1,2],"edges":[[0,0]]})")), FormatError);
  EXPECT_THROW(vwgraph_from_json(Json::parse(R"({"parts":[1,2],"edges":[[0,5]]})")), FormatError);
  EXPECT_THROW(vwgraph_from_json(Json::parse(R"({"parts":[1,-2],"edges":[]})")), FormatError);
  EXPECT_THROW(vwgraph_from_json(Json::parse(R"({"parts":[1,2],"edges":[[0]]})")), FormatError);
  EXPECT_THROW(vwgraph_from_json(Json::parse("[1,2]")), FormatError);
  EXPECT_THROW(read_vwgraph_file("/nonexistent/x.json"), FormatError);
}

TEST(ReportJson, ReadFile) {
  const std::string path = ::testing::TempDir() + "vw_report_test.json";
  {
    std::ofstream out(path);
    out << R"({"parts": [3, 1], "edges": [[0, 1]]})";
  }
  auto h = read_vwgraph_file(path);
  EXPECT_EQ(h.total_weight(), 4u);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  EXPECT_THROW(read_vwgraph_file(path), FormatError);
  std::remove(path.c_str());
}

TEST(ReportJson, Extremal) {
  SearchOptions o;
  o.witness_cap = 0;
  auto r = extremal(4, 4, 15, o);
  Json j = to_json(r);
  EXPECT_EQ(j["value"], "216");
  EXPECT_EQ(j["objective"], "product");
  EXPECT_EQ(j["family"], "all");
  EXPECT_EQ(j["witnesses"].size(), r.witnesses.size());
  EXPECT_TRUE(j["witnesses"][0].is_string());
}

TEST(ReportJson, ContainerShapes) {
  Json s = to_json(hypergraph_stats(6, 3, 2));
  EXPECT_EQ(s["edge_count"], "340");
  EXPECT_EQ(s["avg_degree"], "68/3");
  Json p = to_json(codegree_profile(6, 3, 2, Rational(1, 2)));
  EXPECT_EQ(p["delta"], "22/17");
  EXPECT_EQ(p["delta_j"].size(), 2u);
  Json h = to_json(check_hypothesis(8, 3, 2, Rational(1, 4)));
  EXPECT_EQ(h["threshold"], "1/288");
  EXPECT_EQ(h["dsigma_violations"], 0);
  EXPECT_TRUE(h["tau"].contains("lo"));
}

TEST(ReportJson, AnalysisShapes) {
  Json b = to_json(eval_bounds(10, 4));
  for (const char* k : {"f", "h", "k"}) {
    EXPECT_TRUE(b[k].contains("two_exp"));
    EXPECT_TRUE(b[k].contains("five_exp"));
  }
  Json a = to_json(check_appendix_inequalities());
  EXPECT_EQ(a["all_hold"], true);
  EXPECT_EQ(a["checks"].size(), 3u);
  Json c = to_json(find_constants());
  EXPECT_EQ(c["K"], 62);
  EXPECT_EQ(c["M1"], 4338);
  Json g = to_json(grid_verify(GridCheck::k_lt_f, {2, 10}, {2, 60}));
  EXPECT_EQ(g["check"], "k_lt_f");
  EXPECT_EQ(g["failure_count"], g["failures"].size());
}

TEST(ReportJson, TraceAndFlags) {
  auto e = eliminate_123(mulex::testing::mg(3, {1, 2, 3}));
  Json t = to_json(e.trace);
  EXPECT_EQ(t["steps"].size(), 1u);
  EXPECT_EQ(t["products"].back(), "9");
  Json f = to_json(family_membership(mulex::testing::mg(3, {1, 2, 3})));
  EXPECT_EQ(f["D"], true);
  EXPECT_EQ(f["A_123"], false);
  EXPECT_EQ(f["A_311"], true);
}
