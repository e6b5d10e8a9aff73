#include "helpers.hpp"
#include "quotient_gen.hpp"

#include "mulex/analysis.hpp"
#include "mulex/errors.hpp"
#include "mulex/families.hpp"
#include "mulex/mg_format.hpp"
#include "mulex/quotient.hpp"
#include "mulex/search.hpp"

#include <gtest/gtest.h>

using namespace mulex;
using mulex::testing::mg;

TEST(Neat, Examples) {
  EXPECT_TRUE(is_neat(build_W(6, 4)));
  EXPECT_FALSE(is_neat(mg(3, {1, 1, 2})));
  EXPECT_TRUE(is_neat(build_cycle(5)));
  EXPECT_FALSE(is_neat(mg(3, {1, 2, 3})));
  EXPECT_FALSE(is_neat(Multigraph(3, 4)));
}

TEST(Quotient, Examples) {
  auto w = quotient(build_W(5, 3));
  EXPECT_EQ(w.parts(), (std::vector<std::uint32_t>{2, 1, 1, 1}));
  EXPECT_EQ(w.edges(), (std::vector<PartEdge>{{0, 1}, {0, 2}, {0, 3}}));
  auto c = quotient(build_cycle(5));
  EXPECT_EQ(c.parts(), (std::vector<std::uint32_t>(5, 1)));
  EXPECT_EQ(c.edges(), (std::vector<PartEdge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  auto one = quotient(Multigraph(4, 1));
  EXPECT_EQ(one.parts(), (std::vector<std::uint32_t>{4}));
  EXPECT_TRUE(one.edges().empty());
  EXPECT_THROW(quotient(mg(3, {1, 1, 2})), std::invalid_argument);
  EXPECT_THROW(quotient(mg(3, {0, 2, 2})), std::invalid_argument);
}

TEST(FPi, Examples) {
  EXPECT_EQ(f_pi(VWGraph({2, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}})), 5832);
  EXPECT_EQ(f_pi(VWGraph({1, 1}, {})), 2);
  EXPECT_EQ(f_pi(VWGraph({7}, {})), 1);
}

TEST(FPi, EqualsProductOnNeatGraphs) {
  std::mt19937_64 rng(201);
  for (int it = 0; it < 10000; ++it) {
    auto g = mulex::testing::random_neat(rng, 1 + it % 9);
    ASSERT_TRUE(is_neat(g));
    ASSERT_EQ(f_pi(quotient(g)), product(g));
  }
}

TEST(Forest, Examples) {
  EXPECT_FALSE(is_forest(VWGraph({1, 1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})));
  EXPECT_TRUE(is_forest(VWGraph({2, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}})));
  EXPECT_TRUE(is_forest(VWGraph({1, 1, 1, 1, 1}, {{0, 1}, {2, 3}})));
}

TEST(Realize, Examples) {
  auto r = realize(VWGraph({2, 1, 1, 1}, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_TRUE(r.forest);
  EXPECT_TRUE(is_isomorphic(r.graph, build_W(5, 3)));
  EXPECT_EQ(realize(VWGraph({3}, {})).graph, Multigraph(3, 1));
  auto p = realize(VWGraph({1, 1, 1}, {{0, 1}, {1, 2}})).graph;
  EXPECT_EQ(p, mg(3, {3, 2, 3}));
  EXPECT_FALSE(realize(VWGraph({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}})).forest);
  auto labelled = realize(VWGraph({2, 1}, {{0, 1}}), std::vector<PartIndex>{0, 1, 0}).graph;
  EXPECT_EQ(labelled, mg(3, {3, 1, 3}));
  EXPECT_THROW(realize(VWGraph({2, 1}, {}), std::vector<PartIndex>{0, 1, 1}), std::invalid_argument);
}

TEST(Realize, InvertsQuotient) {
  std::mt19937_64 rng(203);
  int forests = 0;
  for (int it = 0; it < 3000; ++it) {
    auto g = mulex::testing::random_neat(rng, 1 + it % 8);
    auto h = quotient(g);
    if (!is_forest(h)) continue;
    ++forests;
    auto r = realize(h);
    EXPECT_TRUE(in_NC(r.graph));
    EXPECT_TRUE(is_isomorphic(r.graph, g));
    EXPECT_EQ(quotient(r.graph), h);
  }
  EXPECT_GT(forests, 100);
}

TEST(ForestNC, ForestIffNoCycleCopyExhaustive) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    mulex::testing::for_each_vw_graph(n, [](const VWGraph& h) {
      const auto g = realize(h).graph;
      ASSERT_EQ(is_forest(h), in_NC_exhaustive(g)) << to_mg(g);
      ASSERT_EQ(in_NC(g), in_NC_exhaustive(g));
    });
  }
}

TEST(StarTransform, Examples) {
  auto path = VWGraph({2, 1, 1}, {{0, 1}, {1, 2}});
  EXPECT_EQ(f_pi(path), 108);
  auto s = star_transform(path);
  EXPECT_EQ(s.center, 0u);
  EXPECT_EQ(f_pi(s.graph), 162);
  EXPECT_TRUE(s.strict);
  EXPECT_FALSE(s.witness.has_value());

  auto star = VWGraph({3, 1, 2}, {{0, 1}, {0, 2}});
  auto t = star_transform(star);
  EXPECT_EQ(t.graph, star);
  EXPECT_FALSE(t.strict);
  EXPECT_FALSE(t.witness.has_value());

  auto flat = VWGraph({1, 1, 1}, {{0, 1}, {1, 2}});
  auto u = star_transform(flat);
  EXPECT_EQ(f_pi(u.graph), 18);
  EXPECT_EQ(f_pi(flat), 18);
  EXPECT_FALSE(u.strict);
  ASSERT_TRUE(u.witness.has_value());
  EXPECT_EQ(*u.witness, (PartEdge{0, 1}));

  EXPECT_THROW(star_transform(VWGraph({1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}})), std::invalid_argument);
  EXPECT_THROW(star_transform(VWGraph({4}, {})), std::invalid_argument);
}

TEST(StarTransform, RandomForests) {
  std::mt19937_64 rng(207);
  for (int it = 0; it < 1000; ++it) {
    auto h = mulex::testing::random_forest(rng, 2 + it % 11, 1 + it % 4);
    auto s = star_transform(h);
    ASSERT_TRUE(is_star(s.graph));
    auto centered_at = [](const VWGraph& g, PartIndex c) {
      return g.edges().size() + 1 == g.size() && g.degree(c) + 1 == g.size();
    };
    EXPECT_TRUE(centered_at(s.graph, s.center));
    EXPECT_EQ(s.graph.parts(), h.parts());
    EXPECT_EQ(h.part(s.center), *std::max_element(h.parts().begin(), h.parts().end()));
    const auto before = f_pi(h), after = f_pi(s.graph);
    EXPECT_GE(after, before);
    EXPECT_EQ(s.strict, after > before);
    const bool centered = centered_at(h, s.center);
    if (!s.strict && !centered) {
      ASSERT_TRUE(s.witness.has_value());
      EXPECT_EQ(s.witness->first, s.center);
      EXPECT_NE(s.witness->first, s.witness->second);
      EXPECT_EQ(h.part(s.witness->first), h.part(s.witness->second));
    }
  }
}

TEST(SplitLeaf, Examples) {
  auto h = VWGraph({1, 2}, {{0, 1}});
  EXPECT_EQ(f_pi(h), 9);
  auto s = split_leaf(h, 1);
  EXPECT_EQ(s, VWGraph({1, 1, 1}, {{0, 1}, {0, 2}}));
  EXPECT_EQ(f_pi(s), 18);
  auto big = VWGraph({2, 3, 1}, {{0, 1}, {0, 2}});
  EXPECT_EQ(f_pi(split_leaf(big, 1)), f_pi(big) * 4);
  EXPECT_THROW(split_leaf(big, 2), std::invalid_argument);
  EXPECT_THROW(split_leaf(big, 0), std::invalid_argument);
  EXPECT_THROW(split_leaf(VWGraph({2, 2, 2}, {{0, 1}}), 1), std::invalid_argument);
}

TEST(SplitLeaf, FactorIsPowerOfTwo) {
  std::mt19937_64 rng(209);
  for (int it = 0; it < 500; ++it) {
    const std::size_t k = 2 + it % 8;
    std::uniform_int_distribution<std::uint32_t> wd(1, 5);
    std::vector<std::uint32_t> parts(k);
    for (auto& p : parts) p = wd(rng);
    std::vector<PartEdge> edges;
    for (PartIndex i = 1; i < k; ++i) edges.push_back({0, i});
    VWGraph h(parts, edges);
    const auto c = *star_center(h);
    for (PartIndex leaf = 0; leaf < k; ++leaf) {
      if (leaf == c || h.part(leaf) < 2) continue;
      EXPECT_EQ(f_pi(split_leaf(h, leaf)), f_pi(h) * pow_big(2, h.part(leaf) - 1));
    }
  }
}

TEST(BuildGX, Example) {
  VertexSet x{0, 1, 2, 3, 4};
  auto c = build_G_X(10, x);
  EXPECT_EQ(c.r_x, 4u);
  EXPECT_EQ(c.r_rest, w_optimum(5).y);
  EXPECT_EQ(c.rest_product, w_optimum(5).value);
  EXPECT_TRUE(in_W(c.graph));
  auto inner = c.graph.induced(x);
  EXPECT_TRUE(is_isomorphic(inner, build_W(5, 4)));
  EXPECT_GE(Rational(product(c.graph)), Rational(c.rest_product) * f_value(10, 5).value());
}

TEST(BuildGX, WholeSet) {
  for (std::size_t n = 2; n <= 10; ++n) {
    VertexSet x(n);
    for (Vertex v = 0; v < n; ++v) x[v] = v;
    auto c = build_G_X(n, x);
    EXPECT_TRUE(is_isomorphic(c.graph, build_W(n, ceil_beta(n))));
  }
}

TEST(BuildGX, ProductAtLeastRestTimesF) {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t t = 2; t <= n; ++t) {
      VertexSet x(t);
      for (Vertex v = 0; v < t; ++v) x[v] = static_cast<Vertex>(n - t + v);
      auto c = build_G_X(n, x);
      ASSERT_TRUE(in_W(c.graph));
      ASSERT_GE(Rational(product(c.graph)), Rational(c.rest_product) * f_value(n, t).value()) << n << " " << t;
    }
  }
}

TEST(ExtremalFamilies, NCMeetsW) {
  for (std::size_t n : {4u, 5u, 6u}) {
    SearchOptions o;
    o.family = Family::NC;
    const auto set = extremal_set(n, 4, 15, o);
    ASSERT_FALSE(set.empty());
    EXPECT_TRUE(std::any_of(set.begin(), set.end(), [](const Multigraph& g) { return in_W(g); }));
  }
}
