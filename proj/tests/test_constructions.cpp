#include <gtest/gtest.h>

#include "oracles.hpp"
#include "radgirth/bounds.hpp"
#include "radgirth/constructions.hpp"
#include "radgirth/families.hpp"
#include "radgirth/geometry.hpp"

using namespace radgirth;

TEST(Box, SmallestCaseIsCycle) {
  const Graph g = box_graph(4, 2, 0);
  EXPECT_EQ(g, cycle_graph(8));
  EXPECT_EQ(metric_summary(g).radius, 4u);
}

TEST(Box, OddDegreeWithSurplus) {
  const MetricSummary ms = metric_summary(box_graph(5, 3, 1));
  EXPECT_EQ(ms.order, 17u);
  EXPECT_EQ(ms.min_degree, 3u);
  EXPECT_EQ(ms.radius, 5u);
  EXPECT_EQ(ms.girth, Girth(4));
}

TEST(Box, EvenDegree) {
  const MetricSummary ms = metric_summary(box_graph(4, 4, 0));
  EXPECT_EQ(ms.order, 16u);
  EXPECT_GE(ms.min_degree, 4u);
  EXPECT_EQ(ms.radius, 4u);
  EXPECT_EQ(ms.girth, Girth(4));
}

TEST(Box, SpecSizes) {
  const BoxSpec s = box_spec(5, 3, 2);
  ASSERT_EQ(s.box_sizes.size(), 10u);
  EXPECT_EQ(s.box_sizes, (std::vector<std::uint32_t>{4, 2, 1, 1, 2, 2, 1, 1, 2, 2}));
  for (std::size_t i = 0; i < s.box_sizes.size(); ++i)
    EXPECT_GE(s.box_sizes[i], i % 4 <= 1 ? 2u : 1u);
}

TEST(Box, RejectsSmallParameters) {
  EXPECT_THROW(box_graph(3, 3, 0), InputError);
  EXPECT_THROW(box_graph(5, 1, 0), InputError);
}

TEST(Box, MatchesOracleOnSmallInstances) {
  for (std::uint32_t r = 4; r <= 7; ++r)
    for (std::uint32_t delta = 2; delta <= 4; ++delta)
      for (std::uint32_t c : {0u, 1u, delta}) {
        const Graph g = box_graph(r, delta, c);
        EXPECT_EQ(oracle::radius(g), r);
        EXPECT_EQ(oracle::min_degree(g), delta);
        // All boxes are singletons only for delta = 2, c = 0, where the graph is C_2r.
        EXPECT_EQ(oracle::girth(g), delta == 2 && c == 0 ? 2 * r : 4u);
      }
}

TEST(Box, FormulaAgreement) {
  for (std::uint32_t r = 4; r <= 20; ++r)
    for (std::uint32_t delta = 2; delta <= 8; ++delta)
      for (std::uint32_t c : {0u, 1u, delta}) {
        const std::uint64_t n = 2 * ((r * delta + 1) / 2) + c;
        const RadiusFormulaResult f = exact_radius_formula_g4(n, delta);
        ASSERT_TRUE(f.exists());
        EXPECT_GE(f.radius(), r);
        const bool odd_product = (r * delta) % 2 == 1;
        if (c < delta && !(odd_product && c == delta - 1)) {
          EXPECT_EQ(f.radius(), r) << r << " " << delta << " " << c;
        }
      }
}

TEST(SmallRadius, Bipartite) {
  EXPECT_EQ(bipartite_radius2(6, 2), complete_bipartite_graph(2, 4));
  const MetricSummary ms = metric_summary(bipartite_radius2(6, 2));
  EXPECT_EQ(ms.radius, 2u);
  EXPECT_EQ(ms.min_degree, 2u);
  EXPECT_EQ(bipartite_radius2(4, 2), complete_bipartite_graph(2, 2));
  EXPECT_EQ(metric_summary(bipartite_radius2(4, 2)).radius, 2u);
  EXPECT_THROW(bipartite_radius2(5, 3), InputError);
}

TEST(SmallRadius, RadiusThree) {
  const MetricSummary a = metric_summary(radius3_graph(8, 3));
  EXPECT_EQ(a.order, 8u);
  EXPECT_EQ(a.radius, 3u);
  EXPECT_EQ(a.min_degree, 3u);
  EXPECT_TRUE(a.girth.at_least(4));
  const MetricSummary b = metric_summary(radius3_graph(6, 2));
  EXPECT_EQ(b.radius, 3u);
  EXPECT_EQ(b.min_degree, 2u);
  EXPECT_THROW(radius3_graph(7, 3), InputError);
}

TEST(SmallRadius, SweepAgainstFormula) {
  for (std::uint32_t delta = 2; delta <= 7; ++delta) {
    for (std::uint32_t n = 2 * delta; n < 4 * delta; ++n) {
      const Graph g = n <= 2 * delta + 1 ? bipartite_radius2(n, delta) : radius3_graph(n, delta);
      const MetricSummary ms = metric_summary(g);
      EXPECT_EQ(ms.min_degree, delta);
      EXPECT_TRUE(ms.girth.at_least(4));
      EXPECT_EQ(ms.radius, exact_radius_formula_g4(n, delta).radius()) << n << " " << delta;
    }
  }
}

TEST(Glue, CycleOfCycles) {
  const Graph g = glue_cycle(cycle_graph(6), 3);
  const MetricSummary ms = metric_summary(g);
  EXPECT_EQ(ms.order, 18u);
  EXPECT_EQ(ms.girth, Girth(18));
  EXPECT_EQ(ms.max_degree, 2u);
  EXPECT_EQ(ms.radius, 9u);
}

TEST(Glue, Heawood) {
  const Graph g = glue_cycle(heawood_graph(), 4);
  const MetricSummary ms = metric_summary(g);
  EXPECT_EQ(ms.order, 56u);
  EXPECT_EQ(ms.min_degree, 3u);
  EXPECT_TRUE(ms.girth.at_least(6));
  EXPECT_GE(*ms.radius, 12u);
}

TEST(Glue, TutteCoxeter) {
  const MetricSummary ms = metric_summary(glue_cycle(tutte_coxeter_graph(), 3));
  EXPECT_EQ(ms.order, 90u);
  EXPECT_EQ(ms.min_degree, 3u);
  EXPECT_TRUE(ms.girth.at_least(8));
  EXPECT_GE(*ms.radius, 12u);
}

TEST(Glue, CutEdgeChoiceAndDistance) {
  const Graph h = heawood_graph();
  const GlueSpec spec = glue_spec(h, 2);
  EXPECT_EQ(spec.cut_edge, h.edges().front());
  const Graph cut = h.without_edge(spec.cut_edge);
  EXPECT_GE(distance(cut, spec.cut_edge.u, spec.cut_edge.v), girth(h).value() - 1);

  // The first edge of this graph is a bridge, so the choice skips it.
  const Graph joined(6, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
  EXPECT_EQ(glue_spec(joined, 2).cut_edge, (Edge{0, 2}));
}

TEST(Glue, InvariantsOverBases) {
  const std::vector<Graph> bases = {cycle_graph(5), cycle_graph(8), heawood_graph(), tutte_coxeter_graph(),
                                    petersen_graph(), complete_bipartite_graph(3, 3), hypercube_graph(3),
                                    box_graph(4, 3, 1)};
  for (const Graph& h : bases) {
    const MetricSummary hm = metric_summary(h);
    for (std::uint32_t m = 2; m <= 7; ++m) {
      const MetricSummary gm = metric_summary(glue_cycle(h, m));
      EXPECT_EQ(gm.order, m * h.order());
      EXPECT_EQ(gm.min_degree, hm.min_degree);
      EXPECT_GE(gm.girth, hm.girth);
      EXPECT_GE(*gm.radius, m * hm.girth.value() / 2);
    }
  }
}

TEST(Glue, RejectsBadInput) {
  EXPECT_THROW(glue_cycle(heawood_graph(), 1), InputError);
  EXPECT_THROW(glue_cycle(path_graph(4), 3), InputError);
  EXPECT_THROW(glue_cycle(disjoint_union(cycle_graph(3), cycle_graph(3)), 3), InputError);
}

TEST(Extract, Cycle12) {
  const ExtractionResult e = extract_dense_subgraph(cycle_graph(12), 2);
  EXPECT_EQ(e.center, 0u);
  EXPECT_EQ(e.geodesic.size(), 7u);
  EXPECT_LE(e.ball.size(), 8u);
  EXPECT_GE(e.subgraph.graph.edge_count(), 2u);
  EXPECT_EQ(e.edge_bound, Rational(2));
  EXPECT_EQ(e.vertex_bound, Rational(60, 7));
  EXPECT_TRUE(e.meets_vertex_bound && e.meets_edge_bound && e.meets_covering_bound);
}

TEST(Extract, HeawoodGlue) {
  const ExtractionResult e = extract_dense_subgraph(glue_cycle(heawood_graph(), 6), 3);
  EXPECT_EQ(e.edge_bound, Rational(9));
  EXPECT_GE(e.subgraph.graph.edge_count(), 18u);
  EXPECT_TRUE(e.meets_vertex_bound && e.meets_edge_bound && e.meets_covering_bound);
  EXPECT_EQ(e.ball, ball(glue_cycle(heawood_graph(), 6), e.geodesic[e.chosen_index], 3));
  EXPECT_EQ(*std::min_element(e.ball_sizes.begin(), e.ball_sizes.end()), e.ball.size());
}

TEST(Extract, Errors) {
  EXPECT_THROW(extract_dense_subgraph(complete_graph(4), 2), InputError);
  EXPECT_THROW(extract_dense_subgraph(disjoint_union(cycle_graph(8), cycle_graph(8)), 2), InputError);
  EXPECT_THROW(extract_dense_subgraph(cycle_graph(8), 1), InputError);
}

TEST(Extract, BoundsOverFamilies) {
  for (std::uint32_t m = 2; m <= 12; ++m) {
    for (const Graph& g : {glue_cycle(heawood_graph(), m), glue_cycle(tutte_coxeter_graph(), m), cycle_graph(4 * m + 4)}) {
      const std::uint32_t k = girth(g).value() / 2 >= 4 ? 4 : 3;
      const ExtractionResult e = extract_dense_subgraph(g, std::min(k, girth(g).value() / 2));
      EXPECT_TRUE(e.meets_vertex_bound);
      EXPECT_TRUE(e.meets_edge_bound);
      EXPECT_TRUE(e.meets_covering_bound);
      EXPECT_TRUE(is_connected(e.subgraph.graph));
    }
  }
}
