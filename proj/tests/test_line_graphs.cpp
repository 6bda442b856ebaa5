#include <gtest/gtest.h>

#include "neumaier/generators.hpp"
#include "neumaier/line_graphs.hpp"
#include "oracles.hpp"

using namespace neumaier;

TEST(LineGraphs, RookRoots) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto c = classify_line_graph_neumaier(complete_bipartite(n, n));
    ASSERT_EQ(c.cases.size(), 1u);
    EXPECT_EQ(c.cases[0], (LineGraphCase{LineGraphCaseKind::RookCase, n - 1}));
    EXPECT_TRUE(c.isomorphism_checked);
    EXPECT_TRUE(c.line_report.srg.has_value());
  }
}

TEST(LineGraphs, JohnsonRoots) {
  for (std::size_t n = 5; n <= 7; ++n) {
    const auto c = classify_line_graph_neumaier(complete_graph(n));
    ASSERT_EQ(c.cases.size(), 1u);
    EXPECT_EQ(c.cases[0], (LineGraphCase{LineGraphCaseKind::JohnsonCase, n - 2}));
  }
  // L(K_4) is both J(4,2) and the octahedron; the triangles of K_4 give the
  // second family of regular cliques.
  const auto k4 = classify_line_graph_neumaier(complete_graph(4));
  EXPECT_TRUE(k4.has(LineGraphCaseKind::JohnsonCase));
  EXPECT_TRUE(k4.has(LineGraphCaseKind::Octahedron));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(line_graph(complete_graph(4)), complete_multipartite(3, 2)));
}

TEST(LineGraphs, NotNeumaier) {
  const auto p = classify_line_graph_neumaier(petersen_graph());
  ASSERT_EQ(p.cases.size(), 1u);
  EXPECT_EQ(p.cases[0].kind, LineGraphCaseKind::NotNeumaier);
  EXPECT_NEAR(p.line_report.spectrum.min(), -2, 1e-8);
  EXPECT_TRUE(p.line_report.regular_cliques.empty());
  EXPECT_EQ(classify_line_graph_neumaier(cycle_graph(7)).cases[0].kind, LineGraphCaseKind::NotNeumaier);
  EXPECT_EQ(classify_line_graph_neumaier(complete_graph(3)).cases[0].kind, LineGraphCaseKind::NotNeumaier);
  EXPECT_EQ(classify_line_graph_neumaier(complete_bipartite(2, 3)).cases[0].kind, LineGraphCaseKind::NotNeumaier);
  EXPECT_THROW(classify_line_graph_neumaier(empty_graph(3)), ArgumentError);
}

TEST(LineGraphs, CaseNames) {
  EXPECT_EQ(to_string(LineGraphCase{LineGraphCaseKind::RookCase, 3}), "RookCase(3)");
  EXPECT_EQ(to_string(LineGraphCase{LineGraphCaseKind::Octahedron, 0}), "Octahedron");
}
