#include <gtest/gtest.h>

#include <set>

#include "neumaier/enumerate.hpp"
#include "neumaier/generators.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/isomorphism.hpp"
#include "oracles.hpp"

using namespace neumaier;

TEST(VertexSet, BasicOperations) {
  VertexSet a = VertexSet::of(std::vector<std::size_t>{1, 5, 64, 200});
  EXPECT_EQ(a.size(), 4u);
  EXPECT_TRUE(a.contains(64));
  EXPECT_FALSE(a.contains(63));
  EXPECT_EQ(a.first(), 1u);
  a.erase(1);
  EXPECT_EQ(a.first(), 5u);
  const VertexSet b = VertexSet::range(70);
  EXPECT_EQ(b.size(), 70u);
  EXPECT_EQ((a & b).to_vector(), (std::vector<std::size_t>{5, 64}));
  EXPECT_EQ((a - b).to_vector(), (std::vector<std::size_t>{200}));
  EXPECT_EQ(intersection_size(a, b), 2u);
  EXPECT_TRUE((a & b).is_subset_of(b));
  EXPECT_TRUE(VertexSet{}.empty());
  EXPECT_EQ(VertexSet{}.first(), kMaxVertices);
}

TEST(GraphBuilder, RejectsBadEdges) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), ArgumentError);
  EXPECT_THROW(b.add_edge(0, 3), ArgumentError);
  EXPECT_THROW(GraphBuilder(kMaxVertices + 1), ArgumentError);
}

TEST(GraphCore, ComplementOfPetersenIsJohnson52) {
  EXPECT_TRUE(are_isomorphic(complement(petersen_graph()), johnson2_graph(5)));
  const Graph c = complement(cycle_graph(5));
  EXPECT_TRUE(are_isomorphic(c, cycle_graph(5)));
}

TEST(GraphCore, LineGraphs) {
  EXPECT_TRUE(are_isomorphic(line_graph(complete_bipartite(1, 3)), complete_graph(3)));
  EXPECT_TRUE(are_isomorphic(line_graph(path_graph(5)), path_graph(4)));
  EXPECT_TRUE(are_isomorphic(line_graph(complete_bipartite(3, 3)), rook_graph(3)));
  EXPECT_TRUE(are_isomorphic(line_graph(complete_graph(5)), johnson2_graph(5)));
  EXPECT_THROW(line_graph(empty_graph(4)), ArgumentError);
  // Vertex i is the i-th lexicographic edge.
  const Graph p = path_graph(3);
  const Graph l = line_graph(p);
  ASSERT_EQ(l.order(), 2u);
  EXPECT_TRUE(l.adjacent(0, 1));
}

TEST(GraphCore, DiameterAndConnectivity) {
  EXPECT_EQ(diameter(cycle_graph(7)), std::optional<std::size_t>(3));
  EXPECT_EQ(diameter(petersen_graph()), std::optional<std::size_t>(2));
  EXPECT_EQ(diameter(complete_graph(4)), std::optional<std::size_t>(1));
  const Graph two = disjoint_union(cycle_graph(3), cycle_graph(4));
  EXPECT_FALSE(is_connected(two));
  EXPECT_FALSE(diameter(two).has_value());
  EXPECT_EQ(connected_components(two).size(), 2u);
  EXPECT_EQ(diameter(empty_graph(1)), std::optional<std::size_t>(0));
}

TEST(Generators, RookMatchesDefinition) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Graph expected = oracle::from_predicate(n * n, [&](std::size_t a, std::size_t b) {
      return a / n == b / n || a % n == b % n;
    });
    EXPECT_EQ(rook_graph(n), expected) << n;
  }
  EXPECT_THROW(rook_graph(1), ArgumentError);
}

TEST(Generators, JohnsonAndPetersenMatchDefinition) {
  for (std::size_t n = 4; n <= 8; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const Graph expected = oracle::from_predicate(pairs.size(), [&](std::size_t i, std::size_t j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      return a == c || a == d || b == c || b == d;
    });
    EXPECT_EQ(johnson2_graph(n), expected) << n;
  }
  const Graph p = petersen_graph();
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  EXPECT_THROW(johnson2_graph(3), ArgumentError);
}

TEST(Generators, CompleteMultipartiteMatchesDefinition) {
  for (std::size_t p = 2; p <= 4; ++p)
    for (std::size_t m = 1; m <= 4; ++m) {
      const Graph expected =
          oracle::from_predicate(p * m, [&](std::size_t a, std::size_t b) { return a / m != b / m; });
      EXPECT_EQ(complete_multipartite(p, m), expected);
      EXPECT_EQ(generate(family::CompleteMultipartite{p, m}), expected);
    }
  EXPECT_THROW(complete_multipartite(1, 3), ArgumentError);
}

TEST(Generators, CyclesAndComplete) {
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_TRUE(complete_graph(6).is_complete());
  EXPECT_THROW(cycle_graph(2), ArgumentError);
  EXPECT_EQ(generate(family::Cycle{6}), cycle_graph(6));
  EXPECT_EQ(generate(family::Petersen{}), petersen_graph());
}

TEST(Enumerate, CountsAndOrder) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t seen = 0;
    std::set<std::string> distinct;
    enumerate_all_graphs(n, [&](const Graph& g) {
      ++seen;
      distinct.insert(oracle::graph6(g));
    });
    EXPECT_EQ(seen, std::uint64_t{1} << (n * (n - 1) / 2));
    EXPECT_EQ(distinct.size(), seen);
  }
  EXPECT_THROW(labeled_graph_count(9), ArgumentError);
  EXPECT_THROW(labeled_graph_count(0), ArgumentError);
  // Mask bit b is the b-th edge in (0,1),(0,2),(1,2),... order.
  const Graph g = graph_from_mask(4, 0b000100);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_EQ(g.edge_count(), 1u);
}

// Smallest canonical mask over all relabellings.
static std::uint64_t canonical_mask(const Graph& g) {
  const std::size_t n = g.order();
  const auto order = graph6_edge_order(n);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    for (std::size_t b = 0; b < order.size(); ++b)
      if (g.adjacent(p[order[b].first], p[order[b].second])) m |= std::uint64_t{1} << b;
    best = std::min(best, m);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

TEST(Enumerate, MonotoneDegreesCoversEveryIsomorphismClass) {
  // Number of unlabeled graphs on n vertices.
  const std::size_t unlabeled[] = {0, 1, 2, 4, 11, 34, 156};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> classes;
    enumerate_all_graphs(n, [&](const Graph& g) { classes.insert(canonical_mask(g)); }, {.monotone_degrees = true});
    EXPECT_EQ(classes.size(), unlabeled[n]) << n;
  }
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    // Half the time compare against a relabelled copy.
    Graph b;
    if (trial % 2 == 0) {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      b = oracle::from_predicate(n, [&](std::size_t i, std::size_t j) { return a.adjacent(p[i], p[j]); });
    } else {
      b = oracle::random_graph(n, 0.5, rng);
    }
    const auto map = find_isomorphism(a, b);
    EXPECT_EQ(map.has_value(), oracle::isomorphic_by_permutation(a, b));
    if (map) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(a.adjacent(i, j), b.adjacent((*map)[i], (*map)[j]));
    }
  }
}
