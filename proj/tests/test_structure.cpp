#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gsym/product.hpp"
#include "gsym/structure.hpp"
#include "oracles.hpp"

using namespace gsym;

TEST(SPartition, Examples) {
  EXPECT_EQ(s_partition(complete(4)).classes, (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  EXPECT_EQ(s_partition(path(2)).classes, (std::vector<std::vector<Vertex>>{{0, 1}}));
  EXPECT_EQ(s_partition(path(4)).classes, (std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {3}}));
}

TEST(SPartition, ClassesMatchClosedNeighbourhoods) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(1 + rng() % 9, 0.5, rng);
    const auto p = s_partition(g);
    std::vector<int> seen(g.order(), 0);
    for (const auto& c : p.classes) {
      for (Vertex v : c) ++seen[v];
      for (Vertex v : c) EXPECT_EQ(closed_neighborhood(g, v), closed_neighborhood(g, c.front()));
    }
    for (int s : seen) EXPECT_EQ(s, 1);
    for (std::size_t a = 0; a < p.classes.size(); ++a)
      for (std::size_t b = a + 1; b < p.classes.size(); ++b)
        EXPECT_NE(closed_neighborhood(g, p.classes[a].front()), closed_neighborhood(g, p.classes[b].front()));
  }
}

TEST(SThin, Examples) {
  EXPECT_TRUE(is_s_thin(path(3)));
  EXPECT_TRUE(is_s_thin(cycle(5)));
  for (std::size_t n = 2; n <= 6; ++n) EXPECT_FALSE(is_s_thin(complete(n)));
  EXPECT_FALSE(is_s_thin(cycle(3)));
  EXPECT_TRUE(is_s_thin(cycle(4)));
  EXPECT_TRUE(is_s_thin(strong_product(path(3), path(4))));
}

TEST(SThin, SameAsInjectiveClosedNeighbourhoods) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(1 + rng() % 9, 0.4, rng);
    std::set<VertexSet> images;
    for (Vertex v = 0; v < g.order(); ++v) images.insert(closed_neighborhood(g, v));
    EXPECT_EQ(is_s_thin(g), images.size() == g.order());
  }
}

TEST(SpanningSubgraph, Examples) {
  const std::vector<std::pair<Graph, Graph>> pairs{{path(3), path(4)}, {cycle(3), cycle(5)}, {complete(2), path(3)}};
  for (const auto& [g, h] : pairs) {
    const Graph s = strong_product(g, h);
    EXPECT_TRUE(is_spanning_subgraph(cartesian_product(g, h), s));
    EXPECT_TRUE(is_spanning_subgraph(direct_product(g, h), s));
    EXPECT_FALSE(is_spanning_subgraph(s, cartesian_product(g, h)));
  }
  EXPECT_FALSE(is_spanning_subgraph(cycle(4), cartesian_product(path(2), path(3))));
  EXPECT_TRUE(is_spanning_subgraph(path(4), cycle(4)));
}

TEST(AutSubgroup, Examples) {
  EXPECT_TRUE(aut_subgroup_of(strong_product(path(3), path(4)), cartesian_product(path(3), path(4))));
  EXPECT_TRUE(aut_subgroup_of(cycle(4), complete(4)));
  EXPECT_FALSE(aut_subgroup_of(complete(4), cycle(4)));
}

TEST(AutSubgroup, AutomorphismsKeepSubgraphEdges) {
  const std::vector<std::pair<Graph, Graph>> pairs{{path(3), path(4)}, {path(3), cycle(5)}, {path(4), path(4)}};
  for (const auto& [a, b] : pairs) {
    const Graph g = strong_product(a, b), h = cartesian_product(a, b);
    const auto aut = automorphism_group(g);
    ASSERT_TRUE(aut_subgroup_of(aut, h));
    for (const auto& p : aut)
      for (const Edge& e : h.edges()) EXPECT_TRUE(h.adjacent(p[e.u], p[e.v]));
  }
}

TEST(Hamiltonian, Examples) {
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_TRUE(hamiltonian_path_exists(path(n)));
  EXPECT_FALSE(hamiltonian_path_exists(disjoint_union(cycle(3), cycle(3))));
  const Graph s = strong_product(path(3), path(3));
  const auto route = hamiltonian_path(s);
  ASSERT_TRUE(route.has_value());
  EXPECT_EQ(route->size(), 9u);
  // Star K_{1,3} has no Hamiltonian path.
  EXPECT_FALSE(hamiltonian_path_exists(Graph(4, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}})));
}

TEST(Hamiltonian, ReturnedPathIsValid) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_connected(2 + rng() % 14, 0.25, rng);
    const auto route = hamiltonian_path(g);
    if (!route) continue;
    std::vector<Vertex> sorted = *route;
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(sorted[v], v);
    for (std::size_t k = 0; k + 1 < route->size(); ++k) EXPECT_TRUE(g.adjacent((*route)[k], (*route)[k + 1]));
  }
}

TEST(Hamiltonian, AgreesWithBruteForce) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(1 + rng() % 8, 0.3, rng);
    EXPECT_EQ(hamiltonian_path_exists(g), oracle::hamiltonian_path(g)) << to_graph6(g);
  }
}

TEST(Hamiltonian, LargerProductsWithinRaisedBound) {
  const Graph g = strong_product(cycle(5), cycle(6));
  EXPECT_THROW(hamiltonian_path(g), budget_exceeded);
  EXPECT_TRUE(hamiltonian_path(g, HamiltonianLimits{36}).has_value());
}
