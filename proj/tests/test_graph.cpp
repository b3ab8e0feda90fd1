#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "sparing/graph.hpp"

namespace sparing {
namespace {

std::vector<Graph> factor_corpus() {
  return {path_graph(2),        path_graph(3),         path_graph(5),        cycle_graph(3),
          cycle_graph(4),       cycle_graph(5),        complete_graph(2),    complete_graph(4),
          complete_bipartite(1, 2), complete_bipartite(2, 3)};
}

void check_odd_cycle(const Graph& g, const std::vector<Vertex>& cycle) {
  ASSERT_FALSE(cycle.empty());
  EXPECT_EQ(cycle.size() % 2, 1u);
  EXPECT_EQ(std::set<Vertex>(cycle.begin(), cycle.end()).size(), cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i)
    EXPECT_TRUE(g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
}

void check_two_coloring(const Graph& g, const std::vector<int>& color) {
  ASSERT_EQ(color.size(), g.vertex_count());
  for (const auto& e : g.edges()) EXPECT_NE(color[e.u], color[e.v]);
}

TEST(Generators, Path) {
  EXPECT_EQ(path_graph(2).vertex_count(), 2u);
  EXPECT_EQ(path_graph(2).edge_count(), 1u);
  const std::vector<Edge> expected{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(path_graph(4).edges(), expected);
  EXPECT_THROW(path_graph(1), std::invalid_argument);
}

TEST(Generators, Cycle) {
  const auto triangle = cycle_graph(3);
  EXPECT_EQ(triangle.edge_count(), 3u);
  EXPECT_TRUE(triangle.adjacent(2, 0));
  EXPECT_TRUE(is_bipartite(cycle_graph(4)));
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Generators, Complete) {
  EXPECT_EQ(complete_graph(3).edge_count(), 3u);
  EXPECT_EQ(complete_graph(4).edge_count(), 6u);
  EXPECT_THROW(complete_graph(1), std::invalid_argument);
}

TEST(Generators, CompleteBipartite) {
  EXPECT_EQ(complete_bipartite(1, 1).edge_count(), 1u);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6u);
  const auto k33 = complete_bipartite(3, 3);
  EXPECT_EQ(k33.edge_count(), 9u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(k33.degree(v), 3u);

  const auto sides = complete_bipartite_sides(2, 3);
  EXPECT_EQ(sides.x, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(sides.y, (std::vector<Vertex>{2, 3, 4}));
  const auto g = complete_bipartite(2, 3);
  for (auto a : sides.x)
    for (auto b : sides.x) EXPECT_FALSE(a != b && g.adjacent(a, b));
  EXPECT_THROW(complete_bipartite(0, 2), std::invalid_argument);
}

TEST(Graph, RejectsMalformedInput) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(0, {}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{0, 1}}, std::vector<Coord>{{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}}, std::vector<Coord>{{0, 0}, {1, 0}, {0, 1}}),
               std::invalid_argument);
}

TEST(Graph, NormalizesEdgeOrientationAndOrder) {
  const Graph g(3, {{2, 1}, {1, 0}});
  const std::vector<Edge> expected{{0, 1}, {1, 2}};
  EXPECT_EQ(g.edges(), expected);
}

TEST(Product, SmallestGridIsFourCycle) {
  const auto g = cartesian_product(path_graph(2), path_graph(2));
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(Product, TriangularPrism) {
  const auto g = cartesian_product(complete_graph(3), path_graph(2));
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 9u);  // p1*q2 + p2*q1 = 3*1 + 2*3
}

TEST(Product, MatchesDirectAdjacencyEnumeration) {
  // Independent oracle: test every coordinate pair against the definition.
  for (const auto& g1 : factor_corpus()) {
    for (const auto& g2 : factor_corpus()) {
      const auto prod = cartesian_product(g1, g2);
      const auto& coords = *prod.coords();
      std::set<std::pair<Vertex, Vertex>> expected;
      for (Vertex a = 0; a < prod.vertex_count(); ++a)
        for (Vertex b = a + 1; b < prod.vertex_count(); ++b) {
          const auto [r1, c1] = coords[a];
          const auto [r2, c2] = coords[b];
          const bool adj = (r1 == r2 && g2.adjacent(c1, c2)) || (c1 == c2 && g1.adjacent(r1, r2));
          if (adj) expected.emplace(a, b);
        }
      std::set<std::pair<Vertex, Vertex>> actual;
      for (const auto& e : prod.edges()) actual.emplace(e.u, e.v);
      EXPECT_EQ(actual, expected);
    }
  }
}

TEST(Product, TorusThreeByThree) {
  const auto g = cartesian_product(cycle_graph(3), cycle_graph(3));
  EXPECT_EQ(g.vertex_count(), 9u);
  EXPECT_EQ(g.edge_count(), 18u);
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.degree(v), 4u);
}

TEST(Product, CopyMajorIndexing) {
  const auto g = cartesian_product(cycle_graph(4), path_graph(3));
  const auto& coords = *g.coords();
  for (std::size_t copy = 0; copy < 3; ++copy)
    for (std::size_t row = 0; row < 4; ++row) {
      const auto v = product_index(row, copy, 4);
      EXPECT_EQ(v, copy * 4 + row);
      EXPECT_EQ(coords[v], (Coord{row, copy}));
    }
}

TEST(Product, Invariants) {
  for (const auto& g1 : factor_corpus()) {
    for (const auto& g2 : factor_corpus()) {
      const auto ab = cartesian_product(g1, g2);
      const auto ba = cartesian_product(g2, g1);
      const auto p1 = g1.vertex_count(), p2 = g2.vertex_count();
      const auto q1 = g1.edge_count(), q2 = g2.edge_count();
      EXPECT_EQ(ab.vertex_count(), p1 * p2);
      EXPECT_EQ(ab.edge_count(), p1 * q2 + p2 * q1);
      EXPECT_EQ(ab.vertex_count(), ba.vertex_count());
      EXPECT_EQ(ab.edge_count(), ba.edge_count());
      EXPECT_EQ(ab.degree_sequence(), ba.degree_sequence());
      EXPECT_EQ(bool(is_bipartite(ab)), is_bipartite(g1) && is_bipartite(g2));
      for (Vertex v = 0; v < ab.vertex_count(); ++v) {
        const auto [row, copy] = (*ab.coords())[v];
        EXPECT_EQ(ab.degree(v), g1.degree(row) + g2.degree(copy));
      }
    }
  }
}

TEST(Bipartite, Examples) {
  const auto c4 = cycle_graph(4);
  const auto r4 = is_bipartite(c4);
  ASSERT_TRUE(r4);
  check_two_coloring(c4, r4.coloring);

  const auto c5 = cycle_graph(5);
  const auto r5 = is_bipartite(c5);
  ASSERT_FALSE(r5);
  check_odd_cycle(c5, r5.odd_cycle);

  const auto grid = cartesian_product(path_graph(3), path_graph(4));
  const auto rg = is_bipartite(grid);
  ASSERT_TRUE(rg);
  check_two_coloring(grid, rg.coloring);
}

TEST(Bipartite, OddCycleWitnessOnProducts) {
  for (const auto& g : {cartesian_product(cycle_graph(5), path_graph(3)),
                        cartesian_product(complete_graph(4), cycle_graph(4)),
                        cartesian_product(cycle_graph(7), cycle_graph(3)), complete_graph(5)}) {
    const auto r = is_bipartite(g);
    ASSERT_FALSE(r);
    check_odd_cycle(g, r.odd_cycle);
  }
}

TEST(Bipartite, DisconnectedGraph) {
  const Graph g(7, {{0, 1}, {2, 3}, {3, 4}, {4, 2}, {5, 6}});
  const auto r = is_bipartite(g);
  ASSERT_FALSE(r);
  check_odd_cycle(g, r.odd_cycle);
  EXPECT_TRUE(is_bipartite(Graph(4, {{0, 1}, {2, 3}})));
}

TEST(Degree, Examples) {
  const auto k4 = complete_graph(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(k4, v), 3u);
  const auto rook = cartesian_product(complete_graph(3), complete_graph(4));
  for (Vertex v = 0; v < rook.vertex_count(); ++v) EXPECT_EQ(degree(rook, v), 5u);
  EXPECT_EQ(degree(path_graph(3), 1), 2u);
  EXPECT_THROW(degree(path_graph(3), 3), std::out_of_range);
}

}  // namespace
}  // namespace sparing
