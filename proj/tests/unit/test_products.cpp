#include <gtest/gtest.h>

#include "brute.hpp"
#include "openpack/error.hpp"
#include "openpack/isomorphism.hpp"
#include "openpack/products.hpp"
#include "openpack/solvers.hpp"
#include "support.hpp"

using namespace openpack;

namespace {

// Adjacency in each product straight from its definition.
bool defined_edge(ProductKind kind, const Graph& g, const Graph& h, Vertex g1, Vertex h1, Vertex g2, Vertex h2) {
  const bool ge = g1 == g2;
  const bool he = h1 == h2;
  const bool ga = g.adjacent(g1, g2);
  const bool ha = h.adjacent(h1, h2);
  switch (kind) {
    case ProductKind::cartesian:
      return (ge && ha) || (he && ga);
    case ProductKind::direct:
      return ga && ha;
    case ProductKind::strong:
      return (ge && ha) || (he && ga) || (ga && ha);
    case ProductKind::lexicographic:
      return ga || (ge && ha);
  }
  return false;
}

const ProductKind kKinds[] = {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                              ProductKind::lexicographic};

}  // namespace

TEST(Products, MatchDefinitions) {
  const auto graphs = testing_support::all_graphs(3);
  for (auto kind : kKinds) {
    for (const auto& g : graphs) {
      for (const auto& h : graphs) {
        const auto p = graph_product(kind, g, h);
        ASSERT_EQ(p.graph.order(), g.order() * h.order());
        for (Vertex u = 0; u < p.graph.order(); ++u) {
          for (Vertex v = 0; v < p.graph.order(); ++v) {
            if (u == v) continue;
            const auto [g1, h1] = p.layout.pair(u);
            const auto [g2, h2] = p.layout.pair(v);
            ASSERT_EQ(p.graph.adjacent(u, v), defined_edge(kind, g, h, g1, h1, g2, h2));
          }
        }
      }
    }
  }
}

TEST(Products, EdgeCounts) {
  const auto g = cycle(5);
  const auto h = path(4);
  const std::size_t n1 = 5, m1 = 5, n2 = 4, m2 = 3;
  EXPECT_EQ(cartesian(g, h).graph.size(), n1 * m2 + n2 * m1);
  EXPECT_EQ(direct(g, h).graph.size(), 2 * m1 * m2);
  EXPECT_EQ(strong(g, h).graph.size(), n1 * m2 + n2 * m1 + 2 * m1 * m2);
  EXPECT_EQ(lexicographic(g, h).graph.size(), m1 * n2 * n2 + n1 * m2);
  EXPECT_EQ(corona(g, h).graph.size(), m1 + n1 * (m2 + n2));
  EXPECT_EQ(corona(complete(2), complete(2)).graph.size(), 7U);
}

TEST(Products, LayoutIndexing) {
  const ProductVertexMap map(3, 4);
  EXPECT_EQ(map.index(2, 1), 9U);
  EXPECT_EQ(map.pair(9), (std::pair<Vertex, Vertex>{2, 1}));
  const auto c = corona(path(3), complete(2));
  EXPECT_EQ(c.layout.copy_begin(0), 3U);
  EXPECT_EQ(c.layout.copy_vertex(2, 1), 8U);
  EXPECT_TRUE(c.graph.adjacent(2, 8));
  EXPECT_TRUE(c.graph.adjacent(7, 8));
  EXPECT_FALSE(c.graph.adjacent(1, 8));
}

TEST(Products, CommutativeUpToIsomorphism) {
  const auto graphs = testing_support::all_graphs(3);
  for (const auto& g : graphs) {
    for (const auto& h : graphs) {
      for (auto kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong}) {
        EXPECT_TRUE(is_isomorphic(graph_product(kind, g, h).graph, graph_product(kind, h, g).graph));
      }
    }
  }
  // The lexicographic product is not commutative.
  EXPECT_FALSE(is_isomorphic(lexicographic(path(3), empty_graph(2)).graph,
                             lexicographic(empty_graph(2), path(3)).graph));
}

TEST(Products, DirectWithK2DoublesBipartiteGraphs) {
  for (const auto& g : testing_support::all_graphs(6)) {
    if (!is_bipartite(g) || g.order() < 2) continue;
    ASSERT_TRUE(is_isomorphic(direct(g, complete(2)).graph, disjoint_union(g, g))) << to_graph6(g);
  }
}

TEST(Products, IdentityFactors) {
  const auto g = random_graph(7, 0.4, 8);
  EXPECT_EQ(cartesian(g, complete(1)).graph, g);
  EXPECT_EQ(lexicographic(g, complete(1)).graph, g);
  EXPECT_EQ(corona(g, empty_graph(1)).graph.order(), 14U);
}

TEST(Products, SizeCap) {
  EXPECT_THROW(cartesian(empty_graph(100), empty_graph(100)), Error);
  EXPECT_NO_THROW(cartesian(cycle(64), cycle(64)));
}

TEST(Products, OpenPackingValuesOfSharpInstances) {
  EXPECT_EQ(open_packing_partition_number(cartesian(cycle(4), complete(3)).graph).colors, 6U);
  EXPECT_EQ(open_packing_partition_number(cartesian(cycle(4), complete(4)).graph).colors, 8U);
  const auto c4k2 = direct(cycle(4), complete(2)).graph;
  EXPECT_TRUE(is_isomorphic(c4k2, disjoint_union(cycle(4), cycle(4))));
  EXPECT_EQ(open_packing_partition_number(c4k2).colors, 2U);
  EXPECT_EQ(open_packing_partition_number(lexicographic(path(3), complete(2)).graph).colors, 6U);
  EXPECT_EQ(open_packing_partition_number(corona(path(3), complete(1)).graph).colors, 3U);
}
