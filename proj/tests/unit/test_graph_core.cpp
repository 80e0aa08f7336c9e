#include <gtest/gtest.h>

#include "openpack/error.hpp"
#include "openpack/graph.hpp"
#include "openpack/vertex_set.hpp"
#include "support.hpp"

using namespace openpack;

TEST(VertexSet, MembershipAndIteration) {
  VertexSet s(130, {0, 63, 64, 129});
  EXPECT_EQ(s.size(), 4U);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(65));
  EXPECT_FALSE(s.contains(500));
  EXPECT_EQ(s.first(), 0U);
  EXPECT_EQ(s.next(63), 64U);
  EXPECT_EQ(s.next(129), 130U);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 63, 64, 129}));
  s.erase(63);
  EXPECT_EQ(s.size(), 3U);
  EXPECT_THROW(s.insert(130), Error);
}

TEST(VertexSet, Algebra) {
  const VertexSet a(10, {1, 2, 3});
  const VertexSet b(10, {3, 4});
  EXPECT_EQ(a | b, VertexSet(10, {1, 2, 3, 4}));
  EXPECT_EQ(a & b, VertexSet(10, {3}));
  EXPECT_EQ(a - b, VertexSet(10, {1, 2}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_TRUE(VertexSet(10, {1}).is_subset_of(a));
  EXPECT_TRUE(VertexSet(10).empty());
  EXPECT_EQ(VertexSet(10).first(), 10U);
  EXPECT_EQ(VertexSet::full(70).size(), 70U);
}

TEST(Graph, EdgeListConstruction) {
  const auto g = Graph::from_edge_list(4, {{0, 1}, {1, 0}, {2, 1}, {3, 2}});
  EXPECT_EQ(g.order(), 4U);
  EXPECT_EQ(g.size(), 3U);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2U);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(g.closed_neighbors(0), VertexSet(4, {0, 1}));
}

TEST(Graph, RejectsBadInput) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  EXPECT_EQ(code([] { Graph::from_edge_list(0, {}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code([] { Graph::from_edge_list(3, {{0, 3}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code([] { Graph::from_edge_list(3, {{1, 1}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code([] { Graph::from_edge_list(kMaxGraphOrder + 1, {}); }), ErrorCode::cap_exceeded);
  const std::vector<VertexSet> asym{VertexSet(2, {1}), VertexSet(2)};
  EXPECT_THROW(Graph::from_neighbor_sets(asym), Error);
}

TEST(Graph, NeighborSetsRoundTrip) {
  const auto g = cycle(7);
  std::vector<VertexSet> rows;
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.neighbors(v));
  EXPECT_EQ(Graph::from_neighbor_sets(rows), g);
}

TEST(VertexLabeling, Validation) {
  EXPECT_NO_THROW(VertexLabeling({1, 2, 1, 3}));
  EXPECT_THROW(VertexLabeling({1, 3}), Error);
  EXPECT_THROW(VertexLabeling({0, 1}), Error);
  const auto f = VertexLabeling::normalized(std::vector<std::uint32_t>{7, 7, 2, 9});
  EXPECT_EQ(std::vector<std::uint32_t>(f.labels().begin(), f.labels().end()), (std::vector<std::uint32_t>{1, 1, 2, 3}));
  EXPECT_EQ(f.classes(), 3U);
  EXPECT_EQ(f.class_members(1), VertexSet(4, {0, 1}));
  EXPECT_EQ(f.partition().size(), 3U);
}

TEST(GraphOps, ComplementIsAnInvolution) {
  for (const auto& g : testing_support::all_graphs(5)) {
    const auto c = complement(g);
    EXPECT_EQ(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
    EXPECT_EQ(complement(c), g);
  }
}

TEST(GraphOps, UnionAndInducedSubgraph) {
  const auto u = disjoint_union(path(3), cycle(3));
  EXPECT_EQ(u.order(), 6U);
  EXPECT_EQ(u.size(), 5U);
  EXPECT_TRUE(u.adjacent(3, 5));
  EXPECT_FALSE(is_connected(u));
  EXPECT_EQ(induced_subgraph(u, VertexSet(6, {3, 4, 5})), cycle(3));
}

TEST(GraphOps, StructuralPredicates) {
  EXPECT_TRUE(is_bipartite(cycle(6)));
  EXPECT_FALSE(is_bipartite(cycle(5)));
  EXPECT_TRUE(is_tree(star(5)));
  EXPECT_FALSE(is_tree(cycle(4)));
  EXPECT_FALSE(is_tree(disjoint_union(path(2), path(2))));
  EXPECT_TRUE(is_regular(cycle(5)));
  EXPECT_EQ(isolated_vertex_count(disjoint_union(path(3), empty_graph(2))), 2U);
  EXPECT_EQ(max_degree(star(6)), 5U);
  EXPECT_EQ(min_degree(star(6)), 1U);
}

TEST(GraphOps, Distances) {
  EXPECT_EQ(diameter(path(5)), 4U);
  EXPECT_EQ(diameter(cycle(7)), 3U);
  EXPECT_EQ(eccentricity(star(5), 0), 1U);
  const auto split = disjoint_union(path(2), path(2));
  EXPECT_FALSE(diameter_if_connected(split).has_value());
  try {
    diameter(split);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::undefined);
  }
  const auto d = distances_from(split, 0);
  EXPECT_EQ(d[1], 1U);
  EXPECT_FALSE(d[2].has_value());
}
