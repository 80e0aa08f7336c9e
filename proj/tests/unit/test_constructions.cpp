#include <gtest/gtest.h>

#include "openpack/constructions.hpp"
#include "openpack/error.hpp"
#include "openpack/isomorphism.hpp"
#include "openpack/products.hpp"
#include "openpack/solvers.hpp"
#include "support.hpp"

using namespace openpack;

TEST(TreeOpp, ValidWithDeltaClasses) {
  for (std::size_t n = 2; n <= 300; n += 7) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto t = random_tree(n, seed);
      const auto f = tree_opp(t);
      ASSERT_TRUE(is_opp(t, f)) << to_graph6(t);
      ASSERT_EQ(f.classes(), max_degree(t)) << to_graph6(t);
    }
  }
}

TEST(TreeOpp, OptimalAgainstSolver) {
  for (std::size_t n = 2; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto t = random_tree(n, seed);
      ASSERT_EQ(tree_opp(t).classes(), open_packing_partition_number(t).colors) << to_graph6(t);
    }
  }
}

TEST(TreeOpp, DeterministicLabels) {
  // Root 0 (first vertex of maximum degree) gets 1; its children 1, 2, 3 take
  // 1, 2, 3; the child 4 of vertex 1 avoids label 1 of the root.
  const auto t = Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
  const auto f = tree_opp(t);
  EXPECT_EQ(std::vector<std::uint32_t>(f.labels().begin(), f.labels().end()),
            (std::vector<std::uint32_t>{1, 1, 2, 3, 2}));
  EXPECT_EQ(tree_opp(path(2)).classes(), 1U);
}

TEST(TreeOpp, RejectsNonTrees) {
  auto code = [](const Graph& g) {
    try {
      tree_opp(g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  EXPECT_EQ(code(cycle(5)), ErrorCode::hypothesis);
  EXPECT_EQ(code(complete(1)), ErrorCode::hypothesis);
  EXPECT_EQ(code(disjoint_union(path(2), path(3))), ErrorCode::hypothesis);
}

TEST(Psi, ConstructionsMeetTheBoundWithEquality) {
  for (auto [r, s] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 4}, {3, 2}, {4, 2}, {3, 4}}) {
    const auto g = psi_graph({r, s});
    EXPECT_EQ(g.order(), r * s);
    EXPECT_TRUE(is_regular(g));
    EXPECT_EQ(max_degree(g), r);
    const auto parts = psi_parts({r, s});
    EXPECT_TRUE(is_psi_partition(g, parts, s));
    EXPECT_TRUE(is_opp(g, parts));
    const auto po = static_cast<std::int64_t>(open_packing_partition_number(g).colors);
    const auto ro = static_cast<std::int64_t>(open_packing_number(g).size);
    EXPECT_EQ(po, static_cast<std::int64_t>(r));
    EXPECT_EQ(ro, static_cast<std::int64_t>(s));
    EXPECT_EQ(po * (po - 1) * ro, 2 * static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()));
    EXPECT_TRUE(psi_membership(g).has_value());
  }
  EXPECT_TRUE(is_isomorphic(psi_graph({2, 2}), cycle(4)));
  EXPECT_THROW(psi_graph({2, 3}), Error);
  EXPECT_THROW(psi_graph({1, 2}), Error);
}

TEST(Psi, MembershipRejectsNonMembers) {
  EXPECT_FALSE(psi_membership(complete(4)).has_value());
  EXPECT_FALSE(psi_membership(cycle(6)).has_value());
  EXPECT_FALSE(psi_membership(path(4)).has_value());
  EXPECT_TRUE(psi_membership(cycle(8)).has_value());
  EXPECT_FALSE(is_psi_partition(cycle(4), VertexLabeling({1, 2, 1, 2}), 2));
}

TEST(NordhausGaddumExtremal, SumEqualsOrder) {
  for (std::size_t k = 3; k <= 8; ++k) {
    const auto g = ng_extremal(k);
    ASSERT_EQ(g.order(), 2 * k);
    const auto sum =
        open_packing_partition_number(g).colors + open_packing_partition_number(complement(g)).colors;
    EXPECT_EQ(sum, 2 * k) << k;
    EXPECT_TRUE(is_isomorphic(g, complete_bipartite(k, k)));
    EXPECT_EQ(ng_pairing(k).classes(), k);
  }
  EXPECT_THROW(ng_extremal(2), Error);
}

TEST(CartesianSharp, InstancesAndPacking) {
  EXPECT_TRUE(is_isomorphic(cart_sharp_instance(1, 3), cartesian(cycle(4), complete(3)).graph));
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{1, 3}, {1, 4}, {2, 3}}) {
    const auto g = cart_sharp_instance(m, n);
    const auto s = cart_sharp_open_packing(m, n);
    EXPECT_TRUE(is_open_packing(g, s));
    EXPECT_EQ(s.size(), 2 * m);
  }
  EXPECT_EQ(open_packing_partition_number(cart_sharp_instance(1, 3)).colors, 6U);
  EXPECT_EQ(open_packing_partition_number(cart_sharp_instance(1, 4)).colors, 8U);
}

TEST(CartesianSharp, LongerCyclesFallBelowTwoN) {
  // The Python oracle (backtracking colouring of the two-step graph) gives
  // p_o(C8 box K3) = 5 and p_o(C8 box K4) = 7; the 2m-vertex packing is not
  // maximum there.
  const auto g = cart_sharp_instance(2, 3);
  EXPECT_EQ(open_packing_partition_number(g).colors, 5U);
  EXPECT_EQ(open_packing_number(g).size, 5U);
  EXPECT_EQ(open_packing_partition_number(cart_sharp_instance(2, 4)).colors, 7U);
}
