#include <gtest/gtest.h>

#include <array>

#include "gpmyc/error.hpp"
#include "gpmyc/families.hpp"
#include "gpmyc/gp_engine.hpp"
#include "test_util.hpp"

namespace gpmyc {
namespace {

TEST(Families, SmallCoincidences) {
  EXPECT_EQ(cycle(3), complete(3));
  // Same graph, different labelling: the star puts its centre first.
  EXPECT_TRUE(isomorphic(star(4), complete_multipartite({3, 1})));
  EXPECT_EQ(path(2), complete(2));
  EXPECT_EQ(path(1), complete(1));
}

TEST(Families, KMinusEdge) {
  const Graph g = complete_minus_edge(4);
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_EQ(degree_profile(g).degrees, (std::vector<int>{2, 2, 3, 3}));
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_EQ(complete_minus_edge(3), path(3).relabeled(std::array{0, 2, 1}));
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(independence_number(complete_minus_edge(n)).value, 2) << n;
}

TEST(Families, Multipartite) {
  EXPECT_EQ(complete_multipartite({2, 2}), cycle(4).relabeled(std::array{0, 2, 1, 3}));
  EXPECT_EQ(complete_multipartite({1, 1, 1}), complete(3));
  EXPECT_EQ(independence_number(complete_multipartite({3, 2})).value, 3);
  // Parts are sorted, so order of the argument does not matter.
  EXPECT_EQ(complete_multipartite({2, 3}), complete_multipartite({3, 2}));
  EXPECT_THROW(complete_multipartite({}), InvalidArgument);
  EXPECT_THROW(complete_multipartite({2, 0}), InvalidArgument);
}

TEST(Families, AbundantRegular) {
  EXPECT_TRUE(isomorphic(abundant_regular(2), cycle(5)));
  const Graph g3 = abundant_regular(3);
  EXPECT_EQ(g3.order(), 8);
  EXPECT_TRUE(degree_profile(g3).regular);
  EXPECT_EQ(g3.degree(0), 3);
  const Graph g5 = abundant_regular(5);
  EXPECT_EQ(g5.order(), 14);
  EXPECT_TRUE(degree_profile(g5).regular);
  EXPECT_EQ(g5.degree(0), 5);
  EXPECT_THROW(abundant_regular(1), InvalidArgument);
}

TEST(Families, JoinAlphaK2) {
  EXPECT_EQ(join_alpha_k2(1, 2), complete(3));
  const Graph a2 = join_alpha_k2(2, 2);
  EXPECT_EQ(a2.order(), 5);
  EXPECT_EQ(independence_number(a2).value, 2);
  EXPECT_EQ(degree_profile(a2).min_degree, 2);
  const Graph a3 = join_alpha_k2(3, 3);
  EXPECT_EQ(a3.order(), 8);
  EXPECT_EQ(degree_profile(a3).min_degree, 3);
  EXPECT_EQ(independence_number(a3).value, 3);
}

TEST(Families, CliqueWithLeaf) {
  const Graph g = clique_with_leaf(6);
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.edge_count(), 11);
  EXPECT_EQ(g.degree(5), 1);
  EXPECT_TRUE(g.adjacent(0, 5));
}

TEST(RandomTree, SmallOrdersAndDeterminism) {
  EXPECT_EQ(random_tree(1, 7), complete(1));
  EXPECT_EQ(random_tree(2, 7), complete(2));
  EXPECT_EQ(random_tree(8, 42), random_tree(8, 42));
  for (std::uint64_t seed = 0; seed < 50; ++seed) EXPECT_TRUE(is_tree(random_tree(10, seed)));
}

TEST(RandomGraph, ConnectedAndNonComplete) {
  Rng a(5), b(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = random_connected_graph(8, a);
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(g.is_complete());
    EXPECT_EQ(g, random_connected_graph(8, b));
  }
}

TEST(UniformBelow, StaysInRange) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, 7), 7u);
  EXPECT_THROW(uniform_below(rng, 0), InvalidArgument);
}

TEST(SpacedTree, Examples) {
  const std::array one{1, 1};
  const TreeStats p4 = tree_stats(spaced_tree(2, one, 1));
  EXPECT_EQ(p4.leaf_spacing, 3);

  const std::array two{2, 2};
  const Graph t = spaced_tree(2, two, 3);
  EXPECT_EQ(t.order(), 8);
  const TreeStats s = tree_stats(t);
  EXPECT_EQ(s.leaf_spacing, 5);
  EXPECT_EQ(s.leaf_count, 4);
  EXPECT_EQ(s.nt_count, 2);

  const std::array three{1, 1, 1};
  const TreeStats u = tree_stats(spaced_tree(3, three, 3));
  EXPECT_EQ(u.leaf_count, 3);
  EXPECT_EQ(u.nt_count, 3);
}

TEST(TreeStats, PathAndStar) {
  const TreeStats p = tree_stats(path(5));
  EXPECT_EQ(p.leaf_count, 2);
  EXPECT_EQ(p.nt_count, 2);
  EXPECT_EQ(p.interior_count, 1);
  EXPECT_EQ(p.leaf_spacing, 4);
  const TreeStats s = tree_stats(star(6));
  EXPECT_EQ(s.leaf_count, 5);
  EXPECT_EQ(s.nt_count, 1);
  EXPECT_EQ(s.leaf_spacing, kUndefinedSpacing);
}

TEST(TreeStats, RejectsNonTrees) {
  EXPECT_THROW(tree_stats(cycle(4)), InvalidArgument);
  EXPECT_THROW(tree_stats(complete(1)), InvalidArgument);
}

}  // namespace
}  // namespace gpmyc
