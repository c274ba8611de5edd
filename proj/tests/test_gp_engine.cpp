#include <gtest/gtest.h>

#include "gpmyc/error.hpp"
#include "gpmyc/families.hpp"
#include "gpmyc/gp_engine.hpp"
#include "gpmyc/mycielski.hpp"
#include "test_util.hpp"

namespace gpmyc {
namespace {

TEST(GeneralPosition, SmallSetsAlwaysQualify) {
  const DistMatrix d(path(6));
  EXPECT_TRUE(is_general_position(d, VertexSet{}));
  EXPECT_TRUE(is_general_position(d, VertexSet{2}));
  EXPECT_TRUE(is_general_position(d, VertexSet{0, 5}));
}

TEST(GeneralPosition, WholeCliqueQualifies) {
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(is_general_position(DistMatrix(complete(n)), VertexSet::range(n)));
}

TEST(GeneralPosition, PathInteriorFails) {
  const DistMatrix d(path(4));
  EXPECT_FALSE(is_general_position(d, VertexSet{0, 1, 3}));
  EXPECT_FALSE(is_general_position(GeodesicTables(d), VertexSet{0, 1, 3}));
}

TEST(GeneralPosition, TablesAreSymmetric) {
  const GeodesicTables t(DistMatrix(abundant_regular(3)));
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) EXPECT_EQ(t.conflicts(u, v), t.conflicts(v, u));
  }
}

TEST(GpNumber, TreesHaveLeafCount) {
  EXPECT_EQ(gp_number(path(6)).value, 2);
  EXPECT_EQ(gp_number(star(5)).value, 4);
}

TEST(GpNumber, CompleteGraphs) {
  for (int n = 1; n <= 8; ++n) {
    const GpCertificate c = gp_number(complete(n));
    EXPECT_EQ(c.value, n);
    EXPECT_EQ(c.witness, VertexSet::range(n));
    EXPECT_EQ(c.method, Method::BranchBound);
  }
}

TEST(GpNumber, SmallExamples) {
  EXPECT_EQ(gp_number(cycle(5)).value, 3);
  EXPECT_EQ(gp_number(cycle(4)).value, 2);
  EXPECT_EQ(gp_number(complete_minus_edge(4)).value, 3);
  EXPECT_EQ(gp_brute(cycle(5)).value, 3);
  EXPECT_EQ(gp_brute(cycle(4)).value, 2);
  EXPECT_EQ(gp_brute(complete_minus_edge(4)).value, 3);
}

TEST(GpNumber, WitnessIsLexicographicallySmallest) {
  const GpCertificate c = gp_number(cycle(5));
  const std::vector<VertexSet> all = enumerate_max_gp_sets(cycle(5));
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(c.witness, all.front());
  EXPECT_EQ(gp_brute(cycle(5)).witness, c.witness);
}

TEST(GpNumber, DisconnectedGraphs) {
  // Two triangles: no geodesic joins the components, so all six vertices qualify.
  const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(gp_number(g).value, 6);
  EXPECT_EQ(gp_brute(g).value, 6);
}

TEST(GpBrute, CapEnforced) { EXPECT_THROW(gp_brute(path(23)), CapExceeded); }

TEST(MaxGpSets, CompleteMycielskianUnique) {
  const MycielskiGraph m = mycielskian(complete(4));
  const auto sets = enumerate_max_gp_sets(m.graph());
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets.front(), m.base_vertices() | VertexSet::singleton(m.root()));
}

TEST(MaxGpSets, K2MycielskianNotUnique) {
  EXPECT_GT(enumerate_max_gp_sets(mycielskian(complete(2)).graph()).size(), 1u);
}

TEST(MaxGpSets, K2) {
  EXPECT_EQ(enumerate_max_gp_sets(complete(2)), (std::vector<VertexSet>{VertexSet{0, 1}}));
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(cycle(5)).value, 2);
  EXPECT_EQ(independence_number(complete_multipartite({3, 2})).value, 3);
  EXPECT_EQ(independence_number(complete_multipartite({3, 2})).witness, (VertexSet{0, 1, 2}));
  EXPECT_EQ(independence_number(complete_minus_edge(6)).value, 2);
  EXPECT_EQ(independence_number(complete(1)).value, 1);
  EXPECT_THROW(independence_number(path(41)), CapExceeded);
}

TEST(AlphaGp, Examples) {
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(alpha_gp(star(n)).value, n - 1) << n;
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(alpha_gp(complete(n)).value, 1) << n;
  EXPECT_EQ(alpha_gp(cycle(5)).value, 2);
  EXPECT_EQ(alpha_gp(complete_minus_edge(5)).value, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(9, seed);
    EXPECT_GE(alpha_gp(t).value, tree_stats(t).leaf_count);
  }
}

TEST(Matching, Examples) {
  EXPECT_EQ(matching_number(path(4)).size, 2);
  EXPECT_EQ(matching_number(cycle(6)).size, 3);
  EXPECT_EQ(matching_number(star(5)).size, 1);
  EXPECT_EQ(matching_number(complete(1)).size, 0);
  const MatchingResult m = matching_number(cycle(5));
  EXPECT_EQ(m.size, 2);
  EXPECT_EQ(m.edges.size(), 2u);
}

TEST(Matching, BlossomNeeded) {
  // A triangle with a pendant path forces a blossom contraction.
  const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(matching_number(g).size, 3);
}

}  // namespace
}  // namespace gpmyc
