#include <gtest/gtest.h>

#include "gpmyc/error.hpp"
#include "gpmyc/families.hpp"
#include "gpmyc/graph.hpp"
#include "test_util.hpp"

namespace gpmyc {
namespace {

TEST(Graph, TriangleHasEveryDegreeTwo) {
  const Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(g.is_complete());
  EXPECT_EQ(g.edge_count(), 3);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
}

TEST(Graph, SingleEdgeIsK2) {
  const Graph g(2, {{0, 1}});
  EXPECT_EQ(g, complete(2));
}

TEST(Graph, PathDegreeSequence) {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(degree_profile(g).degrees, (std::vector<int>{1, 2, 2, 1}));
}

TEST(Graph, RejectsLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{1, 1}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(0, {}), InvalidArgument);
  EXPECT_THROW(Graph(65, {}), InvalidArgument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(Graph, FromAdjacencyRejectsAsymmetry) {
  EXPECT_THROW(Graph::from_adjacency({VertexSet{1}, VertexSet{}}), InvalidArgument);
  EXPECT_THROW(Graph::from_adjacency({VertexSet{0}}), InvalidArgument);
}

TEST(Graph6, BwIsTriangle) {
  EXPECT_EQ(parse_graph6("Bw"), complete(3));
  EXPECT_EQ(to_graph6(complete(3)), "Bw");
}

TEST(Graph6, SingleVertex) {
  const Graph g = parse_graph6("@");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_EQ(to_graph6(g), "@");
}

TEST(Graph6, HeaderAndTrailingWhitespaceAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete(3));
}

TEST(Graph6, MalformedInputs) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("B"), ParseError);    // missing data byte
  EXPECT_THROW(parse_graph6("Bww"), ParseError);  // one byte too many
  EXPECT_THROW(parse_graph6("B\x7f"), ParseError);
  EXPECT_THROW(parse_graph6("Bx"), ParseError);  // nonzero padding bits
}

TEST(Graph6, RoundTripsCubicCorpus) {
  for (int n = 4; n <= 10; n += 2) {
    for (const Graph& g : read_graph6_file(test::fixture("cubic_n" + std::to_string(n) + ".g6"))) {
      EXPECT_EQ(parse_graph6(to_graph6(g)), g);
      EXPECT_TRUE(degree_profile(g).regular);
      EXPECT_EQ(g.degree(0), 3);
    }
  }
}

TEST(Graph6, MissingFileIsIoError) {
  EXPECT_THROW(read_graph6_file("/nonexistent/graphs.g6"), IoError);
}

TEST(Distances, Pentagon) {
  const DistMatrix d(cycle(5));
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      if (u != v) {
        EXPECT_TRUE(d.at(u, v) == 1 || d.at(u, v) == 2);
      }
    }
  }
  EXPECT_EQ(d.at(0, 2), 2);
}

TEST(Distances, PathEnds) { EXPECT_EQ(DistMatrix(path(4)).at(0, 3), 3); }

TEST(Distances, IsolatedVertexUnreachable) {
  const DistMatrix d(Graph(4, {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(d.at(0, 3), DistMatrix::kUnreachable);
  EXPECT_FALSE(d.reachable(3, 1));
  EXPECT_EQ(d.at(3, 3), 0);
}

TEST(Geodesic, PathInteriorVertex) {
  const DistMatrix d(path(4));
  EXPECT_TRUE(lies_on_geodesic(d, 0, 1, 3));
  EXPECT_TRUE(lies_on_geodesic(d, 0, 0, 3));  // endpoints lie on their own geodesic
}

TEST(Geodesic, PentagonAvoidsLongWayRound) {
  EXPECT_FALSE(lies_on_geodesic(DistMatrix(cycle(5)), 0, 1, 3));
}

TEST(Geodesic, OtherComponentNeverOnGeodesic) {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const DistMatrix d(g);
  EXPECT_FALSE(lies_on_geodesic(d, 0, 3, 2));
  EXPECT_FALSE(lies_on_geodesic(d, 0, 1, 4));
}

TEST(Geodesic, EnumeratesAllShortestPathsInOrder) {
  const Graph g = cycle(6);
  const DistMatrix d(g);
  std::vector<std::vector<int>> paths;
  for_each_geodesic(g, d, 0, 3, [&](std::span<const int> p) { paths.emplace_back(p.begin(), p.end()); });
  EXPECT_EQ(paths, (std::vector<std::vector<int>>{{0, 1, 2, 3}, {0, 5, 4, 3}}));
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(cycle(6)), 6);
  EXPECT_EQ(girth(complete(4)), 3);
  EXPECT_EQ(girth(path(7)), kInfiniteGirth);
  EXPECT_EQ(girth(star(5)), kInfiniteGirth);
  EXPECT_EQ(girth(Graph(1, {})), kInfiniteGirth);
}

TEST(DegreeProfile, Examples) {
  const DegreeProfile c = degree_profile(cycle(7));
  EXPECT_EQ(c.min_degree, 2);
  EXPECT_EQ(c.max_degree, 2);
  EXPECT_TRUE(c.regular);
  const DegreeProfile s = degree_profile(star(5));
  EXPECT_EQ(s.min_degree, 1);
  EXPECT_EQ(s.max_degree, 4);
  EXPECT_FALSE(s.regular);
  const DegreeProfile g3 = degree_profile(abundant_regular(3));
  EXPECT_EQ(g3.min_degree, 3);
  EXPECT_TRUE(g3.regular);
}

TEST(Components, Examples) {
  EXPECT_TRUE(is_connected(cycle(5)));
  EXPECT_EQ(components(cycle(5)).size(), 1u);
  const Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto parts = components(two);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(parts[1], (VertexSet{3, 4, 5}));
  EXPECT_TRUE(is_connected(Graph(1, {})));
  EXPECT_TRUE(has_isolated_vertex(Graph(3, {{0, 1}})));
  EXPECT_TRUE(is_tree(star(4)));
  EXPECT_FALSE(is_tree(cycle(4)));
}

TEST(Canonical, IsomorphismUnderRelabeling) {
  const Graph g = abundant_regular(3);
  const std::vector<int> perm{7, 3, 0, 5, 1, 6, 2, 4};
  EXPECT_TRUE(isomorphic(g, g.relabeled(perm)));
  EXPECT_FALSE(isomorphic(cycle(6), Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
  EXPECT_THROW(canonical_form(complete(12)), CapExceeded);
}

}  // namespace
}  // namespace gpmyc
