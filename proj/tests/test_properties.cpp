// Randomised and exhaustive cross-checks between independent implementations.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gpmyc/families.hpp"
#include "gpmyc/gp_engine.hpp"
#include "gpmyc/mycielski.hpp"
#include "test_util.hpp"

namespace gpmyc {
namespace {

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v : g.neighbors(u)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x == kInf) x = DistMatrix::kUnreachable;
  return d;
}

int brute_matching(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  int best = 0;
  // Depth-first over edges, skipping those that touch a used vertex.
  auto go = [&](auto&& self, std::size_t i, VertexSet used, int size) -> void {
    best = std::max(best, size);
    if (size + (g.order() - used.size()) / 2 <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      const auto [u, v] = edges[j];
      if (used.contains(u) || used.contains(v)) continue;
      self(self, j + 1, used | VertexSet{u, v}, size + 1);
    }
  };
  go(go, 0, VertexSet{}, 0);
  return best;
}

TEST(Properties, BfsMatchesFloydWarshall) {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 8));
    const Graph g = random_graph(n, 1, 3, rng);
    const DistMatrix d(g);
    const auto fw = floyd_warshall(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) ASSERT_EQ(d.at(u, v), fw[u][v]) << to_graph6(g);
  }
}

TEST(Properties, GpNumberMatchesBruteOnAllConnectedGraphs) {
  for (const Graph& g : test::connected_upto(7)) {
    const GpCertificate bb = gp_number(g);
    const GpCertificate brute = gp_brute(g);
    ASSERT_EQ(bb.value, brute.value) << to_graph6(g);
    EXPECT_EQ(bb.witness, brute.witness) << to_graph6(g);
    EXPECT_TRUE(is_general_position(DistMatrix(g), bb.witness));
  }
}

TEST(Properties, GpNumberMatchesBruteOnMycielskians) {
  for (const Graph& g : test::connected_upto(5)) {
    const Graph mu = mycielskian(g).graph();
    ASSERT_EQ(gp_number(mu).value, gp_brute(mu).value) << to_graph6(g);
  }
}

TEST(Properties, BlossomMatchesBruteForce) {
  Rng rng(99);
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 12));
    const Graph g = random_graph(n, 1 + static_cast<int>(uniform_below(rng, 3)), 5, rng);
    const MatchingResult m = matching_number(g);
    ASSERT_EQ(m.size, brute_matching(g)) << to_graph6(g);
    VertexSet used;
    for (auto [u, v] : m.edges) {
      EXPECT_TRUE(g.adjacent(u, v));
      EXPECT_FALSE(used.contains(u) || used.contains(v));
      used |= VertexSet{u, v};
    }
  }
}

TEST(Properties, GeneralPositionIsDownwardClosed) {
  Rng rng(5);
  int checked = 0;
  while (checked < 1000) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 9));
    const Graph g = random_connected_graph(n, rng);
    const DistMatrix d(g);
    const GeodesicTables t(d);
    const VertexSet s(rng() & VertexSet::range(n).bits());
    if (!is_general_position(d, s)) continue;
    const VertexSet sub(rng() & s.bits());
    ASSERT_TRUE(is_general_position(d, sub));
    ASSERT_TRUE(is_general_position(t, sub));
    ++checked;
  }
}

TEST(Properties, TablesAgreeWithTripleCheck) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(9, 1, 3, rng);
    const DistMatrix d(g);
    const GeodesicTables t(d);
    for (int k = 0; k < 20; ++k) {
      const VertexSet s(rng() & VertexSet::range(9).bits());
      ASSERT_EQ(is_general_position(d, s), is_general_position(t, s)) << to_graph6(g) << " " << s.to_string();
    }
  }
}

TEST(Properties, TreeStatsInvariantUnderRelabeling) {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 12));
    const Graph t = random_tree(n, rng());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const TreeStats a = tree_stats(t);
    const TreeStats b = tree_stats(t.relabeled(perm));
    EXPECT_EQ(a.leaf_count, b.leaf_count);
    EXPECT_EQ(a.nt_count, b.nt_count);
    EXPECT_EQ(a.interior_count, b.interior_count);
    EXPECT_EQ(a.leaf_spacing, b.leaf_spacing);
  }
}

TEST(Properties, MycielskianCounts) {
  for (const Graph& g : test::connected_upto(6)) {
    const Graph mu = mycielskian(g).graph();
    EXPECT_EQ(mu.order(), 2 * g.order() + 1);
    EXPECT_EQ(mu.edge_count(), 3 * g.edge_count() + g.order());
    if (g.order() >= 2 && girth(g) > 3) {
      EXPECT_GT(girth(mu), 3) << to_graph6(g);
    }
  }
}

TEST(Properties, BaseDistancesCappedAtFour) {
  for (const Graph& g : test::connected_upto(7)) {
    if (g.order() < 2) continue;
    const MycielskiGraph m = mycielskian(g);
    const DistMatrix dg(g);
    const DistMatrix dm(m.graph());
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) ASSERT_EQ(dm.at(u, v), std::min(dg.at(u, v), 4)) << to_graph6(g);
  }
  for (int n = 8; n <= 12; ++n) {
    const MycielskiGraph m = mycielskian(path(n));
    EXPECT_EQ(DistMatrix(m.graph()).at(0, n - 1), 4);
  }
}

TEST(Properties, Graph6RoundTripOnAllFixtures) {
  for (const Graph& g : test::connected_upto(7)) ASSERT_EQ(parse_graph6(to_graph6(g)), g);
}

}  // namespace
}  // namespace gpmyc
