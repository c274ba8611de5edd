#include "gpmyc/families.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "gpmyc/error.hpp"

namespace gpmyc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star(int n) {
  require(n >= 2, "star: n must be >= 2");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph complete_minus_edge(int n) {
  require(n >= 2, "complete_minus_edge: n must be >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph complete_multipartite(std::vector<int> parts) {
  require(parts.size() >= 2, "complete_multipartite: needs at least two parts");
  for (int r : parts) require(r >= 1, "complete_multipartite: part sizes must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<int> part_of;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) part_of.insert(part_of.end(), parts[i], i);
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph abundant_regular(int d) {
  require(d >= 2, "abundant_regular: d must be >= 2");
  const int n = 3 * d - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < d; ++i) {
    for (int j = 2 * d; j < n; ++j) edges.emplace_back(i, j);
  }
  for (int i = d; i < 2 * d; ++i) {
    for (int j = i + 1; j < 2 * d; ++j) edges.emplace_back(i, j);
  }
  for (int i = 0; i < d; ++i) edges.emplace_back(i, d + i);
  return Graph(n, edges);
}

Graph join_alpha_k2(int pairs, int min_degree) {
  require(pairs >= 1, "join_alpha_k2: pairs must be >= 1");
  require(min_degree >= 2, "join_alpha_k2: min_degree must be >= 2");
  const int n = 2 * pairs + min_degree - 1;
  std::vector<Edge> edges;
  for (int i = 0; i < pairs; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  for (int c = 2 * pairs; c < n; ++c) {
    for (int v = 0; v < c; ++v) edges.emplace_back(v, c);
  }
  return Graph(n, edges);
}

Graph clique_with_leaf(int n) {
  require(n >= 3, "clique_with_leaf: n must be >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n - 1; ++u) {
    for (int v = u + 1; v < n - 1; ++v) edges.emplace_back(u, v);
  }
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("uniform_below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree: n must be >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});
  Rng rng(seed);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph random_graph(int n, int numerator, int denominator, Rng& rng) {
  require(denominator > 0 && numerator >= 0 && numerator <= denominator,
          "random_graph: probability must lie in [0, 1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_below(rng, static_cast<std::uint64_t>(denominator)) <
          static_cast<std::uint64_t>(numerator)) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(int n, Rng& rng, bool non_complete) {
  require(n >= 1, "random_connected_graph: n must be >= 1");
  require(!(non_complete && n < 3), "random_connected_graph: no connected non-complete graph below order 3");
  for (;;) {
    // Density between 20% and 80%.
    const int percent = 20 + static_cast<int>(uniform_below(rng, 61));
    Graph g = random_graph(n, percent, 100, rng);
    if (!is_connected(g)) continue;
    if (non_complete && g.is_complete()) continue;
    return g;
  }
}

Graph spaced_tree(int nt_count, std::span<const int> leaves_per_nt, int spine_gap) {
  require(nt_count >= 2, "spaced_tree: needs at least two NT vertices");
  require(static_cast<int>(leaves_per_nt.size()) == nt_count,
          "spaced_tree: one leaf count per NT vertex");
  require(spine_gap >= 1, "spaced_tree: spine gap must be >= 1");
  for (int c : leaves_per_nt) require(c >= 1, "spaced_tree: every NT vertex needs a leaf");
  const int spine = (nt_count - 1) * spine_gap + 1;
  int n = spine;
  for (int c : leaves_per_nt) n += c;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
  int next = spine;
  for (int i = 0; i < nt_count; ++i) {
    for (int k = 0; k < leaves_per_nt[i]; ++k) edges.emplace_back(i * spine_gap, next++);
  }
  return Graph(n, edges);
}

TreeStats tree_stats(const Graph& g) {
  require(g.order() >= 2 && is_tree(g), "tree_stats: input must be a tree of order >= 2");
  TreeStats s;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) s.leaves.insert(v);
  }
  for (int v = 0; v < g.order(); ++v) {
    if (!s.leaves.contains(v) && g.neighbors(v).intersects(s.leaves)) s.nt_vertices.insert(v);
  }
  s.leaf_count = s.leaves.size();
  s.nt_count = s.nt_vertices.size();
  s.interior_count = g.order() - s.leaf_count - s.nt_count;
  if (s.nt_count >= 2) {
    const DistMatrix d(g);
    int best = std::numeric_limits<int>::max();
    for (int a : s.leaves) {
      for (int b : s.leaves) {
        if (a < b && g.neighbors(a) != g.neighbors(b)) best = std::min(best, d.at(a, b));
      }
    }
    s.leaf_spacing = best;
  }
  return s;
}

}  // namespace gpmyc
