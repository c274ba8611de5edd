#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpmyc/vertex_set.hpp"

namespace gpmyc {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets.
/// Immutable once built.
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  /// Builds the graph with exactly the given edges; duplicates collapse.
  /// Throws InvalidArgument on n outside [1, 64], endpoints out of range or loops.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rejects asymmetric rows and self-loops.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int edge_count() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  /// Graph induced on `keep`, relabelled to 0..|keep|-1 in index order.
  Graph induced(VertexSet keep) const;
  /// Vertex v of this graph becomes vertex perm[v].
  Graph relabeled(std::span<const int> perm) const;
  bool is_complete() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {}

  std::vector<VertexSet> adj_;
};

/// All-pairs hop distances.
class DistMatrix {
 public:
  static constexpr int kUnreachable = -1;

  explicit DistMatrix(const Graph& g);

  int order() const { return n_; }
  /// Hop count, or kUnreachable for vertices in different components.
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
  /// Vertices at distance exactly k from u.
  VertexSet sphere(int u, int k) const;

 private:
  int n_;
  std::vector<int> d_;
};

DistMatrix all_pairs_distances(const Graph& g);

/// True iff w lies on some shortest u,v-path. Always false when u and v are
/// in different components.
bool lies_on_geodesic(const DistMatrix& d, int u, int w, int v);

/// Calls `visit` with every shortest u,v-path (u first). Paths are produced
/// in lexicographic order of their vertex sequences.
void for_each_geodesic(const Graph& g, const DistMatrix& d, int u, int v,
                       const std::function<void(std::span<const int>)>& visit);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Length of a shortest cycle, kInfiniteGirth for forests.
int girth(const Graph& g);

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  bool regular = false;
  std::vector<int> degrees;
};

DegreeProfile degree_profile(const Graph& g);

/// Connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// graph6, short form only (n <= 62).
inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line; an optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Reads a file of graph6 lines, skipping blank lines. Throws IoError/ParseError.
std::vector<Graph> read_graph6_file(const std::string& path);

/// Lexicographically smallest upper-triangle adjacency word over all
/// vertex permutations. Brute force; order capped at 11.
inline constexpr int kCanonicalMaxOrder = 11;
std::uint64_t canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace gpmyc
