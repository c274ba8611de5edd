#pragma once

#include <span>
#include <string>
#include <vector>

#include "gpmyc/graph.hpp"

namespace gpmyc {

enum class Role { Base, Twin, Root };

struct RoleTagged {
  Role role;
  int partner;  // base vertex for Base and Twin, -1 for Root
};

/// The Mycielskian of a base graph of order n, under the fixed index
/// scheme: base v -> v, twin v' -> n+v, root -> 2n.
class MycielskiGraph {
 public:
  static constexpr int kMaxBaseOrder = (Graph::kMaxOrder - 1) / 2;

  const Graph& graph() const { return graph_; }
  int base_order() const { return base_n_; }
  int twin(int v) const;
  int root() const { return 2 * base_n_; }
  RoleTagged base_of(int x) const;
  /// G itself: the subgraph induced on the base vertices.
  Graph base_graph() const { return graph_.induced(base_vertices()); }
  VertexSet base_vertices() const { return VertexSet::range(base_n_); }
  VertexSet twin_vertices() const { return VertexSet::range(2 * base_n_) - VertexSet::range(base_n_); }

 private:
  friend MycielskiGraph mycielskian(const Graph& g);
  MycielskiGraph(Graph graph, int base_n) : graph_(std::move(graph)), base_n_(base_n) {}

  Graph graph_;
  int base_n_;
};

/// Throws InvalidArgument when the result would exceed 64 vertices.
MycielskiGraph mycielskian(const Graph& g);

/// Replaces every twin by its base partner. Throws InvalidArgument if the
/// path visits the root, leaves the vertex range, or has a non-adjacent
/// consecutive pair.
std::vector<int> project_path(const MycielskiGraph& m, std::span<const int> path);

struct GeodesicClassification {
  // (a) base pairs with d_G <= 3
  long long short_base_geodesics = 0;
  // (b) base pairs with d_G >= 4
  long long long_expansion_geodesics = 0;
  long long long_root_geodesics = 0;
  // (c) base-twin pairs u, v' with u != v
  long long mixed_expansion_geodesics = 0;
  long long mixed_root_geodesics = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

inline constexpr int kClassificationMaxOrder = 10;

/// Enumerates every geodesic of mu(G) between base/base and base/twin
/// pairs and checks it against the shortest-path classification: short
/// base pairs see exactly the expansions of G-geodesics, far base pairs see
/// length-four expansions or u,w1',root,w2',v, and base/twin pairs see
/// expansions of G-geodesics or u,w',root,v'.
/// Requires a connected G of order <= 10.
GeodesicClassification check_geodesic_classification(const Graph& g);

}  // namespace gpmyc
