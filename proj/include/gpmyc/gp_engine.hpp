#pragma once

#include <string_view>
#include <vector>

#include "gpmyc/graph.hpp"

namespace gpmyc {

enum class Method { Brute, BranchBound, Partition, ClosedForm };

std::string_view to_string(Method m);

/// A general position number together with a maximum witness and the
/// method that produced it. Exact methods guarantee no larger set exists.
struct GpCertificate {
  int value = 0;
  VertexSet witness;
  Method method = Method::BranchBound;
};

/// conflicts(u, v) is the set of vertices c for which {u, v, c} is not in
/// general position: c lies on a u,v-geodesic, or u lies on a v,c-geodesic,
/// or v lies on a u,c-geodesic. Symmetric in (u, v). Built once per graph
/// in O(n^3); afterwards every extension test in the searches is a few
/// word operations.
class GeodesicTables {
 public:
  explicit GeodesicTables(const DistMatrix& d);

  int order() const { return n_; }
  VertexSet conflicts(int u, int v) const { return table_[static_cast<std::size_t>(u) * n_ + v]; }
  /// Vertices strictly inside some u,v-geodesic.
  VertexSet interior(int u, int v) const { return interior_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<VertexSet> table_;
  std::vector<VertexSet> interior_;
};

bool is_general_position(const DistMatrix& d, VertexSet s);
bool is_general_position(const GeodesicTables& t, VertexSet s);

/// Exact gp(G) by branch and bound; the witness is the lexicographically
/// smallest maximum general position set.
GpCertificate gp_number(const Graph& g);

inline constexpr int kSubsetSolverCap = 22;

/// Exact gp(G) by enumerating subsets from the largest cardinality down.
/// Validation oracle only. Throws CapExceeded above order 22.
GpCertificate gp_brute(const Graph& g);

/// Every maximum general position set, sorted lexicographically.
/// Throws CapExceeded above order 22.
std::vector<VertexSet> enumerate_max_gp_sets(const Graph& g);

struct SetResult {
  int value = 0;
  VertexSet witness;
};

inline constexpr int kIndependenceCap = 40;

/// alpha(G) with the lexicographically smallest maximum independent set.
/// Throws CapExceeded above order 40.
SetResult independence_number(const Graph& g);

/// Largest set that is both independent and in general position.
/// Throws CapExceeded above order 22.
SetResult alpha_gp(const Graph& g);

struct MatchingResult {
  int size = 0;
  std::vector<Edge> edges;  // each (u, v) with u < v, sorted
};

/// nu(G) by Edmonds' blossom algorithm.
MatchingResult matching_number(const Graph& g);

}  // namespace gpmyc
