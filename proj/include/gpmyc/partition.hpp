#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpmyc/graph.hpp"
#include "gpmyc/mycielski.hpp"

namespace gpmyc {

enum class Block : std::uint8_t { V1 = 0, V2 = 1, V3 = 2, V4 = 3 };

/// Four blocks over V(G). In the Mycielskian, V1 keeps vertex and twin,
/// V2 keeps only the twin, V3 only the vertex, V4 neither.
struct MycielskiPartition {
  int order = 0;
  VertexSet v1, v2, v3, v4;

  static MycielskiPartition from_blocks(std::span<const Block> blocks);

  int n1() const { return v1.size(); }
  int n2() const { return v2.size(); }
  int n3() const { return v3.size(); }
  int n4() const { return v4.size(); }
  /// n + n1 - n4, the size of the associated set in mu(G).
  int value() const { return order + n1() - n4(); }
  bool covers() const;
  Block block_of(int v) const;
  std::vector<Block> blocks() const;
  std::string to_string() const;

  bool operator==(const MycielskiPartition&) const = default;
};

enum class PartitionCondition { None, Condition1, Condition2, Condition3 };

std::string_view to_string(PartitionCondition c);

struct PartitionCheck {
  bool valid = false;
  PartitionCondition violated = PartitionCondition::None;
  std::string detail;
};

/// Checks, in order:
///   1. every edge inside V1 u V3 has both ends in V3;
///   2. if u in V1 u V3 has a neighbour v in V2, then d(u,w) = 2 for all
///      w in (V1 u V2) \ {u,v} and d(u,w) <= 3 for all w in V3 \ {u};
///   3. every geodesic of length <= 4 joining two vertices of V1 u V2 u V3
///      through a third one either joins two V2 vertices with length >= 3
///      or, read in one of its two directions, has one of the shapes
///        u0..u4 with u0 in V2, u4 in V1 u V3, u3 not in V1 u V2;
///        u0..u3 with u0, u1 in V2, u3 in V1 u V3;
///        u0..u2 with u0, u1 in V2.
/// Throws InvalidArgument if the blocks do not partition V(G).
PartitionCheck is_mycielski_partition(const Graph& g, const MycielskiPartition& p);

struct PartitionProperties {
  bool v1_independent = false;
  bool v1_v3_edgeless = false;
  bool v1_v2_matching = false;
  std::vector<Edge> v1_v2_edges;  // (u in V1, v in V2), sorted by u

  bool ok() const { return v1_independent && v1_v3_edgeless && v1_v2_matching; }
};

/// V1 independent, no V1-V3 edges, V1-V2 edges pairwise disjoint.
/// Throws InvalidArgument if p is not a valid Mycielski partition.
PartitionProperties partition_derived_properties(const Graph& g, const MycielskiPartition& p);

/// S = V1 u V1' u V2' u V3 in mu(G) index space.
/// Throws InvalidArgument if p is not a valid Mycielski partition of the base graph.
VertexSet gp_set_from_partition(const MycielskiGraph& m, const MycielskiPartition& p);

/// Inverse association. Throws InvalidArgument if S contains the root or is
/// not in general position in mu(G).
MycielskiPartition partition_from_gp_set(const MycielskiGraph& m, VertexSet s);

inline constexpr int kBestPartitionCap = 12;

struct BestPartition {
  int value = 0;
  MycielskiPartition partition;
};

/// Maximum of n + n1 - n4 over all Mycielski partitions, with the
/// lexicographically smallest optimal block assignment (V1 < V2 < V3 < V4,
/// vertex 0 most significant). Rejects complete graphs; order cap 12.
BestPartition best_partition(const Graph& g);

}  // namespace gpmyc
