#include "gpmyc/partition.hpp"

#include <algorithm>

#include "gpmyc/error.hpp"
#include "gpmyc/gp_engine.hpp"

namespace gpmyc {

MycielskiPartition MycielskiPartition::from_blocks(std::span<const Block> blocks) {
  MycielskiPartition p;
  p.order = static_cast<int>(blocks.size());
  for (int v = 0; v < p.order; ++v) {
    switch (blocks[v]) {
      case Block::V1: p.v1.insert(v); break;
      case Block::V2: p.v2.insert(v); break;
      case Block::V3: p.v3.insert(v); break;
      case Block::V4: p.v4.insert(v); break;
    }
  }
  return p;
}

bool MycielskiPartition::covers() const {
  const VertexSet all = v1 | v2 | v3 | v4;
  return all == VertexSet::range(order) && n1() + n2() + n3() + n4() == order;
}

Block MycielskiPartition::block_of(int v) const {
  if (v1.contains(v)) return Block::V1;
  if (v2.contains(v)) return Block::V2;
  if (v3.contains(v)) return Block::V3;
  return Block::V4;
}

std::vector<Block> MycielskiPartition::blocks() const {
  std::vector<Block> out(static_cast<std::size_t>(order));
  for (int v = 0; v < order; ++v) out[v] = block_of(v);
  return out;
}

std::string MycielskiPartition::to_string() const {
  return "V1=" + v1.to_string() + " V2=" + v2.to_string() + " V3=" + v3.to_string() + " V4=" + v4.to_string();
}

std::string_view to_string(PartitionCondition c) {
  switch (c) {
    case PartitionCondition::None: return "none";
    case PartitionCondition::Condition1: return "condition 1";
    case PartitionCondition::Condition2: return "condition 2";
    case PartitionCondition::Condition3: return "condition 3";
  }
  return "?";
}

namespace {

bool in13(Block b) { return b == Block::V1 || b == Block::V3; }
bool in12(Block b) { return b == Block::V1 || b == Block::V2; }
bool in123(Block b) { return b != Block::V4; }

// One geodesic shape, read from q[0]. Length is q.size() - 1.
bool permitted_shape(std::span<const int> q, std::span<const Block> b) {
  switch (q.size()) {
    case 5: return b[q[0]] == Block::V2 && in13(b[q[4]]) && !in12(b[q[3]]);
    case 4: return b[q[0]] == Block::V2 && b[q[1]] == Block::V2 && in13(b[q[3]]);
    case 3: return b[q[0]] == Block::V2 && b[q[1]] == Block::V2;
    default: return false;
  }
}

// The three conditions compiled into flat constraint lists over G. Each
// constraint is filed under the largest vertex it mentions, so a search
// that assigns vertices in index order can test it the moment it becomes
// decidable.
class PartitionConstraints {
 public:
  explicit PartitionConstraints(const Graph& g)
      : n_(g.order()),
        edges_by_last_(static_cast<std::size_t>(n_)),
        triples_by_last_(static_cast<std::size_t>(n_)),
        paths_by_last_(static_cast<std::size_t>(n_)) {
    const DistMatrix d(g);
    for (const Edge& e : g.edges()) edges_by_last_[e.second].push_back(e);

    for (int u = 0; u < n_; ++u) {
      for (int v : g.neighbors(u)) {
        for (int w = 0; w < n_; ++w) {
          if (w == u || w == v || d.at(u, w) == 2) continue;
          const bool far = !d.reachable(u, w) || d.at(u, w) > 3;
          triples_by_last_[std::max({u, v, w})].push_back({u, v, w, far});
        }
      }
    }

    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (!d.reachable(u, v) || d.at(u, v) < 2 || d.at(u, v) > 4) continue;
        for_each_geodesic(g, d, u, v, [&](std::span<const int> p) {
          const int id = static_cast<int>(paths_.size());
          paths_.emplace_back(p.begin(), p.end());
          paths_by_last_[*std::max_element(p.begin(), p.end())].push_back(id);
        });
      }
    }
  }

  int order() const { return n_; }

  bool condition1_holds(const Edge& e, std::span<const Block> b) const {
    const auto [x, y] = e;
    return !(in13(b[x]) && in13(b[y])) || (b[x] == Block::V3 && b[y] == Block::V3);
  }

  struct Triple {
    int u, v, w;
    bool far;  // d(u,w) > 3 or unreachable; d(u,w) != 2 always
  };

  bool condition2_holds(const Triple& t, std::span<const Block> b) const {
    if (!in13(b[t.u]) || b[t.v] != Block::V2) return true;
    if (in12(b[t.w])) return false;
    return !(b[t.w] == Block::V3 && t.far);
  }

  bool condition3_holds(std::span<const int> p, std::span<const Block> b) const {
    if (!in123(b[p.front()]) || !in123(b[p.back()])) return true;
    bool third = false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) third = third || in123(b[p[i]]);
    if (!third) return true;
    if (b[p.front()] == Block::V2 && b[p.back()] == Block::V2 && p.size() >= 4) return true;
    if (permitted_shape(p, b)) return true;
    std::vector<int> reversed(p.rbegin(), p.rend());
    return permitted_shape(reversed, b);
  }

  /// All constraints whose largest vertex is `last`.
  bool holds_at(int last, std::span<const Block> b) const {
    for (const Edge& e : edges_by_last_[last]) {
      if (!condition1_holds(e, b)) return false;
    }
    for (const Triple& t : triples_by_last_[last]) {
      if (!condition2_holds(t, b)) return false;
    }
    for (int id : paths_by_last_[last]) {
      if (!condition3_holds(paths_[id], b)) return false;
    }
    return true;
  }

  PartitionCheck check(std::span<const Block> b) const {
    auto render = [](std::span<const int> p) {
      std::string s;
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "-" : "") + std::to_string(p[i]);
      return s;
    };
    for (const auto& bucket : edges_by_last_) {
      for (const Edge& e : bucket) {
        if (!condition1_holds(e, b)) {
          return {false, PartitionCondition::Condition1,
                  "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) + " inside V1 u V3"};
        }
      }
    }
    for (const auto& bucket : triples_by_last_) {
      for (const Triple& t : bucket) {
        if (!condition2_holds(t, b)) {
          return {false, PartitionCondition::Condition2,
                  "u=" + std::to_string(t.u) + " has V2 neighbour " + std::to_string(t.v) + ", bad distance to " +
                      std::to_string(t.w)};
        }
      }
    }
    for (const auto& path : paths_) {
      if (!condition3_holds(path, b)) {
        return {false, PartitionCondition::Condition3, "geodesic " + render(path)};
      }
    }
    return {true, PartitionCondition::None, ""};
  }

 private:
  int n_;
  std::vector<std::vector<Edge>> edges_by_last_;
  std::vector<std::vector<Triple>> triples_by_last_;
  std::vector<std::vector<int>> paths_by_last_;
  std::vector<std::vector<int>> paths_;
};

void require_cover(const Graph& g, const MycielskiPartition& p) {
  if (p.order != g.order() || !p.covers()) {
    throw InvalidArgument("partition blocks do not partition the vertex set: " + p.to_string());
  }
}

}  // namespace

PartitionCheck is_mycielski_partition(const Graph& g, const MycielskiPartition& p) {
  require_cover(g, p);
  const std::vector<Block> b = p.blocks();
  return PartitionConstraints(g).check(b);
}

PartitionProperties partition_derived_properties(const Graph& g, const MycielskiPartition& p) {
  const PartitionCheck check = is_mycielski_partition(g, p);
  if (!check.valid) throw InvalidArgument("not a Mycielski partition (" + std::string(to_string(check.violated)) + ")");
  PartitionProperties out;
  out.v1_independent = true;
  out.v1_v3_edgeless = true;
  for (int u : p.v1) {
    if (g.neighbors(u).intersects(p.v1)) out.v1_independent = false;
    if (g.neighbors(u).intersects(p.v3)) out.v1_v3_edgeless = false;
    for (int v : g.neighbors(u) & p.v2) out.v1_v2_edges.emplace_back(u, v);
  }
  VertexSet touched;
  out.v1_v2_matching = true;
  for (const auto& [u, v] : out.v1_v2_edges) {
    if (touched.contains(u) || touched.contains(v)) out.v1_v2_matching = false;
    touched.insert(u);
    touched.insert(v);
  }
  return out;
}

VertexSet gp_set_from_partition(const MycielskiGraph& m, const MycielskiPartition& p) {
  const PartitionCheck check = is_mycielski_partition(m.base_graph(), p);
  if (!check.valid) throw InvalidArgument("not a Mycielski partition (" + std::string(to_string(check.violated)) + ")");
  const int n = m.base_order();
  const VertexSet twins_of_1_2(((p.v1 | p.v2).bits()) << n);
  return p.v1 | twins_of_1_2 | p.v3;
}

MycielskiPartition partition_from_gp_set(const MycielskiGraph& m, VertexSet s) {
  if (s.contains(m.root())) throw InvalidArgument("partition_from_gp_set: set contains the root");
  if (!s.is_subset_of(m.graph().vertices())) throw InvalidArgument("partition_from_gp_set: set out of range");
  if (!is_general_position(DistMatrix(m.graph()), s)) {
    throw InvalidArgument("partition_from_gp_set: set is not in general position");
  }
  const int n = m.base_order();
  const VertexSet base = s & m.base_vertices();
  const VertexSet twins((s & m.twin_vertices()).bits() >> n);
  MycielskiPartition p;
  p.order = n;
  p.v1 = base & twins;
  p.v2 = twins - base;
  p.v3 = base - twins;
  p.v4 = VertexSet::range(n) - base - twins;
  return p;
}

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const PartitionConstraints& c, int n)
      : constraints_(c), n_(n), blocks_(static_cast<std::size_t>(n)), best_value_(n) {}

  void run() { assign(0, 0, 0); }

  bool found() const { return found_; }
  int best_value() const { return best_value_; }
  const std::vector<Block>& best_blocks() const { return best_blocks_; }

 private:
  // The all-V2 partition is always valid with value n, so the search only
  // needs to look for assignments reaching at least n. Prune strictly below
  // the incumbent so the first optimum met is the lexicographically smallest.
  void assign(int v, int n1, int n4) {
    if (n_ + n1 - n4 + (n_ - v) < best_value_) return;
    if (v == n_) {
      const int value = n_ + n1 - n4;
      if (value > best_value_ || !found_) {
        best_value_ = value;
        best_blocks_ = blocks_;
        found_ = true;
      }
      return;
    }
    for (Block b : {Block::V1, Block::V2, Block::V3, Block::V4}) {
      blocks_[v] = b;
      if (!constraints_.holds_at(v, blocks_)) continue;
      assign(v + 1, n1 + (b == Block::V1), n4 + (b == Block::V4));
    }
  }

  const PartitionConstraints& constraints_;
  int n_;
  std::vector<Block> blocks_;
  int best_value_;
  bool found_ = false;
  std::vector<Block> best_blocks_;
};

}  // namespace

BestPartition best_partition(const Graph& g) {
  if (g.is_complete()) {
    throw InvalidArgument("best_partition: complete graphs are excluded; gp(mu(K_n)) = n + 1 in closed form");
  }
  if (g.order() > kBestPartitionCap) throw CapExceeded("best_partition", g.order(), kBestPartitionCap);
  const PartitionConstraints constraints(g);
  PartitionSearch search(constraints, g.order());
  search.run();
  return {search.best_value(), MycielskiPartition::from_blocks(search.best_blocks())};
}

}  // namespace gpmyc
