#include "gpmyc/gp_engine.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "gpmyc/error.hpp"

namespace gpmyc {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Brute: return "brute";
    case Method::BranchBound: return "bb";
    case Method::Partition: return "partition";
    case Method::ClosedForm: return "closed";
  }
  return "?";
}

GeodesicTables::GeodesicTables(const DistMatrix& d)
    : n_(d.order()),
      table_(static_cast<std::size_t>(n_) * n_),
      interior_(static_cast<std::size_t>(n_) * n_) {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      VertexSet inside;
      VertexSet bad;
      for (int c = 0; c < n_; ++c) {
        if (c == u || c == v) continue;
        if (lies_on_geodesic(d, u, c, v)) inside.insert(c);
        if (lies_on_geodesic(d, u, c, v) || lies_on_geodesic(d, v, u, c) ||
            lies_on_geodesic(d, u, v, c)) {
          bad.insert(c);
        }
      }
      table_[static_cast<std::size_t>(u) * n_ + v] = bad;
      table_[static_cast<std::size_t>(v) * n_ + u] = bad;
      interior_[static_cast<std::size_t>(u) * n_ + v] = inside;
      interior_[static_cast<std::size_t>(v) * n_ + u] = inside;
    }
  }
}

bool is_general_position(const GeodesicTables& t, VertexSet s) {
  for (int u : s) {
    for (int v : s - VertexSet::range(u + 1)) {
      if (t.interior(u, v).intersects(s)) return false;
    }
  }
  return true;
}

bool is_general_position(const DistMatrix& d, VertexSet s) {
  const std::vector<int> members = s.to_vector();
  for (int u : members) {
    for (int v : members) {
      if (v <= u) continue;
      for (int w : members) {
        if (w != u && w != v && lies_on_geodesic(d, u, w, v)) return false;
      }
    }
  }
  return true;
}

namespace {

// Include-first depth-first search over vertices in index order. Leaves are
// reached in lexicographic order of the chosen sets, so the first set of a
// given size is the lexicographically smallest one of that size.
class GpSearch {
 public:
  GpSearch(const Graph& g, const GeodesicTables& t, bool independent, bool collect_all)
      : graph_(g), tables_(t), independent_(independent), collect_all_(collect_all) {}

  void run() { extend(VertexSet{}, graph_.vertices()); }

  int best_value() const { return best_; }
  VertexSet best_set() const { return best_set_; }
  std::vector<VertexSet>& all_best() { return all_best_; }

 private:
  void extend(VertexSet chosen, VertexSet candidates) {
    const int bound = chosen.size() + candidates.size();
    if (collect_all_ ? bound < best_ : bound <= best_) return;
    if (candidates.empty()) {
      if (chosen.size() > best_) {
        best_ = chosen.size();
        best_set_ = chosen;
        all_best_.clear();
      }
      if (collect_all_) all_best_.push_back(chosen);
      return;
    }
    const int v = candidates.first();
    candidates.erase(v);

    VertexSet with_v = candidates;
    for (int s : chosen) with_v -= tables_.conflicts(s, v);
    if (independent_) with_v -= graph_.neighbors(v);
    VertexSet next = chosen;
    next.insert(v);
    extend(next, with_v);

    extend(chosen, candidates);
  }

  const Graph& graph_;
  const GeodesicTables& tables_;
  bool independent_;
  bool collect_all_;
  int best_ = -1;
  VertexSet best_set_;
  std::vector<VertexSet> all_best_;
};

}  // namespace

GpCertificate gp_number(const Graph& g) {
  const GeodesicTables tables{DistMatrix(g)};
  GpSearch search(g, tables, /*independent=*/false, /*collect_all=*/false);
  search.run();
  return {search.best_value(), search.best_set(), Method::BranchBound};
}

GpCertificate gp_brute(const Graph& g) {
  const int n = g.order();
  if (n > kSubsetSolverCap) throw CapExceeded("gp_brute", n, kSubsetSolverCap);
  // Checks triples straight from the distance matrix, bypassing the
  // conflict tables the branch and bound relies on.
  const DistMatrix d(g);
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (int k = n; k >= 1; --k) {
    bool found = false;
    VertexSet best;
    // Gosper's hack: next integer with the same popcount.
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
      const VertexSet s(mask);
      if (is_general_position(d, s) && (!found || lex_less(s, best))) {
        best = s;
        found = true;
      }
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    if (found) return {k, best, Method::Brute};
  }
  return {0, VertexSet{}, Method::Brute};
}

std::vector<VertexSet> enumerate_max_gp_sets(const Graph& g) {
  const int n = g.order();
  if (n > kSubsetSolverCap) throw CapExceeded("enumerate_max_gp_sets", n, kSubsetSolverCap);
  const GeodesicTables tables{DistMatrix(g)};
  GpSearch search(g, tables, /*independent=*/false, /*collect_all=*/true);
  search.run();
  return std::move(search.all_best());
}

SetResult alpha_gp(const Graph& g) {
  const int n = g.order();
  if (n > kSubsetSolverCap) throw CapExceeded("alpha_gp", n, kSubsetSolverCap);
  const GeodesicTables tables{DistMatrix(g)};
  GpSearch search(g, tables, /*independent=*/true, /*collect_all=*/false);
  search.run();
  return {search.best_value(), search.best_set()};
}

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : graph_(g) {}

  void run() { extend(VertexSet{}, graph_.vertices()); }

  SetResult result() const { return {best_, best_set_}; }

 private:
  // Greedy clique cover of the candidates: an independent set takes at
  // most one vertex per clique.
  int clique_cover_bound(VertexSet candidates) const {
    int cliques = 0;
    while (!candidates.empty()) {
      VertexSet pool = candidates;
      while (!pool.empty()) {
        const int v = pool.first();
        candidates.erase(v);
        pool &= graph_.neighbors(v);
      }
      ++cliques;
    }
    return cliques;
  }

  void extend(VertexSet chosen, VertexSet candidates) {
    if (chosen.size() + candidates.size() <= best_) return;
    if (candidates.empty()) {
      best_ = chosen.size();
      best_set_ = chosen;
      return;
    }
    if (chosen.size() + clique_cover_bound(candidates) <= best_) return;
    const int v = candidates.first();
    candidates.erase(v);
    VertexSet next = chosen;
    next.insert(v);
    extend(next, candidates - graph_.neighbors(v));
    extend(chosen, candidates);
  }

  const Graph& graph_;
  int best_ = -1;
  VertexSet best_set_;
};

}  // namespace

SetResult independence_number(const Graph& g) {
  if (g.order() > kIndependenceCap) throw CapExceeded("independence_number", g.order(), kIndependenceCap);
  IndependentSetSearch search(g);
  search.run();
  return search.result();
}

namespace {

// Edmonds' blossom algorithm, O(n^3): grow alternating trees from each
// exposed vertex, contracting odd cycles onto their base.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.order()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<int> solve() {
    // Greedy warm start.
    for (int u = 0; u < n_; ++u) {
      if (match_[u] != -1) continue;
      for (int v : g_.neighbors(u)) {
        if (match_[v] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

MatchingResult matching_number(const Graph& g) {
  const std::vector<int> mate = Blossom(g).solve();
  MatchingResult result;
  for (int u = 0; u < g.order(); ++u) {
    if (mate[u] > u) result.edges.emplace_back(u, mate[u]);
  }
  result.size = static_cast<int>(result.edges.size());
  return result;
}

}  // namespace gpmyc
