#include "gpmyc/mycielski.hpp"

#include <algorithm>
#include <map>

#include "gpmyc/error.hpp"

namespace gpmyc {

int MycielskiGraph::twin(int v) const {
  if (v < 0 || v >= base_n_) throw InvalidArgument("twin: vertex " + std::to_string(v) + " is not a base vertex");
  return base_n_ + v;
}

RoleTagged MycielskiGraph::base_of(int x) const {
  if (x < 0 || x > 2 * base_n_) throw InvalidArgument("base_of: vertex " + std::to_string(x) + " out of range");
  if (x < base_n_) return {Role::Base, x};
  if (x < 2 * base_n_) return {Role::Twin, x - base_n_};
  return {Role::Root, -1};
}

MycielskiGraph mycielskian(const Graph& g) {
  const int n = g.order();
  if (n > MycielskiGraph::kMaxBaseOrder) {
    throw InvalidArgument("mycielskian: base order " + std::to_string(n) + " exceeds " +
                          std::to_string(MycielskiGraph::kMaxBaseOrder));
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(2 * n + 1));
  const int root = 2 * n;
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      rows[u].insert(v);
      rows[u].insert(n + v);
      rows[n + v].insert(u);
    }
    rows[n + u].insert(root);
    rows[root].insert(n + u);
  }
  return MycielskiGraph(Graph::from_adjacency(std::move(rows)), n);
}

std::vector<int> project_path(const MycielskiGraph& m, std::span<const int> path) {
  const Graph& h = m.graph();
  std::vector<int> out;
  out.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const RoleTagged r = m.base_of(path[i]);
    if (r.role == Role::Root) throw InvalidArgument("project_path: path passes through the root");
    if (i > 0 && !h.adjacent(path[i - 1], path[i])) {
      throw InvalidArgument("project_path: consecutive vertices " + std::to_string(path[i - 1]) + " and " +
                            std::to_string(path[i]) + " are not adjacent");
    }
    out.push_back(r.partner);
  }
  return out;
}

namespace {

std::string render(std::span<const int> p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(p[i]);
  }
  return s;
}

// Number of mu(G)-paths with projection q and the given endpoint roles:
// interior vertices may each be base or twin, but two twins are never
// adjacent and the endpoints are fixed.
long long expansion_count(std::span<const int> q, bool last_is_twin) {
  const std::size_t k = q.size();
  // ways[t] = count of prefixes whose current vertex is base (t=0) or twin (t=1)
  long long base = 1;
  long long twin = 0;
  for (std::size_t i = 1; i < k; ++i) {
    const bool forced_twin = i + 1 == k && last_is_twin;
    const bool forced_base = i + 1 == k && !last_is_twin;
    const long long nb = forced_twin ? 0 : base + twin;
    const long long nt = forced_base ? 0 : base;
    base = nb;
    twin = nt;
  }
  return base + twin;
}

}  // namespace

GeodesicClassification check_geodesic_classification(const Graph& g) {
  if (!is_connected(g)) throw InvalidArgument("check_geodesic_classification: graph must be connected");
  if (g.order() > kClassificationMaxOrder) {
    throw CapExceeded("check_geodesic_classification", g.order(), kClassificationMaxOrder);
  }
  const int n = g.order();
  const MycielskiGraph m = mycielskian(g);
  const Graph& h = m.graph();
  const DistMatrix dg(g);
  const DistMatrix dh(h);
  const int root = m.root();
  GeodesicClassification report;

  auto violation = [&](const std::string& what, std::span<const int> p) {
    report.violations.push_back(what + ": " + render(p));
  };
  auto is_g_geodesic = [&](std::span<const int> q) {
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (!g.adjacent(q[i - 1], q[i])) return false;
    }
    return static_cast<int>(q.size()) - 1 == dg.at(q.front(), q.back());
  };
  auto is_g_path = [&](std::span<const int> q) {
    for (std::size_t i = 1; i < q.size(); ++i) {
      if (!g.adjacent(q[i - 1], q[i])) return false;
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = i + 1; j < q.size(); ++j) {
        if (q[i] == q[j]) return false;
      }
    }
    return true;
  };

  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = dg.at(u, v);
      long long seen = 0;
      std::map<std::vector<int>, long long> projections;
      for_each_geodesic(h, dh, u, v, [&](std::span<const int> p) {
        ++seen;
        const bool via_root = std::find(p.begin(), p.end(), root) != p.end();
        if (d <= 3) {
          ++report.short_base_geodesics;
          if (via_root) return violation("(a) short base geodesic through root", p);
          const std::vector<int> q = project_path(m, p);
          if (!is_g_geodesic(q)) return violation("(a) projection is not a G-geodesic", p);
          ++projections[q];
          return;
        }
        if (via_root) {
          ++report.long_root_geodesics;
          const bool shape = p.size() == 5 && p[2] == root && h.adjacent(u, p[1]) && p[1] >= n &&
                             p[3] >= n && h.adjacent(p[3], v);
          if (!shape) violation("(b) root geodesic not of the form u,w1',root,w2',v", p);
          return;
        }
        ++report.long_expansion_geodesics;
        const std::vector<int> q = project_path(m, p);
        if (d != 4 || q.size() != 5 || !is_g_path(q)) violation("(b) not an expansion of a length-4 path", p);
      });
      if (d <= 3) {
        // Conversely, every expansion of every G-geodesic must be a geodesic of mu(G).
        long long expected = 0;
        for_each_geodesic(g, dg, u, v, [&](std::span<const int> q) { expected += expansion_count(q, false); });
        if (expected != seen) {
          report.violations.push_back("(a) pair " + std::to_string(u) + "," + std::to_string(v) + ": " +
                                      std::to_string(seen) + " geodesics in mu(G), " + std::to_string(expected) +
                                      " expansions of G-geodesics");
        }
      }
    }
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const int target = m.twin(v);
      for_each_geodesic(h, dh, u, target, [&](std::span<const int> p) {
        const bool via_root = std::find(p.begin(), p.end(), root) != p.end();
        if (via_root) {
          ++report.mixed_root_geodesics;
          const bool shape = p.size() == 4 && p[1] >= n && p[1] < 2 * n && p[2] == root;
          if (!shape) violation("(c) root geodesic not of the form u,w',root,v'", p);
          return;
        }
        ++report.mixed_expansion_geodesics;
        const std::vector<int> q = project_path(m, p);
        if (!is_g_geodesic(q)) violation("(c) projection is not a u,v-geodesic", p);
      });
    }
  }
  return report;
}

}  // namespace gpmyc
