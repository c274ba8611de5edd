#include "gpmyc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>

#include "gpmyc/error.hpp"

namespace gpmyc {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  out += '}';
  return out;
}

namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw InvalidArgument("graph order " + std::to_string(n) + " outside [1, " +
                          std::to_string(Graph::kMaxOrder) + "]");
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InvalidArgument("loop edge at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet universe = VertexSet::range(n);
  for (int u = 0; u < n; ++u) {
    if (!rows[u].is_subset_of(universe)) throw InvalidArgument("adjacency row out of range");
    if (rows[u].contains(u)) throw InvalidArgument("loop edge at vertex " + std::to_string(u));
    for (int v : rows[u]) {
      if (!rows[v].contains(u)) throw InvalidArgument("adjacency is not symmetric");
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(adj_.size(), -1);
  int next = 0;
  for (int v : keep) index[v] = next++;
  std::vector<VertexSet> rows(static_cast<std::size_t>(next));
  for (int v : keep) {
    for (int w : adj_[v] & keep) rows[index[v]].insert(index[w]);
  }
  return from_adjacency(std::move(rows));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw InvalidArgument("permutation size mismatch");
  std::vector<VertexSet> rows(adj_.size());
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) rows[perm[u]].insert(perm[v]);
  }
  return from_adjacency(std::move(rows));
}

bool Graph::is_complete() const {
  const VertexSet all = vertices();
  for (int v = 0; v < order(); ++v) {
    if (adj_[v] != all - VertexSet::singleton(v)) return false;
  }
  return true;
}

DistMatrix::DistMatrix(const Graph& g)
    : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
  for (int s = 0; s < n_; ++s) {
    int* row = &d_[static_cast<std::size_t>(s) * n_];
    row[s] = 0;
    VertexSet seen = VertexSet::singleton(s);
    VertexSet frontier = seen;
    for (int depth = 1; !frontier.empty(); ++depth) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (int v : next) row[v] = depth;
      seen |= next;
      frontier = next;
    }
  }
}

VertexSet DistMatrix::sphere(int u, int k) const {
  VertexSet out;
  for (int v = 0; v < n_; ++v) {
    if (at(u, v) == k) out.insert(v);
  }
  return out;
}

DistMatrix all_pairs_distances(const Graph& g) { return DistMatrix(g); }

bool lies_on_geodesic(const DistMatrix& d, int u, int w, int v) {
  const int uv = d.at(u, v);
  const int uw = d.at(u, w);
  const int wv = d.at(w, v);
  if (uv == DistMatrix::kUnreachable || uw == DistMatrix::kUnreachable ||
      wv == DistMatrix::kUnreachable) {
    return false;
  }
  return uw + wv == uv;
}

void for_each_geodesic(const Graph& g, const DistMatrix& d, int u, int v,
                       const std::function<void(std::span<const int>)>& visit) {
  if (!d.reachable(u, v)) return;
  std::vector<int> path{u};
  path.reserve(static_cast<std::size_t>(d.at(u, v)) + 1);
  // Walk the predecessor DAG towards v: every step must shorten d(., v) by one.
  auto walk = [&](auto&& self, int cur) -> void {
    if (cur == v) {
      visit(path);
      return;
    }
    const int remaining = d.at(cur, v);
    for (int x : g.neighbors(cur)) {
      if (d.at(x, v) != remaining - 1) continue;
      path.push_back(x);
      self(self, x);
      path.pop_back();
    }
  };
  walk(walk, u);
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> depth(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(depth.begin(), depth.end(), -1);
    depth[root] = 0;
    parent[root] = -1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      for (int y : g.neighbors(x)) {
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, depth[x] + depth[y] + 1);
        }
      }
    }
  }
  return best;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  p.regular = p.min_degree == p.max_degree;
  return p;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::singleton(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.order() - 1; }

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  if (line.empty()) throw ParseError("graph6: empty line");
  const int head = static_cast<unsigned char>(line[0]);
  if (head == 126) throw ParseError("graph6: orders above 62 are not supported");
  if (head < 63 || head > 126) throw ParseError("graph6: malformed header byte");
  const int n = head - 63;
  if (n < 1) throw ParseError("graph6: empty graph (n = 0) is not representable");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  const std::string_view body = line.substr(1);
  if (body.size() != byte_count) {
    throw ParseError("graph6: expected " + std::to_string(byte_count) + " data bytes, got " +
                     std::to_string(body.size()));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t k = 0; k < body.size(); ++k) {
    const int c = static_cast<unsigned char>(body[k]);
    if (c < 63 || c > 126) throw ParseError("graph6: data byte out of range");
    const int value = c - 63;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const bool set = (value >> shift) & 1;
      if (bit >= bit_count) {
        if (set) throw ParseError("graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
        int j = 1;
        std::size_t base = 0;
        while (base + static_cast<std::size_t>(j) <= bit) {
          base += static_cast<std::size_t>(j);
          ++j;
        }
        edges.emplace_back(static_cast<int>(bit - base), j);
      }
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw InvalidArgument("graph6: orders above 62 are not supported");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph6 file: " + path);
  std::vector<Graph> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \r\t") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::uint64_t canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) throw CapExceeded("canonical_form", n, kCanonicalMaxOrder);
  const int total = n * (n - 1) / 2;
  const auto slot = [total](int a, int b) {
    if (a > b) std::swap(a, b);
    return total - 1 - (b * (b - 1) / 2 + a);
  };
  const std::vector<Edge> edges = g.edges();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t word = 0;
    for (const auto& [u, v] : edges) word |= std::uint64_t{1} << slot(perm[u], perm[v]);
    best = std::min(best, word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = degree_profile(a).degrees;
  auto db = degree_profile(b).degrees;
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gpmyc
