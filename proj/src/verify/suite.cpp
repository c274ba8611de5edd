#include "gpmyc/verify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <thread>

#include "gpmyc/bounds.hpp"
#include "gpmyc/error.hpp"
#include "gpmyc/mycielski.hpp"
#include "gpmyc/partition.hpp"
#include "gpmyc/verify/family_spec.hpp"

#ifndef GPMYC_FIXTURE_DIR
#define GPMYC_FIXTURE_DIR "tests/fixtures"
#endif

namespace gpmyc::verify {

std::string default_fixture_dir() { return GPMYC_FIXTURE_DIR; }

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

using Computed = std::vector<std::pair<std::string, long long>>;
using Sink = std::vector<TheoremRecord>;

void emit(Sink& out, std::string_view theorem, std::string instance, std::string graph, Relation rel,
          long long expected, Computed computed, const Stopwatch& sw, std::string note = {}) {
  TheoremRecord r;
  r.theorem = theorem;
  r.instance = std::move(instance);
  r.graph = std::move(graph);
  r.relation = rel;
  r.expected = expected;
  r.computed = std::move(computed);
  r.wall_ms = sw.ms();
  r.note = std::move(note);
  r.settle();
  out.push_back(std::move(r));
}

std::string mu_label(const std::string& name) { return "mu(" + name + ")"; }

// gp(mu(G)) by every applicable method: branch and bound always, the
// partition search for non-complete bases within its cap, and the closed
// form when asked (-1 when no formula is recognised).
Computed mu_methods(SuiteContext& ctx, const Graph& g, bool with_closed) {
  Computed c{{"bb", ctx.gp_mu(g).value}};
  if (!g.is_complete() && g.order() <= kBestPartitionCap) c.emplace_back("partition", best_partition(g).value);
  if (with_closed) {
    const auto form = closed_form(g);
    c.emplace_back("closed", form ? form->value : -1);
  }
  return c;
}

void family_check(SuiteContext& ctx, Sink& out, std::string_view theorem, const std::string& spec, long long expected,
                  bool with_closed) {
  const Stopwatch sw;
  const Graph g = parse_family(spec);
  emit(out, theorem, mu_label(display_name(spec)), spec, Relation::Eq, expected, mu_methods(ctx, g, with_closed), sw);
}

std::vector<Graph> random_trees(Rng& rng, int count, int min_n, int max_n) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = min_n + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - min_n + 1)));
    out.push_back(random_tree(n, rng()));
  }
  return out;
}

// Every caterpillar from spaced_tree with D_T >= 5 and order <= 10.
std::vector<std::string> spaced_tree_specs() {
  std::vector<std::string> specs;
  for (int gap = 3; gap <= 7; ++gap) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        if (gap + 1 + a + b > 10) continue;
        specs.push_back("spacedtree:2,[" + std::to_string(a) + "," + std::to_string(b) + "]," + std::to_string(gap));
      }
    }
  }
  specs.push_back("spacedtree:3,[1,1,1],3");
  return specs;
}

void integer_partitions(int n, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int r = std::min(n, max_part); r >= 1; --r) {
    prefix.push_back(r);
    integer_partitions(n - r, r, prefix, out);
    prefix.pop_back();
  }
}

// Universal x, six leaves on x, and four independent vertices matched to
// u1..u4, where the u's carry the edges u1u2, u2u3, u3u4, u3u1.
Graph universal_leaves_example() {
  std::vector<Edge> edges;
  for (int v = 1; v < 15; ++v) edges.emplace_back(0, v);
  for (int i = 0; i < 4; ++i) edges.emplace_back(7 + i, 11 + i);
  for (auto [a, b] : {Edge{11, 12}, Edge{12, 13}, Edge{13, 14}, Edge{13, 11}}) edges.emplace_back(a, b);
  return Graph(15, edges);
}

// x joined to three independent vertices, each matched into a triangle.
Graph leafless_example() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {5, 6}, {4, 6}};
  return Graph(7, edges);
}

// ---------------------------------------------------------------------------

void run_complete(SuiteContext& ctx, Sink& out) {
  for (int n = 2; n <= 8; ++n) family_check(ctx, out, "cor.complete", "complete:" + std::to_string(n), n + 1, true);
  for (int n = 2; n <= 8; ++n) {
    const Stopwatch sw;
    const MycielskiGraph m = mycielskian(complete(n));
    const std::vector<VertexSet> sets = enumerate_max_gp_sets(m.graph());
    const VertexSet expected = m.base_vertices() | VertexSet::singleton(m.root());
    const std::string label = "gp-sets of mu(K_" + std::to_string(n) + ")";
    const long long count = static_cast<long long>(sets.size());
    if (n == 2) {
      emit(out, "cor.complete", label, "complete:2", Relation::Ge, 2, {{"count", count}}, sw,
           "mu(K_2) = C_5 has several gp-sets");
    } else {
      const bool is_v_root = sets.size() == 1 && sets.front() == expected;
      emit(out, "cor.complete", label, "complete:" + std::to_string(n), Relation::Eq, 1,
           {{"count", count}, {"equals V+root", is_v_root ? 1 : 0}}, sw);
    }
  }
}

void run_root_iff_complete(SuiteContext& ctx, Sink& out) {
  const int top = std::min(ctx.options().max_n, 6);
  for (int n = 3; n <= top; ++n) {
    for (const Graph& g : ctx.connected(n)) {
      const Stopwatch sw;
      const MycielskiGraph m = mycielskian(g);
      const std::vector<VertexSet> sets = enumerate_max_gp_sets(m.graph());
      const bool in_all = std::all_of(sets.begin(), sets.end(), [&](VertexSet s) { return s.contains(m.root()); });
      const std::string g6 = to_graph6(g);
      emit(out, "lem.root-iff-complete", mu_label(g6), g6, Relation::Eq, g.is_complete() ? 1 : 0,
           {{"root in every gp-set", in_all ? 1 : 0}}, sw, std::to_string(sets.size()) + " gp-sets");
    }
  }
}

void run_geodesics(SuiteContext& ctx, Sink& out) {
  const int top = std::min(ctx.options().max_n, kClassificationMaxOrder);
  for (int n = 2; n <= top; ++n) {
    for (const Graph& g : ctx.connected(n)) {
      const Stopwatch sw;
      const GeodesicClassification c = check_geodesic_classification(g);
      const std::string g6 = to_graph6(g);
      emit(out, "obs.geodesics", mu_label(g6), g6, Relation::Eq, 0,
           {{"violations", static_cast<long long>(c.violations.size())}}, sw,
           c.ok() ? std::string{} : c.violations.front());
    }
  }
}

void run_partition_consequences(SuiteContext& ctx, Sink& out) {
  const int top = std::min(ctx.options().max_n, 6);
  for (int n = 1; n <= top; ++n) {
    for (const Graph& g : ctx.connected(n)) {
      const Stopwatch sw;
      const MycielskiGraph m = mycielskian(g);
      const DistMatrix dm = all_pairs_distances(m.graph());
      long long valid = 0;
      long long failures = 0;
      std::vector<Block> blocks(static_cast<std::size_t>(n));
      for (std::uint32_t code = 0; code < (1u << (2 * n)); ++code) {
        for (int v = 0; v < n; ++v) blocks[static_cast<std::size_t>(v)] = static_cast<Block>((code >> (2 * v)) & 3u);
        const MycielskiPartition p = MycielskiPartition::from_blocks(blocks);
        if (!is_mycielski_partition(g, p).valid) continue;
        ++valid;
        const VertexSet s = gp_set_from_partition(m, p);
        const bool sound = partition_derived_properties(g, p).ok() && s.size() == p.value() &&
                           is_general_position(dm, s) && partition_from_gp_set(m, s) == p;
        if (!sound) ++failures;
      }
      const std::string g6 = to_graph6(g);
      emit(out, "lem.partition-consequences", mu_label(g6), g6, Relation::Eq, 0, {{"failures", failures}}, sw,
           std::to_string(valid) + " valid partitions");
    }
  }
}

void run_characterisation(SuiteContext& ctx, Sink& out) {
  for (const Graph& g : ctx.catalog()) {
    const Stopwatch sw;
    const int bb = ctx.gp_mu(g).value;
    const BestPartition best = best_partition(g);
    const MycielskiGraph m = mycielskian(g);
    const VertexSet s = gp_set_from_partition(m, best.partition);
    const bool witness_ok = s.size() == best.value && is_general_position(all_pairs_distances(m.graph()), s);
    const std::string g6 = to_graph6(g);
    emit(out, "thm.characterisation", mu_label(g6), g6, Relation::Eq, bb,
         {{"partition", best.value}, {"partition witness", witness_ok ? s.size() : -1}}, sw,
         "expected is the branch-and-bound value");
  }
}

void run_lower_bound(SuiteContext& ctx, Sink& out) {
  for (const Graph& g : ctx.catalog()) {
    const Stopwatch sw;
    const std::string g6 = to_graph6(g);
    emit(out, "cor.lower-bound", mu_label(g6), g6, Relation::Ge, lower_bound(g), {{"bb", ctx.gp_mu(g).value}}, sw);
  }
}

void run_upper_bound(SuiteContext& ctx, Sink& out) {
  for (const Graph& g : ctx.catalog()) {
    const Stopwatch sw;
    const GeneralUpperBounds ub = upper_bound_general(g);
    const long long gp = ctx.gp_mu(g).value;
    const std::string g6 = to_graph6(g);
    emit(out, "cor.upper-bound", mu_label(g6) + " vs n+max{0,alpha-delta+1}", g6, Relation::Le, ub.by_min_degree,
         {{"bb", gp}}, sw);
    emit(out, "cor.upper-bound", mu_label(g6) + " vs n+alpha-1", g6, Relation::Le, ub.by_independence, {{"bb", gp}},
         sw);
  }
  // alpha K_2 joined to K_{delta-1} attains the minimum-degree bound.
  for (int pairs = 2; pairs <= 4; ++pairs) {
    for (int delta = 2; delta <= 3; ++delta) {
      const std::string spec = "join:" + std::to_string(pairs) + "," + std::to_string(delta);
      const Graph g = parse_family(spec);
      family_check(ctx, out, "cor.upper-bound", spec, upper_bound_general(g).by_min_degree, false);
    }
  }
}

void run_regular_bound(SuiteContext& ctx, Sink& out) {
  auto check = [&](const Graph& g, const std::string& name, const std::string& graph) {
    const DegreeProfile p = degree_profile(g);
    if (!p.regular || p.min_degree < 2) return;
    const Stopwatch sw;
    emit(out, "thm.regular-bound", mu_label(name), graph, Relation::Le, upper_bound_regular(g),
         {{"bb", ctx.gp_mu(g).value}}, sw, std::to_string(p.min_degree) + "-regular");
  };
  for (const Graph& g : ctx.catalog()) check(g, to_graph6(g), to_graph6(g));
  for (const Graph& g : ctx.cubic()) check(g, to_graph6(g), to_graph6(g));
  for (int n = 3; n <= 10; ++n) {
    const std::string spec = "cycle:" + std::to_string(n);
    check(parse_family(spec), display_name(spec), spec);
  }
  // G(d) meets the bound.
  for (int d = 2; d <= 4; ++d) {
    const std::string spec = "gd:" + std::to_string(d);
    const Graph g = parse_family(spec);
    family_check(ctx, out, "thm.regular-bound", spec, upper_bound_regular(g), false);
  }
}

void run_matching_bound(SuiteContext& ctx, Sink& out) {
  auto check = [&](const Graph& g) {
    const auto bound = upper_bound_matching(g);
    if (!bound) return;
    const Stopwatch sw;
    const std::string g6 = to_graph6(g);
    emit(out, "thm.matching-bound", mu_label(g6), g6, Relation::Le, *bound, {{"bb", ctx.gp_mu(g).value}}, sw);
  };
  for (const Graph& g : ctx.catalog()) check(g);
  Rng rng = ctx.rng_for("thm.matching-bound");
  for (const Graph& t : random_trees(rng, 50, 4, 10)) check(t);
}

void run_perfect_matching(SuiteContext& ctx, Sink& out) {
  auto check = [&](const Graph& g) {
    const int n = g.order();
    if (n < 4 || girth(g) < 6 || 2 * matching_number(g).size != n) return false;
    const Stopwatch sw;
    const std::string g6 = to_graph6(g);
    emit(out, "cor.perfect-matching", mu_label(g6), g6, Relation::Eq, n, mu_methods(ctx, g, false), sw);
    return true;
  };
  for (const Graph& g : ctx.catalog()) check(g);
  Rng rng = ctx.rng_for("cor.perfect-matching");
  int found = 0;
  for (int attempt = 0; attempt < 2000 && found < 30; ++attempt) {
    const int n = 4 + 2 * static_cast<int>(uniform_below(rng, 4));
    if (check(random_tree(n, rng()))) ++found;
  }
}

void run_kn_minus(SuiteContext& ctx, Sink& out) {
  for (int n = 4; n <= 8; ++n) family_check(ctx, out, "thm.kn-minus", "kminus:" + std::to_string(n), n, true);
}

void run_multipartite(SuiteContext& ctx, Sink& out) {
  for (int n = 2; n <= 8; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> prefix;
    integer_partitions(n, n, prefix, parts);
    for (const std::vector<int>& p : parts) {
      const int k = static_cast<int>(p.size());
      if (k < 2 || k == n) continue;
      std::string spec = "multipartite:";
      for (int i = 0; i < k; ++i) spec += (i ? "," : "") + std::to_string(p[static_cast<std::size_t>(i)]);
      family_check(ctx, out, "thm.multipartite", spec, std::max(n, 2 * p.front()), true);
    }
  }
}

void run_n_alpha_minus_1(SuiteContext& ctx, Sink& out) {
  auto check = [&](const Graph& g, const std::string& name, const std::string& graph) {
    const Stopwatch sw;
    const long long expected = g.order() + independence_number(g).value - 1;
    emit(out, "thm.n-alpha-minus-1", mu_label(name), graph, Relation::Eq, expected, mu_methods(ctx, g, false), sw);
  };
  for (int n = 3; n <= 8; ++n) {
    const std::string spec = "cliqueleaf:" + std::to_string(n);
    check(parse_family(spec), display_name(spec), spec);
  }
  for (int n = 3; n <= 9; ++n) {
    const std::string spec = "star:" + std::to_string(n);
    check(parse_family(spec), display_name(spec), spec);
  }
  const Graph a = universal_leaves_example();
  check(a, "x+6 leaves+4 matched pairs", to_graph6(a));
  const Graph b = leafless_example();
  check(b, "x+3 pairs matched into K_3", to_graph6(b));
}

void run_gd(SuiteContext& ctx, Sink& out) {
  for (int d = 2; d <= 4; ++d) family_check(ctx, out, "thm.gd", "gd:" + std::to_string(d), 3 * d, true);
}

void run_cycles(SuiteContext& ctx, Sink& out) {
  for (int n = 3; n <= 10; ++n) {
    family_check(ctx, out, "thm.cycles", "cycle:" + std::to_string(n), (n == 3 || n == 5) ? n + 1 : n, true);
  }
}

void run_cubic(SuiteContext& ctx, Sink& out) {
  std::map<int, std::vector<const Graph*>> by_order;
  for (const Graph& g : ctx.cubic()) by_order[g.order()].push_back(&g);
  const Graph g3 = abundant_regular(3);
  for (const auto& [n, graphs] : by_order) {
    const Stopwatch sw;
    std::vector<const Graph*> abundant;
    for (const Graph* g : graphs) {
      if (g->is_complete()) continue;
      if (classify(*g, ctx.gp_mu(*g).value) == Classification::Abundant) abundant.push_back(g);
    }
    emit(out, "thm.cubic", "abundant non-complete cubic graphs of order " + std::to_string(n),
         std::to_string(graphs.size()) + " graphs", Relation::Eq, n == 8 ? 1 : 0,
         {{"abundant", static_cast<long long>(abundant.size())}}, sw);
    for (const Graph* g : abundant) {
      const Stopwatch iso;
      const std::string g6 = to_graph6(*g);
      emit(out, "thm.cubic", g6 + " isomorphic to G(3)", g6, Relation::Eq, 1, {{"isomorphic", isomorphic(*g, g3)}},
           iso);
    }
  }
}

void run_meagre_threshold(SuiteContext& ctx, Sink& out) {
  const std::pair<int, long long> thresholds[] = {{2, 6}, {3, 17}, {4, 42}};
  for (auto [d, value] : thresholds) {
    const Stopwatch sw;
    emit(out, "thm.meagre-threshold", "threshold for d=" + std::to_string(d), "-", Relation::Eq, value,
         {{"formula", regular_meagre_threshold(d)}}, sw);
  }
  // 2-regular connected graphs at or above the threshold are meagre.
  for (int n = 6; n <= 10; ++n) {
    const std::string spec = "cycle:" + std::to_string(n);
    const Stopwatch sw;
    const Graph g = parse_family(spec);
    const bool meagre = classify(g, ctx.gp_mu(g).value) == Classification::Meagre;
    emit(out, "thm.meagre-threshold", display_name(spec) + " meagre", spec, Relation::Eq, 1, {{"meagre", meagre}}, sw);
  }
}

void run_tree_meagre(SuiteContext& ctx, Sink& out) {
  Rng rng = ctx.rng_for("lem.tree-meagre");
  int found = 0;
  for (int attempt = 0; attempt < 20000 && found < 50; ++attempt) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 8));
    const Graph t = random_tree(n, rng());
    const TreeStats s = tree_stats(t);
    if (s.leaf_count != s.nt_count) continue;
    ++found;
    const Stopwatch sw;
    const std::string g6 = to_graph6(t);
    emit(out, "lem.tree-meagre", mu_label(g6), g6, Relation::Eq, n, mu_methods(ctx, t, false), sw);
  }
  if (found < 50) {
    const Stopwatch sw;
    emit(out, "lem.tree-meagre", "sampled trees with l=w", "-", Relation::Ge, 50, {{"found", found}}, sw);
  }
}

void run_tree_upper(SuiteContext& ctx, Sink& out) {
  auto check = [&](const Graph& t) {
    const Stopwatch sw;
    const TreeStats s = tree_stats(t);
    const std::string g6 = to_graph6(t);
    emit(out, "cor.tree-upper", mu_label(g6), g6, Relation::Le, t.order() + s.leaf_count - s.nt_count,
         {{"bb", ctx.gp_mu(t).value}}, sw);
  };
  for (const Graph& g : ctx.catalog()) {
    if (g.order() >= 3 && is_tree(g)) check(g);
  }
  Rng rng = ctx.rng_for("cor.tree-upper");
  for (const Graph& t : random_trees(rng, 100, 3, 10)) check(t);
}

void run_tree_lower(SuiteContext& ctx, Sink& out) {
  for (const std::string& spec : spaced_tree_specs()) {
    const Stopwatch sw;
    const Graph t = parse_family(spec);
    const TreeStats s = tree_stats(t);
    emit(out, "lem.tree-lower", mu_label(display_name(spec)), spec, Relation::Ge,
         t.order() + s.leaf_count - s.nt_count, {{"bb", ctx.gp_mu(t).value}}, sw,
         "D_T=" + std::to_string(s.leaf_spacing));
  }
}

void run_tree_exact(SuiteContext& ctx, Sink& out) {
  auto check = [&](const Graph& t, const std::string& name, const std::string& graph) {
    const Stopwatch sw;
    const TreeStats s = tree_stats(t);
    Computed c = mu_methods(ctx, t, false);
    c.emplace_back("tree rule", tree_bounds(t).exact.value_or(-1));
    emit(out, "cor.tree-exact", mu_label(name), graph, Relation::Eq, t.order() + s.leaf_count - s.nt_count,
         std::move(c), sw, "D_T=" + std::to_string(s.leaf_spacing));
  };
  for (const std::string& spec : spaced_tree_specs()) check(parse_family(spec), display_name(spec), spec);
  Rng rng = ctx.rng_for("cor.tree-exact");
  for (const Graph& t : random_trees(rng, 300, 3, 10)) {
    const TreeStats s = tree_stats(t);
    if (s.nt_count >= 2 && s.leaf_spacing >= 5) check(t, to_graph6(t), to_graph6(t));
  }
}

void run_star(SuiteContext& ctx, Sink& out) {
  for (int n = 3; n <= 9; ++n) {
    const std::string spec = "star:" + std::to_string(n);
    const Stopwatch sw;
    const Graph g = parse_family(spec);
    Computed c = mu_methods(ctx, g, true);
    c.emplace_back("tree rule", tree_bounds(g).exact.value_or(-1));
    emit(out, "cor.star", mu_label(display_name(spec)), spec, Relation::Eq, 2 * n - 2, std::move(c), sw);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteContext::SuiteContext(SuiteOptions options) : options_(std::move(options)) {
  if (options_.fixture_dir.empty()) options_.fixture_dir = default_fixture_dir();
}

const std::vector<Graph>& SuiteContext::load(const std::string& key,
                                             const std::function<std::vector<Graph>()>& make) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = catalogs_.find(key); it != catalogs_.end()) return *it->second;
  }
  auto built = std::make_unique<std::vector<Graph>>(make());
  std::lock_guard lock(mutex_);
  auto [it, inserted] = catalogs_.emplace(key, std::move(built));
  return *it->second;
}

const std::vector<Graph>& SuiteContext::connected(int order) {
  const std::string file = "connected_n" + std::to_string(order) + ".g6";
  return load(file, [&] { return read_graph6_file((std::filesystem::path(options_.fixture_dir) / file).string()); });
}

const std::vector<Graph>& SuiteContext::cubic() {
  return load("cubic", [&] {
    if (!options_.corpus.empty()) return read_graph6_file(options_.corpus);
    std::vector<Graph> all;
    for (int n = 4; n <= 10; n += 2) {
      const std::string file = "cubic_n" + std::to_string(n) + ".g6";
      for (Graph& g : read_graph6_file((std::filesystem::path(options_.fixture_dir) / file).string())) {
        all.push_back(std::move(g));
      }
    }
    return all;
  });
}

const std::vector<Graph>& SuiteContext::catalog() {
  return load("catalog", [&] {
    std::vector<Graph> all;
    for (int n = 1; n <= options_.max_n; ++n) {
      for (const Graph& g : connected(n)) {
        if (!g.is_complete()) all.push_back(g);
      }
    }
    Rng rng = rng_for("catalog");
    for (int i = 0; i < options_.random_count; ++i) {
      const int n = 8 + static_cast<int>(uniform_below(rng, 2));
      all.push_back(random_connected_graph(n, rng));
    }
    return all;
  });
}

GpCertificate SuiteContext::gp_mu(const Graph& g) {
  const std::string key = to_graph6(g);
  {
    std::lock_guard lock(mutex_);
    if (auto it = gp_cache_.find(key); it != gp_cache_.end()) return it->second;
  }
  const GpCertificate cert = gp_number(mycielskian(g).graph());
  std::lock_guard lock(mutex_);
  gp_cache_.emplace(key, cert);
  return cert;
}

Rng SuiteContext::rng_for(std::string_view id) const { return Rng(options_.seed + fnv1a(id)); }

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> registry = {
      {"cor.complete", "gp(mu(K_n)) = n+1; for n >= 3 the unique gp-set is V u {root}", run_complete},
      {"lem.root-iff-complete", "the root lies in every gp-set of mu(G) iff G is complete", run_root_iff_complete},
      {"obs.geodesics", "geodesics of mu(G) are expansions of G-geodesics or pass through the root", run_geodesics},
      {"lem.partition-consequences",
       "in a Mycielski partition V1 is independent, V1-V3 is empty and (V1,V2) is a matching",
       run_partition_consequences},
      {"thm.characterisation", "gp(mu(G)) is the largest n+n1-n4 over Mycielski partitions", run_characterisation},
      {"cor.lower-bound", "gp(mu(G)) >= max{n, 2 alpha_gp(G)}", run_lower_bound},
      {"cor.upper-bound", "gp(mu(G)) <= n+max{0,alpha-delta+1} <= n+alpha-1", run_upper_bound},
      {"thm.regular-bound", "d-regular G has gp(mu(G)) <= n+(d-1)/2+1/d", run_regular_bound},
      {"thm.matching-bound", "girth >= 6 and n >= 4 give gp(mu(G)) <= 2n-2nu(G)", run_matching_bound},
      {"cor.perfect-matching", "girth >= 6 with a perfect matching gives gp(mu(G)) = n", run_perfect_matching},
      {"thm.kn-minus", "gp(mu(K_n^-)) = n", run_kn_minus},
      {"thm.multipartite", "gp(mu(K_{r1,...,rk})) = max{n, 2r1}", run_multipartite},
      {"thm.n-alpha-minus-1", "the listed extremal graphs attain gp(mu(G)) = n+alpha-1", run_n_alpha_minus_1},
      {"thm.gd", "gp(mu(G(d))) = 3d", run_gd},
      {"thm.cycles", "gp(mu(C_n)) = n+1 for n = 3, 5 and n otherwise", run_cycles},
      {"thm.cubic", "G(3) is the unique non-complete abundant cubic graph", run_cubic},
      {"thm.meagre-threshold", "d-regular graphs of order >= d^3-2d^2+2d+2 are meagre", run_meagre_threshold},
      {"lem.tree-meagre", "trees with l = w have gp(mu(T)) = n", run_tree_meagre},
      {"cor.tree-upper", "trees have gp(mu(T)) <= n+l-w", run_tree_upper},
      {"lem.tree-lower", "trees with D_T >= 5 have gp(mu(T)) >= n+l-w", run_tree_lower},
      {"cor.tree-exact", "trees with D_T >= 5 have gp(mu(T)) = n+l-w", run_tree_exact},
      {"cor.star", "gp(mu(S_n)) = 2n-2", run_star},
  };
  return registry;
}

std::vector<const SuiteEntry*> select_entries(const std::vector<std::string>& ids) {
  const auto& registry = suite_registry();
  std::vector<const SuiteEntry*> out;
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const SuiteEntry& e : registry) out.push_back(&e);
      continue;
    }
    const auto it = std::find_if(registry.begin(), registry.end(), [&](const SuiteEntry& e) { return e.id == id; });
    if (it == registry.end()) throw InvalidArgument("unknown theorem id '" + id + "'");
    out.push_back(&*it);
  }
  // Canonical order, duplicates dropped.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Report run_suite(const std::vector<const SuiteEntry*>& entries, const SuiteOptions& options,
                 const std::function<void(const SuiteEntry&, const std::vector<TheoremRecord>&)>& on_entry) {
  SuiteContext ctx(options);
  const std::size_t count = entries.size();
  std::vector<std::vector<TheoremRecord>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::vector<bool> done(count, false);
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || abort) return;
      std::vector<TheoremRecord> records;
      std::exception_ptr error;
      try {
        entries[i]->run(ctx, records);
      } catch (...) {
        error = std::current_exception();
        abort = true;
      }
      {
        std::lock_guard lock(mutex);
        results[i] = std::move(records);
        errors[i] = error;
        done[i] = true;
      }
      cv.notify_all();
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(count)));
  std::vector<std::jthread> pool;
  if (jobs == 1) {
    worker();
  } else {
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  Report report;
  report.header.seed = options.seed;
  report.header.max_n = options.max_n;
  for (std::size_t i = 0; i < count; ++i) {
    report.header.suites.push_back(entries[i]->id);
    {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return done[i]; });
    }
    if (errors[i]) {
      next = count;
      pool.clear();
      std::rethrow_exception(errors[i]);
    }
    if (on_entry) on_entry(*entries[i], results[i]);
    for (TheoremRecord& r : results[i]) report.records.push_back(std::move(r));
  }
  return report;
}

}  // namespace gpmyc::verify
