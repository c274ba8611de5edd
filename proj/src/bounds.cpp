#include "gpmyc/bounds.hpp"

#include <algorithm>

#include "gpmyc/error.hpp"
#include "gpmyc/families.hpp"
#include "gpmyc/gp_engine.hpp"
#include "gpmyc/mycielski.hpp"
#include "gpmyc/partition.hpp"

namespace gpmyc {

int lower_bound(const Graph& g) { return std::max(g.order(), 2 * alpha_gp(g).value); }

GeneralUpperBounds upper_bound_general(const Graph& g) {
  if (g.is_complete()) throw InvalidArgument("upper_bound_general: graph is complete");
  if (has_isolated_vertex(g)) throw InvalidArgument("upper_bound_general: graph has an isolated vertex");
  const int n = g.order();
  const int alpha = independence_number(g).value;
  const int delta = degree_profile(g).min_degree;
  return {n + std::max(0, alpha - delta + 1), n + alpha - 1};
}

int upper_bound_regular(const Graph& g) {
  const DegreeProfile p = degree_profile(g);
  if (!p.regular) throw InvalidArgument("upper_bound_regular: graph is not regular");
  const int d = p.min_degree;
  if (d < 2) throw InvalidArgument("upper_bound_regular: degree must be >= 2");
  // n + (d-1)/2 + 1/d = n + (d(d-1) + 2) / 2d
  return g.order() + (d * (d - 1) + 2) / (2 * d);
}

std::optional<int> upper_bound_matching(const Graph& g) {
  if (g.order() < 4 || girth(g) < 6) return std::nullopt;
  return 2 * g.order() - 2 * matching_number(g).size;
}

TreeBounds tree_bounds(const Graph& t) {
  if (t.order() < 3 || !is_tree(t)) throw InvalidArgument("tree_bounds: input must be a tree of order >= 3");
  const TreeStats s = tree_stats(t);
  const int n = t.order();
  TreeBounds b;
  b.upper = n + s.leaf_count - s.nt_count;
  b.lower = lower_bound(t);
  if (s.nt_count == 1) {
    b.exact = 2 * s.leaf_count;
    b.rule = "star";
  } else if (s.leaf_count == s.nt_count) {
    b.exact = n;
    b.rule = "l=w";
  } else if (s.leaf_spacing >= 5) {
    b.exact = n + s.leaf_count - s.nt_count;
    b.rule = "D_T>=5";
  }
  if (b.exact) b.lower = std::max(b.lower, *b.exact);
  return b;
}

namespace {

// Non-adjacency is an equivalence relation exactly when G is complete
// multipartite; returns the class sizes, or nothing.
std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> parts;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    const int v = unseen.first();
    const VertexSet cls = g.vertices() - g.neighbors(v);
    for (int w : cls) {
      if (g.vertices() - g.neighbors(w) != cls) return std::nullopt;
    }
    parts.push_back(cls.size());
    unseen -= cls;
  }
  if (static_cast<int>(parts.size()) < 2 || static_cast<int>(parts.size()) >= n) return std::nullopt;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

}  // namespace

std::optional<ClosedForm> closed_form(const Graph& g) {
  const int n = g.order();
  if (n >= 2 && g.is_complete()) return ClosedForm{"complete:" + std::to_string(n), n + 1};
  const DegreeProfile p = degree_profile(g);
  if (n >= 4 && g.edge_count() == n * (n - 1) / 2 - 1) {
    return ClosedForm{"kminus:" + std::to_string(n), n};
  }
  if (auto parts = multipartite_parts(g)) {
    std::string name = "multipartite:";
    for (std::size_t i = 0; i < parts->size(); ++i) name += (i ? "," : "") + std::to_string((*parts)[i]);
    return ClosedForm{name, std::max(n, 2 * parts->front())};
  }
  if (n >= 3 && p.regular && p.min_degree == 2 && is_connected(g)) {
    return ClosedForm{"cycle:" + std::to_string(n), (n == 3 || n == 5) ? n + 1 : n};
  }
  if ((n + 1) % 3 == 0 && n >= 5) {
    const int d = (n + 1) / 3;
    if (p.regular && p.min_degree == d && g == abundant_regular(d)) {
      return ClosedForm{"gd:" + std::to_string(d), n + 1};
    }
  }
  return std::nullopt;
}

std::optional<GpCertificate> closed_form_certificate(const Graph& g) {
  const std::optional<ClosedForm> form = closed_form(g);
  if (!form) return std::nullopt;
  const int n = g.order();
  const MycielskiGraph m = mycielskian(g);
  VertexSet witness;
  if (g.is_complete()) {
    witness = m.base_vertices();
    witness.insert(m.root());
  } else if (form->value == n) {
    witness = m.twin_vertices();
  } else if (const SetResult a = alpha_gp(g); form->value == 2 * a.value) {
    witness = gp_set_from_partition(m, MycielskiPartition{n, a.witness, {}, {}, g.vertices() - a.witness});
  } else if (form->family.starts_with("gd:")) {
    const int d = (n + 1) / 3;
    const VertexSet independent = VertexSet::range(d);
    const VertexSet clique = VertexSet::range(2 * d) - independent;
    witness = gp_set_from_partition(m, MycielskiPartition{n, independent, clique, {}, g.vertices() - independent - clique});
  } else {
    witness = gp_set_from_partition(m, best_partition(g).partition);
  }
  if (witness.size() != form->value || !is_general_position(DistMatrix(m.graph()), witness)) {
    throw std::logic_error("closed_form_certificate: witness construction failed for " + form->family);
  }
  return GpCertificate{form->value, witness, Method::ClosedForm};
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Meagre: return "meagre";
    case Classification::Abundant: return "abundant";
    case Classification::Unknown: return "unknown";
  }
  return "?";
}

Classification classify(const Graph& g, int gp_mu) {
  if (g.is_complete()) throw InvalidArgument("classify: complete graphs are neither meagre nor abundant");
  return gp_mu == lower_bound(g) ? Classification::Meagre : Classification::Abundant;
}

long long regular_meagre_threshold(int d) {
  if (d < 2) throw InvalidArgument("regular_meagre_threshold: d must be >= 2");
  const long long x = d;
  return x * x * x - 2 * x * x + 2 * x + 2;
}

std::optional<int> BoundReport::tightest_upper() const {
  std::optional<int> best;
  for (const NamedBound& b : uppers) {
    if (b.applicable && (!best || b.value < *best)) best = b.value;
  }
  return best;
}

BoundReport bound_report(const Graph& g, std::optional<int> gp_mu) {
  BoundReport r;
  const DegreeProfile p = degree_profile(g);
  r.order = g.order();
  r.alpha = independence_number(g).value;
  r.alpha_gp = alpha_gp(g).value;
  r.min_degree = p.min_degree;
  r.matching = matching_number(g).size;
  r.girth = girth(g);
  if (p.regular) r.regular_degree = p.min_degree;
  r.lower = std::max(r.order, 2 * r.alpha_gp);

  const bool general = !g.is_complete() && !has_isolated_vertex(g);
  NamedBound by_degree{"n+max(0,alpha-delta+1)", 0, general};
  NamedBound by_alpha{"n+alpha-1", 0, general};
  if (general) {
    by_degree.value = r.order + std::max(0, r.alpha - r.min_degree + 1);
    by_alpha.value = r.order + r.alpha - 1;
  }
  NamedBound regular{"regular", 0, p.regular && p.min_degree >= 2};
  if (regular.applicable) regular.value = upper_bound_regular(g);
  const std::optional<int> by_matching = upper_bound_matching(g);
  NamedBound matching{"2n-2nu", by_matching.value_or(0), by_matching.has_value()};
  r.uppers = {by_degree, by_alpha, regular, matching};

  r.exact = closed_form(g);
  if (gp_mu && !g.is_complete()) {
    r.classification = *gp_mu == r.lower ? Classification::Meagre : Classification::Abundant;
  }
  return r;
}

}  // namespace gpmyc
