#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpmyc/gp_engine.hpp"
#include "gpmyc/graph.hpp"

namespace gpmyc {

/// max{n, 2 alpha_gp(G)}. Order cap 22.
int lower_bound(const Graph& g);

struct GeneralUpperBounds {
  int by_min_degree = 0;    // n + max{0, alpha - delta + 1}
  int by_independence = 0;  // n + alpha - 1
};

/// Throws InvalidArgument for complete graphs or graphs with an isolated vertex.
GeneralUpperBounds upper_bound_general(const Graph& g);

/// floor(n + (d-1)/2 + 1/d) in integer arithmetic. Throws InvalidArgument
/// unless G is d-regular with d >= 2.
int upper_bound_regular(const Graph& g);

/// 2n - 2 nu(G) when n >= 4 and girth >= 6; nullopt otherwise.
std::optional<int> upper_bound_matching(const Graph& g);

struct TreeBounds {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::string rule;  // "star", "l=w", "D_T>=5" or empty
};

/// Throws InvalidArgument unless T is a tree of order >= 3.
TreeBounds tree_bounds(const Graph& t);

struct ClosedForm {
  std::string family;
  int value = 0;
};

/// Exact gp(mu(G)) for complete graphs, K_n minus an edge, complete
/// multipartite graphs, cycles and the canonical G(d); nullopt otherwise.
/// Detection is structural, not an isomorphism search.
std::optional<ClosedForm> closed_form(const Graph& g);

/// closed_form together with an explicit maximum witness in mu(G) index
/// space (base v, twin n+v, root 2n).
std::optional<GpCertificate> closed_form_certificate(const Graph& g);

enum class Classification { Meagre, Abundant, Unknown };

std::string_view to_string(Classification c);

/// Meagre iff gp_mu == lower_bound(G). Throws InvalidArgument on complete graphs.
Classification classify(const Graph& g, int gp_mu);

/// d^3 - 2d^2 + 2d + 2. Throws InvalidArgument for d < 2.
long long regular_meagre_threshold(int d);

struct NamedBound {
  std::string name;
  int value = 0;
  bool applicable = false;
};

struct BoundReport {
  int order = 0;
  int alpha = 0;
  int alpha_gp = 0;
  int min_degree = 0;
  int matching = 0;
  int girth = kInfiniteGirth;
  std::optional<int> regular_degree;
  int lower = 0;
  std::vector<NamedBound> uppers;
  std::optional<ClosedForm> exact;
  Classification classification = Classification::Unknown;

  /// Smallest applicable upper bound, if any.
  std::optional<int> tightest_upper() const;
};

/// Evaluates every bound that applies to G. Classification is filled in
/// when gp_mu is supplied and G is non-complete.
BoundReport bound_report(const Graph& g, std::optional<int> gp_mu = std::nullopt);

}  // namespace gpmyc
