#pragma once

#include <string>
#include <string_view>

#include "gpmyc/graph.hpp"

namespace gpmyc::verify {

/// Builds a graph from a `name:params` spec:
///   path:N  cycle:N  complete:N  star:N  kminus:N  cliqueleaf:N
///   multipartite:R1,R2,...  gd:D  join:A,D  tree:N,SEED
///   spacedtree:W,[L1,...,LW],GAP
/// Throws ParseError on malformed specs and InvalidArgument when the
/// parameters are out of range for the family.
Graph parse_family(std::string_view spec);

/// Short human-readable name for a spec, e.g. "C_5" for cycle:5.
std::string display_name(std::string_view spec);

}  // namespace gpmyc::verify
