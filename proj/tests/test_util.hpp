#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gpmyc/graph.hpp"

namespace gpmyc {

// Readable gtest failure messages.
inline void PrintTo(VertexSet s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Graph& g, std::ostream* os) { *os << "graph6 " << to_graph6(g); }

}  // namespace gpmyc

namespace gpmyc::test {

inline std::string fixture(const std::string& name) { return std::string(GPMYC_FIXTURE_DIR) + "/" + name; }

inline std::vector<Graph> connected_upto(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& g : read_graph6_file(fixture("connected_n" + std::to_string(n) + ".g6"))) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace gpmyc::test
