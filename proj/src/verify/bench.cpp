#include "gpmyc/verify/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "gpmyc/error.hpp"
#include "gpmyc/families.hpp"
#include "gpmyc/gp_engine.hpp"
#include "gpmyc/mycielski.hpp"
#include "gpmyc/partition.hpp"
#include "gpmyc/verify/family_spec.hpp"

namespace gpmyc::verify {

namespace {

int solve(const std::string& method, const Graph& base, const MycielskiGraph& m) {
  if (method == "brute") return gp_brute(m.graph()).value;
  if (method == "bb") return gp_number(m.graph()).value;
  if (method == "partition") return best_partition(base).value;
  throw InvalidArgument("bench: unknown method '" + method + "'");
}

}  // namespace

BenchResult run_bench(const BenchOptions& options) {
  if (options.runs < 1) throw InvalidArgument("bench: runs must be positive");
  for (const std::string& method : options.methods) {
    if (method != "brute" && method != "bb" && method != "partition") {
      throw InvalidArgument("bench: unknown method '" + method + "'");
    }
  }
  BenchResult result;
  Rng rng(options.seed);
  for (int n : options.sizes) {
    const std::string spec = options.family + ":" + std::to_string(n);
    const Graph base = options.family.empty() ? random_connected_graph(n, rng) : parse_family(spec);
    const std::string instance = "mu(" + (options.family.empty() ? to_graph6(base) : display_name(spec)) + ")";
    const MycielskiGraph m = mycielskian(base);
    int first_value = -1;
    for (const std::string& method : options.methods) {
      std::vector<double> times;
      int value = 0;
      for (int run = 0; run < options.runs; ++run) {
        const auto start = std::chrono::steady_clock::now();
        value = solve(method, base, m);
        times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
      }
      std::sort(times.begin(), times.end());
      if (first_value < 0) first_value = value;
      if (value != first_value) result.methods_agree = false;
      result.rows.push_back({instance, n, m.graph().order(), method, value, times[times.size() / 2]});
    }
  }
  return result;
}

std::string bench_csv(const BenchResult& result) {
  std::ostringstream out;
  out << "instance,base_order,mu_order,method,value,median_ms\n";
  for (const BenchRow& r : result.rows) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.median_ms);
    out << r.instance << ',' << r.base_order << ',' << r.mu_order << ',' << r.method << ',' << r.value << ',' << ms
        << '\n';
  }
  return out.str();
}

}  // namespace gpmyc::verify
