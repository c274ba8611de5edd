#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gpmyc::verify {

struct BenchOptions {
  std::vector<int> sizes{5, 6, 7, 8, 9};
  std::vector<std::string> methods{"brute", "bb", "partition"};
  std::string family;  // e.g. "cycle"; empty: seeded random connected graphs
  std::uint64_t seed = 1;
  int runs = 5;
};

struct BenchRow {
  std::string instance;
  int base_order = 0;
  int mu_order = 0;
  std::string method;
  int value = 0;
  double median_ms = 0.0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  bool methods_agree = true;  // every method found the same gp(mu(G)) per instance
};

/// Times gp(mu(G)) per instance and method: brute and bb run on mu(G),
/// partition runs best_partition on G. Throws InvalidArgument on an unknown
/// method and CapExceeded when an instance is beyond a method's cap.
BenchResult run_bench(const BenchOptions& options);

std::string bench_csv(const BenchResult& result);

}  // namespace gpmyc::verify
