#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "gpmyc/families.hpp"
#include "gpmyc/gp_engine.hpp"
#include "gpmyc/graph.hpp"
#include "gpmyc/verify/record.hpp"

namespace gpmyc::verify {

struct SuiteOptions {
  int max_n = 7;            // cap on the order of exhaustive fixture catalogs
  std::uint64_t seed = 1;
  std::string fixture_dir;  // empty: the compiled-in fixture directory
  std::string corpus;       // graph6 file replacing the cubic fixtures
  int random_count = 100;   // random connected graphs of order 8..9 in the catalog
  int jobs = 1;
};

std::string default_fixture_dir();

/// Shared state for one `check` run: fixture catalogs and a cache of
/// gp(mu(G)) keyed by graph6. Safe to use from several worker threads.
class SuiteContext {
 public:
  explicit SuiteContext(SuiteOptions options);

  const SuiteOptions& options() const { return options_; }

  /// All connected graphs of the given order, one per isomorphism class.
  const std::vector<Graph>& connected(int order);
  /// Cubic graphs from --corpus, or the cubic fixtures of orders 4..10.
  const std::vector<Graph>& cubic();
  /// Non-complete connected fixtures up to max_n followed by
  /// random_count seeded random connected graphs of order 8 or 9.
  const std::vector<Graph>& catalog();

  /// Branch-and-bound gp(mu(G)), cached.
  GpCertificate gp_mu(const Graph& g);

  /// Stream seeded from the run seed and the suite id.
  Rng rng_for(std::string_view id) const;

 private:
  const std::vector<Graph>& load(const std::string& key, const std::function<std::vector<Graph>()>& make);

  SuiteOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<std::vector<Graph>>> catalogs_;
  std::map<std::string, GpCertificate> gp_cache_;
};

struct SuiteEntry {
  std::string id;
  std::string statement;
  std::function<void(SuiteContext&, std::vector<TheoremRecord>&)> run;
};

/// Every suite entry, in canonical order.
const std::vector<SuiteEntry>& suite_registry();

/// Resolves ids ("all" expands to the whole registry). Throws
/// InvalidArgument on an unknown id.
std::vector<const SuiteEntry*> select_entries(const std::vector<std::string>& ids);

/// Runs the entries on options.jobs worker threads. `on_entry` sees each
/// entry's records in registry order, as soon as that entry and all
/// earlier ones have finished.
Report run_suite(const std::vector<const SuiteEntry*>& entries, const SuiteOptions& options,
                 const std::function<void(const SuiteEntry&, const std::vector<TheoremRecord>&)>& on_entry = {});

}  // namespace gpmyc::verify
