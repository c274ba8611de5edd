#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpmyc::verify {

enum class Relation { Eq, Le, Ge };
enum class Verdict { Pass, Fail };

std::string_view to_string(Relation r);
std::string_view to_string(Verdict v);

/// One checked claim on one instance: every computed value must stand in
/// `relation` to `expected` (computed == / <= / >= expected).
struct TheoremRecord {
  std::string theorem;   // suite id, e.g. "thm.cycles"
  std::string instance;  // display label, e.g. "mu(C_5)"
  std::string graph;     // family spec, graph6 line, or catalog description
  Relation relation = Relation::Eq;
  long long expected = 0;
  std::vector<std::pair<std::string, long long>> computed;  // method -> value
  Verdict verdict = Verdict::Fail;
  double wall_ms = 0.0;
  std::string note;

  /// Recomputes `verdict` from the values.
  void settle();
};

struct ReportHeader {
  std::uint64_t seed = 0;
  int max_n = 0;
  std::vector<std::string> suites;
};

struct Report {
  ReportHeader header;
  std::vector<TheoremRecord> records;

  int failures() const;
};

/// JSON document (schema: docs/report.schema.json). Timing fields are the
/// only content that varies between identical runs.
std::string to_json(const Report& report, bool include_timing = true);
Report report_from_json(std::string_view text);
std::string to_csv(const Report& report);
std::string to_markdown(const Report& report);

/// "PASS thm.cycles mu(C_5): expected == 6, bb=6 partition=6 (0.12 ms)"
std::string record_line(const TheoremRecord& r);

}  // namespace gpmyc::verify
