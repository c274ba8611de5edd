// gpmyc command-line front end: gp, check, bench, report.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "gpmyc/bounds.hpp"
#include "gpmyc/error.hpp"
#include "gpmyc/gp_engine.hpp"
#include "gpmyc/mycielski.hpp"
#include "gpmyc/partition.hpp"
#include "gpmyc/verify/bench.hpp"
#include "gpmyc/verify/family_spec.hpp"
#include "gpmyc/verify/record.hpp"
#include "gpmyc/verify/suite.hpp"

namespace {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2, kCap = 3, kIo = 4 };

using namespace gpmyc;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct GpArgs {
  std::string family;
  std::string graph6;
  bool mu = false;
  std::string method = "auto";
};

int cmd_gp(const GpArgs& a) {
  const Graph g = a.family.empty() ? parse_graph6(a.graph6) : verify::parse_family(a.family);
  const std::string name = a.family.empty() ? a.graph6 : verify::display_name(a.family);
  const auto start = std::chrono::steady_clock::now();

  GpCertificate cert;
  if (!a.mu) {
    if (a.method == "partition" || a.method == "closed") {
      throw InvalidArgument("method '" + a.method + "' computes gp(mu(G)); add --mu");
    }
    cert = a.method == "brute" ? gp_brute(g) : gp_number(g);
  } else {
    const MycielskiGraph m = mycielskian(g);
    if (a.method == "brute") {
      cert = gp_brute(m.graph());
    } else if (a.method == "bb") {
      cert = gp_number(m.graph());
    } else if (a.method == "partition") {
      const BestPartition best = best_partition(g);
      cert = {best.value, gp_set_from_partition(m, best.partition), Method::Partition};
    } else if (a.method == "closed") {
      const auto closed = closed_form_certificate(g);
      if (!closed) throw InvalidArgument("no closed form recognised for " + name);
      cert = *closed;
    } else {
      const auto closed = closed_form_certificate(g);
      cert = closed ? *closed : gp_number(m.graph());
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string target = a.mu ? "gp(mu(" + name + "))" : "gp(" + name + ")";
  std::printf("%s = %d  witness=%s  method=%s  time_ms=%.3f\n", target.c_str(), cert.value,
              cert.witness.to_string().c_str(), std::string(to_string(cert.method)).c_str(), ms);
  return kOk;
}

struct CheckArgs {
  std::vector<std::string> ids{"all"};
  verify::SuiteOptions options;
  std::string save;
  bool no_timing = false;
  bool verbose = false;
  bool list = false;
};

int cmd_check(const CheckArgs& a) {
  if (a.list) {
    for (const verify::SuiteEntry& e : verify::suite_registry()) std::printf("%-28s %s\n", e.id.c_str(), e.statement.c_str());
    return kOk;
  }
  const auto entries = verify::select_entries(a.ids);
  const verify::Report report = verify::run_suite(
      entries, a.options, [&](const verify::SuiteEntry& e, const std::vector<verify::TheoremRecord>& records) {
        int fail = 0;
        double ms = 0;
        for (const verify::TheoremRecord& r : records) {
          ms += r.wall_ms;
          if (r.verdict == verify::Verdict::Fail) ++fail;
          if (a.verbose || r.verdict == verify::Verdict::Fail) std::printf("  %s\n", verify::record_line(r).c_str());
        }
        std::printf("%s %-28s %zu records, %d failures (%.1f ms)\n", fail == 0 && !records.empty() ? "PASS" : "FAIL",
                    e.id.c_str(), records.size(), fail, ms);
        std::fflush(stdout);
      });
  const int fail = report.failures();
  std::printf("summary: %zu suites, %zu records, %d failures\n", entries.size(), report.records.size(), fail);
  if (!a.save.empty()) write_output(a.save, verify::to_json(report, !a.no_timing));
  return fail == 0 ? kOk : kVerificationFailed;
}

struct BenchArgs {
  verify::BenchOptions options;
  std::string output;
};

int cmd_bench(const BenchArgs& a) {
  const verify::BenchResult result = verify::run_bench(a.options);
  write_output(a.output, verify::bench_csv(result));
  if (!result.methods_agree) {
    std::fprintf(stderr, "bench: methods disagree on at least one instance\n");
    return kVerificationFailed;
  }
  return kOk;
}

struct ReportArgs {
  std::string input;
  std::string format = "md";
  std::string output;
  bool no_timing = false;
};

int cmd_report(const ReportArgs& a) {
  const verify::Report report = verify::report_from_json(read_file(a.input));
  std::string text;
  if (a.format == "json") text = verify::to_json(report, !a.no_timing);
  else if (a.format == "csv") text = verify::to_csv(report);
  else text = verify::to_markdown(report);
  write_output(a.output, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"General position numbers of graphs and their Mycielskians"};
  app.require_subcommand(1);

  GpArgs gp;
  auto* gp_cmd = app.add_subcommand("gp", "compute gp(G) or gp(mu(G)) with a witness");
  auto* fam = gp_cmd->add_option("--family", gp.family, "family spec, e.g. cycle:5, multipartite:3,2,2, gd:4");
  auto* g6 = gp_cmd->add_option("--graph6", gp.graph6, "graph6 string");
  fam->excludes(g6);
  g6->excludes(fam);
  gp_cmd->add_flag("--mu", gp.mu, "compute gp of the Mycielskian");
  gp_cmd->add_option("--method", gp.method, "solver")
      ->check(CLI::IsMember({"auto", "brute", "bb", "partition", "closed"}));

  CheckArgs check;
  check.options.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* check_cmd = app.add_subcommand("check", "run theorem verification suites");
  check_cmd->add_option("ids", check.ids, "theorem ids, or 'all'");
  check_cmd->add_option("--max-n", check.options.max_n, "largest order taken from exhaustive fixture catalogs")
      ->check(CLI::Range(1, 12));
  check_cmd->add_option("--seed", check.options.seed, "seed for every random instance");
  check_cmd->add_option("--corpus", check.options.corpus, "graph6 file of cubic graphs (replaces the fixtures)");
  check_cmd->add_option("--fixtures", check.options.fixture_dir, "fixture directory");
  check_cmd->add_option("--random-count", check.options.random_count, "random graphs of order 8-9 in the catalog")
      ->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--jobs", check.options.jobs, "worker threads")->check(CLI::PositiveNumber);
  check_cmd->add_option("--save", check.save, "write the JSON report to this file");
  check_cmd->add_flag("--no-timing", check.no_timing, "omit wall_ms from the saved report");
  check_cmd->add_flag("-v,--verbose", check.verbose, "print every record");
  check_cmd->add_flag("--list", check.list, "list theorem ids and exit");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time brute force, branch and bound and partition search");
  bench_cmd->add_option("--sizes", bench.options.sizes, "base graph orders")->delimiter(',');
  bench_cmd->add_option("--methods", bench.options.methods, "brute, bb, partition")->delimiter(',');
  bench_cmd->add_option("--family", bench.options.family, "family name (cycle, path, ...); default random");
  bench_cmd->add_option("--seed", bench.options.seed, "seed for random instances");
  bench_cmd->add_option("--runs", bench.options.runs, "runs per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench.output, "CSV output file");

  ReportArgs report;
  auto* report_cmd = app.add_subcommand("report", "render a saved JSON report");
  report_cmd->add_option("--input", report.input, "JSON report from check --save")->required();
  report_cmd->add_option("--format", report.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  report_cmd->add_option("-o,--output", report.output, "output file");
  report_cmd->add_flag("--no-timing", report.no_timing, "omit wall_ms (json only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gp_cmd) {
      if (gp.family.empty() && gp.graph6.empty()) throw InvalidArgument("gp: give --family or --graph6");
      return cmd_gp(gp);
    }
    if (*check_cmd) return cmd_check(check);
    if (*bench_cmd) return cmd_bench(bench);
    return cmd_report(report);
  } catch (const CapExceeded& e) {
    std::fprintf(stderr, "gpmyc: %s\n", e.what());
    return kCap;
  } catch (const IoError& e) {
    std::fprintf(stderr, "gpmyc: %s\n", e.what());
    return kIo;
  } catch (const Error& e) {
    std::fprintf(stderr, "gpmyc: %s\n", e.what());
    return kUsage;
  }
}
