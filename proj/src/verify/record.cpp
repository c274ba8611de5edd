#include "gpmyc/verify/record.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "gpmyc/error.hpp"

namespace gpmyc::verify {

using json = nlohmann::ordered_json;

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "==";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
  }
  return "?";
}

std::string_view to_string(Verdict v) { return v == Verdict::Pass ? "PASS" : "FAIL"; }

namespace {

Relation relation_from(std::string_view s) {
  if (s == "==") return Relation::Eq;
  if (s == "<=") return Relation::Le;
  if (s == ">=") return Relation::Ge;
  throw ParseError("report: unknown relation '" + std::string(s) + "'");
}

bool holds(Relation r, long long computed, long long expected) {
  switch (r) {
    case Relation::Eq: return computed == expected;
    case Relation::Le: return computed <= expected;
    case Relation::Ge: return computed >= expected;
  }
  return false;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

std::string computed_summary(const TheoremRecord& r) {
  if (r.computed.empty()) return "-";
  const bool agree = std::all_of(r.computed.begin(), r.computed.end(),
                                 [&](const auto& c) { return c.second == r.computed.front().second; });
  if (agree) return std::to_string(r.computed.front().second);
  std::string out;
  for (const auto& [method, value] : r.computed) {
    if (!out.empty()) out += ", ";
    out += method + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

void TheoremRecord::settle() {
  const bool ok = !computed.empty() && std::all_of(computed.begin(), computed.end(), [&](const auto& c) {
    return holds(relation, c.second, expected);
  });
  verdict = ok ? Verdict::Pass : Verdict::Fail;
}

int Report::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(),
                                        [](const TheoremRecord& r) { return r.verdict == Verdict::Fail; }));
}

std::string to_json(const Report& report, bool include_timing) {
  json doc;
  doc["tool"] = "gpmyc";
  doc["format_version"] = 1;
  doc["seed"] = report.header.seed;
  doc["max_n"] = report.header.max_n;
  doc["suites"] = report.header.suites;
  json records = json::array();
  for (const TheoremRecord& r : report.records) {
    json rec;
    rec["theorem"] = r.theorem;
    rec["instance"] = r.instance;
    rec["graph"] = r.graph;
    rec["relation"] = to_string(r.relation);
    rec["expected"] = r.expected;
    json computed = json::object();
    for (const auto& [method, value] : r.computed) computed[method] = value;
    rec["computed"] = computed;
    rec["verdict"] = to_string(r.verdict);
    if (include_timing) rec["wall_ms"] = r.wall_ms;
    rec["note"] = r.note;
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  const int fail = report.failures();
  doc["summary"] = {{"total", report.records.size()},
                    {"pass", static_cast<int>(report.records.size()) - fail},
                    {"fail", fail}};
  return doc.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: invalid JSON: ") + e.what());
  }
  try {
    Report report;
    report.header.seed = doc.at("seed").get<std::uint64_t>();
    report.header.max_n = doc.at("max_n").get<int>();
    report.header.suites = doc.at("suites").get<std::vector<std::string>>();
    for (const json& rec : doc.at("records")) {
      TheoremRecord r;
      r.theorem = rec.at("theorem").get<std::string>();
      r.instance = rec.at("instance").get<std::string>();
      r.graph = rec.at("graph").get<std::string>();
      r.relation = relation_from(rec.at("relation").get<std::string>());
      r.expected = rec.at("expected").get<long long>();
      for (const auto& [method, value] : rec.at("computed").items()) r.computed.emplace_back(method, value.get<long long>());
      r.verdict = rec.at("verdict").get<std::string>() == "PASS" ? Verdict::Pass : Verdict::Fail;
      r.wall_ms = rec.value("wall_ms", 0.0);
      r.note = rec.value("note", "");
      report.records.push_back(std::move(r));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: missing or mistyped field: ") + e.what());
  }
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  out << "theorem,instance,graph,relation,expected,computed,verdict,wall_ms,note\n";
  for (const TheoremRecord& r : report.records) {
    std::string computed;
    for (const auto& [method, value] : r.computed) {
      if (!computed.empty()) computed += ';';
      computed += method + "=" + std::to_string(value);
    }
    out << csv_field(r.theorem) << ',' << csv_field(r.instance) << ',' << csv_field(r.graph) << ','
        << to_string(r.relation) << ',' << r.expected << ',' << csv_field(computed) << ',' << to_string(r.verdict)
        << ',' << format_ms(r.wall_ms) << ',' << csv_field(r.note) << '\n';
  }
  return out.str();
}

std::string to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# gpmyc verification report\n\n";
  out << "seed " << report.header.seed << ", max-n " << report.header.max_n << ", "
      << report.records.size() << " records, " << report.failures() << " failures\n\n";
  std::string current;
  for (const TheoremRecord& r : report.records) {
    if (r.theorem != current) {
      current = r.theorem;
      out << "\n## " << current << "\n\n";
      out << "| instance | expected | computed | verdict |\n";
      out << "|---|---|---|---|\n";
    }
    const std::string rel = r.relation == Relation::Eq ? "" : std::string(to_string(r.relation)) + " ";
    out << "| " << md_cell(r.instance) << " | expected " << rel << r.expected << " | computed "
        << md_cell(computed_summary(r)) << " | " << to_string(r.verdict) << " |\n";
  }
  return out.str();
}

std::string record_line(const TheoremRecord& r) {
  std::string line = std::string(to_string(r.verdict)) + " " + r.theorem + " " + r.instance + ": computed " +
                     std::string(to_string(r.relation)) + " " + std::to_string(r.expected) + ",";
  for (const auto& [method, value] : r.computed) line += " " + method + "=" + std::to_string(value);
  line += " (" + format_ms(r.wall_ms) + " ms)";
  if (!r.note.empty()) line += " [" + r.note + "]";
  return line;
}

}  // namespace gpmyc::verify
