#include "gpmyc/verify/family_spec.hpp"

#include <charconv>
#include <vector>

#include "gpmyc/error.hpp"
#include "gpmyc/families.hpp"

namespace gpmyc::verify {

namespace {

long long parse_int(std::string_view text, std::string_view spec) {
  long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("family spec '" + std::string(spec) + "': bad integer '" + std::string(text) + "'");
  }
  return value;
}

// Splits on commas that are not inside brackets.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::vector<int> int_list(std::string_view s, std::string_view spec) {
  std::vector<int> out;
  for (std::string_view part : split_top(s)) out.push_back(static_cast<int>(parse_int(part, spec)));
  return out;
}

int single(const std::vector<std::string_view>& args, std::string_view spec) {
  if (args.size() != 1) throw ParseError("family spec '" + std::string(spec) + "': expected one parameter");
  const long long v = parse_int(args[0], spec);
  if (v < 0 || v > Graph::kMaxOrder) {
    throw InvalidArgument("family spec '" + std::string(spec) + "': parameter out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Graph parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec '" + std::string(spec) + "': missing ':'");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view params = spec.substr(colon + 1);
  const std::vector<std::string_view> args = split_top(params);

  if (name == "path") return path(single(args, spec));
  if (name == "cycle") return cycle(single(args, spec));
  if (name == "complete") return complete(single(args, spec));
  if (name == "star") return star(single(args, spec));
  if (name == "kminus") return complete_minus_edge(single(args, spec));
  if (name == "cliqueleaf") return clique_with_leaf(single(args, spec));
  if (name == "gd") return abundant_regular(single(args, spec));
  if (name == "multipartite") {
    const std::vector<int> parts = int_list(params, spec);
    long long total = 0;
    for (int r : parts) total += r;
    if (total > Graph::kMaxOrder) throw InvalidArgument("family spec '" + std::string(spec) + "': too many vertices");
    return complete_multipartite(parts);
  }
  if (name == "join") {
    if (args.size() != 2) throw ParseError("family spec '" + std::string(spec) + "': expected join:A,D");
    return join_alpha_k2(static_cast<int>(parse_int(args[0], spec)), static_cast<int>(parse_int(args[1], spec)));
  }
  if (name == "tree") {
    if (args.size() != 2) throw ParseError("family spec '" + std::string(spec) + "': expected tree:N,SEED");
    const long long n = parse_int(args[0], spec);
    if (n < 1 || n > Graph::kMaxOrder) throw InvalidArgument("family spec '" + std::string(spec) + "': bad order");
    return random_tree(static_cast<int>(n), static_cast<std::uint64_t>(parse_int(args[1], spec)));
  }
  if (name == "spacedtree") {
    if (args.size() != 3 || args[1].size() < 2 || args[1].front() != '[' || args[1].back() != ']') {
      throw ParseError("family spec '" + std::string(spec) + "': expected spacedtree:W,[L1,...],GAP");
    }
    const std::vector<int> leaves = int_list(args[1].substr(1, args[1].size() - 2), spec);
    return spaced_tree(static_cast<int>(parse_int(args[0], spec)), leaves,
                       static_cast<int>(parse_int(args[2], spec)));
  }
  throw ParseError("family spec '" + std::string(spec) + "': unknown family '" + std::string(name) + "'");
}

std::string display_name(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return std::string(spec);
  const std::string name(spec.substr(0, colon));
  const std::string params(spec.substr(colon + 1));
  if (name == "path") return "P_" + params;
  if (name == "cycle") return "C_" + params;
  if (name == "complete") return "K_" + params;
  if (name == "star") return "S_" + params;
  if (name == "kminus") return "K_" + params + "^-";
  if (name == "multipartite") return "K_{" + params + "}";
  if (name == "gd") return "G(" + params + ")";
  return std::string(spec);
}

}  // namespace gpmyc::verify
