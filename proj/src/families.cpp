#include "leavitt/families.hpp"

#include <charconv>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

struct FamilyName {
  std::string_view name;
  Family family;
  std::size_t arity;
};

constexpr FamilyName kFamilies[] = {
    {"line", Family::Line, 1},     {"rose", Family::Rose, 1},   {"enm", Family::Enm, 2},
    {"complete", Family::Complete, 1}, {"chain3", Family::Chain3, 0}, {"tri", Family::Tri, 0},
    {"k3", Family::K3, 0},         {"mult2", Family::Mult2, 0}, {"loop", Family::Loop, 0},
};

const FamilyName& lookup(Family f) {
  for (const auto& entry : kFamilies)
    if (entry.family == f) return entry;
  throw Error(ErrorKind::Internal, "unknown family");
}

// Three vertices in a row, each with loops, feeding leftwards: v3 (one loop)
// → v2 (two loops) → v1 (one loop). The v2 → v1 arrow is taken as a single
// edge; quotient and rank conclusions do not depend on its multiplicity.
constexpr std::string_view kChain3 = R"(vertices: v1 v2 v3
edge l1: v1 -> v1
edge l2: v2 -> v2 * 2
edge e21: v2 -> v1
edge l3: v3 -> v3
edge e32: v3 -> v2
)";

// Path v1 – v2 – v3 with both directions on each link and a loop at each end.
constexpr std::string_view kTri = R"(vertices: v1 v2 v3
edge l1: v1 -> v1
edge a12: v1 -> v2
edge a21: v2 -> v1
edge a23: v2 -> v3
edge a32: v3 -> v2
edge l3: v3 -> v3
)";

// Two vertices: 5 loops at v1, 2 edges v1 → v2, 4 edges v2 → v1, 3 loops at v2.
constexpr std::string_view kMult2 = R"(vertices: v1 v2
edge a: v1 -> v1 * 5
edge b: v1 -> v2 * 2
edge c: v2 -> v1 * 4
edge d: v2 -> v2 * 3
)";

std::string vname(long i) { return "v" + std::to_string(i); }

Graph line_with_loops(long length, long loops) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (long i = 1; i <= length; ++i) vertices.push_back(vname(i));
  for (long i = 1; i < length; ++i) edges.push_back({"e" + std::to_string(i), vname(i), vname(i + 1)});
  for (long k = 1; k <= loops; ++k)
    edges.push_back({"f" + std::to_string(k), vname(length), vname(length)});
  return Graph::build(std::move(vertices), edges);
}

Graph complete(long k) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (long i = 1; i <= k; ++i) vertices.push_back(vname(i));
  for (long i = 1; i <= k; ++i)
    for (long j = 1; j <= k; ++j)
      if (i != j) edges.push_back({"e" + std::to_string(i) + "_" + std::to_string(j), vname(i), vname(j)});
  return Graph::build(std::move(vertices), edges);
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorKind::Precondition, msg);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  std::string_view name = text;
  std::string_view args;
  if (auto paren = text.find('('); paren != std::string_view::npos) {
    if (text.back() != ')') throw Error(ErrorKind::Syntax, "family spec: missing ')'");
    name = text.substr(0, paren);
    args = text.substr(paren + 1, text.size() - paren - 2);
  } else if (auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  const FamilyName* found = nullptr;
  for (const auto& entry : kFamilies)
    if (entry.name == name) found = &entry;
  if (!found) throw Error(ErrorKind::Syntax, "unknown family '" + std::string(name) + "'");

  FamilySpec spec{found->family, {}};
  std::size_t start = 0;
  while (!args.empty() && start <= args.size()) {
    auto end = args.find(',', start);
    if (end == std::string_view::npos) end = args.size();
    std::string_view tok = args.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw Error(ErrorKind::Syntax, "family spec: bad integer '" + std::string(tok) + "'");
    spec.params.push_back(value);
    start = end + 1;
  }
  if (spec.params.size() != found->arity)
    throw Error(ErrorKind::Precondition, "family '" + std::string(found->name) + "' takes " +
                                             std::to_string(found->arity) + " parameter(s)");
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(lookup(spec.family).name);
  if (spec.params.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out + ')';
}

Graph generate(const FamilySpec& spec) {
  const FamilyName& meta = lookup(spec.family);
  require(spec.params.size() == meta.arity,
          "family '" + std::string(meta.name) + "' takes " + std::to_string(meta.arity) + " parameter(s)");
  switch (spec.family) {
    case Family::Line:
      require(spec.params[0] >= 1, "line(n) needs n >= 1");
      return line_with_loops(spec.params[0], 0);
    case Family::Rose:
      require(spec.params[0] >= 1, "rose(n) needs n >= 1");
      return line_with_loops(1, spec.params[0]);
    case Family::Loop:
      return line_with_loops(1, 1);
    case Family::Enm:
      require(spec.params[0] >= 1 && spec.params[1] >= 1, "enm(n, m) needs n >= 1 and m >= 1");
      return line_with_loops(spec.params[1], spec.params[0]);
    case Family::Complete:
      require(spec.params[0] >= 1, "complete(k) needs k >= 1");
      return complete(spec.params[0]);
    case Family::K3:
      return complete(3);
    case Family::Chain3:
      return parse_graph_dsl(kChain3);
    case Family::Tri:
      return parse_graph_dsl(kTri);
    case Family::Mult2:
      return parse_graph_dsl(kMult2);
  }
  throw Error(ErrorKind::Internal, "unhandled family");
}

}  // namespace leavitt
