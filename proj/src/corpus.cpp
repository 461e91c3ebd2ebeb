#include "leavitt/corpus.hpp"

#include <sstream>

#include "corpus_data.hpp"
#include "leavitt/error.hpp"
#include "leavitt/families.hpp"
#include "leavitt/hereditary.hpp"
#include "leavitt/ktheory.hpp"
#include "leavitt/rank.hpp"
#include "leavitt/report.hpp"

namespace leavitt {

using nlohmann::json;

namespace {

void add(CorpusResult& r, std::string field, const json& expected, const json& computed) {
  r.checks.push_back({std::move(field), expected.dump(), computed.dump(), expected == computed});
}

}  // namespace

bool CorpusResult::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string_view builtin_corpus_text() { return kBuiltinCorpus; }

std::vector<CorpusEntry> parse_corpus(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Syntax, std::string("corpus: ") + e.what());
  }
  try {
    if (doc.at("schema") != kSchemaVersion) throw Error(ErrorKind::Syntax, "corpus: unsupported schema version");
    std::vector<CorpusEntry> out;
    for (const auto& item : doc.at("entries")) {
      CorpusEntry e;
      e.name = item.at("name").get<std::string>();
      if (item.contains("family")) {
        e.source = item["family"].get<std::string>();
      } else {
        e.source = item.at("graph").get<std::string>();
        e.is_family = false;
      }
      e.note = item.value("note", "");
      e.expect = item.value("expect", json::object());
      out.push_back(std::move(e));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("corpus: ") + e.what());
  }
}

Graph corpus_graph(const CorpusEntry& entry) {
  return entry.is_family ? generate(parse_family_spec(entry.source)) : parse_graph(entry.source);
}

CorpusResult run_corpus_entry(const CorpusEntry& entry) {
  CorpusResult r;
  r.name = entry.name;
  try {
    const Graph g = corpus_graph(entry);
    const json& ex = entry.expect;
    if (ex.contains("sr")) add(r, "sr", ex["sr"], std::string(to_string(stable_rank(g).value)));
    if (ex.contains("cstar")) add(r, "cstar", ex["cstar"], std::string(to_string(cstar_stable_rank(g))));
    if (ex.contains("x0_closure"))
      add(r, "x0_closure", ex["x0_closure"], ids_of(g, hs_closure(g, x0_set(g)).set()));
    if (ex.contains("k0")) {
      const json k0 = k0_to_json(k0_presentation(g));
      for (const auto& [key, value] : ex["k0"].items())
        add(r, "k0." + key, value, k0.contains(key) ? k0[key] : json());
    }
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries) {
  std::vector<CorpusResult> out;
  for (const auto& e : entries) out.push_back(run_corpus_entry(e));
  return out;
}

bool all_pass(const std::vector<CorpusResult>& results) {
  for (const auto& r : results)
    if (!r.pass()) return false;
  return true;
}

std::string render_corpus_text(const std::vector<CorpusResult>& results) {
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) { return s.size() >= w ? s + ' ' : s + std::string(w - s.size(), ' '); };
  out << pad("graph", 10) << pad("field", 22) << pad("expected", 14) << pad("computed", 14) << "status\n";
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.pass()) ++passed;
    if (!r.error.empty()) {
      out << pad(r.name, 10) << "error: " << r.error << '\n';
      continue;
    }
    for (const auto& c : r.checks)
      out << pad(r.name, 10) << pad(c.field, 22) << pad(c.expected, 14) << pad(c.computed, 14)
          << (c.pass ? "ok" : "MISMATCH") << '\n';
  }
  out << passed << "/" << results.size() << " graphs match\n";
  return out.str();
}

json corpus_to_json(const std::vector<CorpusResult>& results) {
  json entries = json::array();
  for (const auto& r : results) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"field", c.field},
                        {"expected", json::parse(c.expected)},
                        {"computed", json::parse(c.computed)},
                        {"pass", c.pass}});
    json item{{"name", r.name}, {"pass", r.pass()}, {"checks", checks}};
    if (!r.error.empty()) item["error"] = r.error;
    entries.push_back(item);
  }
  return json{{"schema", kSchemaVersion}, {"pass", all_pass(results)}, {"entries", entries}};
}

}  // namespace leavitt
