#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "leavitt/graph.hpp"

namespace leavitt {

/// One named graph with the values it is expected to produce. Absent
/// expectations are not checked.
struct CorpusEntry {
  std::string name;
  std::string source;  // family spec or DSL text
  bool is_family = true;
  std::string note;
  nlohmann::json expect;
};

struct CorpusCheck {
  std::string field;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CorpusResult {
  std::string name;
  std::vector<CorpusCheck> checks;
  std::string error;  // set when the entry could not be evaluated

  bool pass() const;
};

/// The corpus compiled into the library.
std::string_view builtin_corpus_text();

std::vector<CorpusEntry> parse_corpus(std::string_view json_text);
Graph corpus_graph(const CorpusEntry& entry);
CorpusResult run_corpus_entry(const CorpusEntry& entry);
std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries);

bool all_pass(const std::vector<CorpusResult>& results);
std::string render_corpus_text(const std::vector<CorpusResult>& results);
nlohmann::json corpus_to_json(const std::vector<CorpusResult>& results);

}  // namespace leavitt
