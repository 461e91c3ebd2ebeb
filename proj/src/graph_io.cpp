#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "leavitt/error.hpp"
#include "leavitt/graph.hpp"

namespace leavitt {

namespace {

using nlohmann::json;

/// Edge statement before auto-id assignment and multiplicity expansion.
struct PendingEdge {
  std::optional<std::string> id;
  std::string source;
  std::string range;
  std::size_t multiplicity = 1;
  std::size_t line = 0;
  std::size_t source_col = 0;
  std::size_t range_col = 0;
};

struct Declarations {
  std::vector<std::string> vertices;
  std::vector<std::size_t> vertex_lines;
  std::vector<std::size_t> vertex_cols;
  std::vector<PendingEdge> edges;
};

bool is_id_char(std::string_view rest) {
  const unsigned char c = static_cast<unsigned char>(rest.front());
  if (c <= 0x20 || c == 0x7f) return false;
  if (c == ':' || c == '#' || c == ',' || c == '*' || c == '"') return false;
  if (rest.starts_with("->")) return false;
  return true;
}

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r'))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t column() const { return pos_ + 1; }

  bool consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string read_id(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_id_char(text_.substr(pos_))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t read_count() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) fail("expected a positive multiplicity");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (value == 0) {
      pos_ = start;
      fail("multiplicity must be at least 1");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, pos_ + 1, msg); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

void parse_line(std::string_view raw, std::size_t line_no, Declarations& decl) {
  std::string_view line = raw.substr(0, raw.find('#'));
  LineCursor cur(line, line_no);
  if (cur.at_end()) return;

  if (cur.consume("vertices")) {
    if (!cur.consume(":")) cur.fail("expected ':' after 'vertices'");
    while (!cur.at_end()) {
      const std::size_t col = cur.column();
      decl.vertices.push_back(cur.read_id("a vertex id"));
      decl.vertex_lines.push_back(line_no);
      decl.vertex_cols.push_back(col);
    }
    return;
  }

  if (!cur.consume("edge")) cur.fail("expected 'vertices:' or 'edge'");
  PendingEdge edge;
  edge.line = line_no;
  edge.source_col = (cur.skip_ws(), cur.column());
  std::string first = cur.read_id("an edge id or source vertex");
  if (cur.consume(":")) {
    edge.id = std::move(first);
    edge.source_col = (cur.skip_ws(), cur.column());
    edge.source = cur.read_id("a source vertex");
  } else {
    edge.source = std::move(first);
  }
  if (!cur.consume("->")) cur.fail("expected '->'");
  edge.range_col = (cur.skip_ws(), cur.column());
  edge.range = cur.read_id("a range vertex");
  if (cur.consume("*")) edge.multiplicity = cur.read_count();
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  decl.edges.push_back(std::move(edge));
}

/// Expands multiplicities and assigns `e<n>` ids, skipping explicit ids.
Graph assemble(Declarations decl) {
  std::unordered_set<std::string> seen_vertices;
  for (std::size_t i = 0; i < decl.vertices.size(); ++i) {
    if (!seen_vertices.insert(decl.vertices[i]).second) {
      const std::string where = decl.vertex_lines[i] == 0
                                    ? std::string()
                                    : "line " + std::to_string(decl.vertex_lines[i]) +
                                          ", column " + std::to_string(decl.vertex_cols[i]) + ": ";
      throw Error(ErrorKind::DuplicateId, where + "duplicate vertex id '" + decl.vertices[i] + "'");
    }
  }

  auto where = [](const PendingEdge& e, std::size_t col) {
    if (e.line == 0) return std::string();
    return "line " + std::to_string(e.line) + ", column " + std::to_string(col) + ": ";
  };

  std::unordered_set<std::string> used;
  for (const auto& e : decl.edges) {
    if (!seen_vertices.contains(e.source))
      throw Error(ErrorKind::UnknownVertex,
                  where(e, e.source_col) + "undeclared vertex '" + e.source + "'");
    if (!seen_vertices.contains(e.range))
      throw Error(ErrorKind::UnknownVertex,
                  where(e, e.range_col) + "undeclared vertex '" + e.range + "'");
    if (!e.id) continue;
    auto claim = [&](const std::string& id) {
      if (!used.insert(id).second)
        throw Error(ErrorKind::DuplicateId, where(e, e.source_col) + "duplicate edge id '" + id + "'");
    };
    if (e.multiplicity == 1 && e.id) {
      claim(*e.id);
    } else {
      for (std::size_t k = 1; k <= e.multiplicity; ++k) claim(*e.id + "_" + std::to_string(k));
    }
  }

  std::vector<EdgeSpec> specs;
  std::size_t counter = 0;
  auto next_auto = [&] {
    std::string id;
    do {
      id = "e" + std::to_string(++counter);
    } while (used.contains(id));
    used.insert(id);
    return id;
  };
  for (const auto& e : decl.edges) {
    for (std::size_t k = 1; k <= e.multiplicity; ++k) {
      std::string id;
      if (!e.id)
        id = next_auto();
      else if (e.multiplicity == 1)
        id = *e.id;
      else
        id = *e.id + "_" + std::to_string(k);
      specs.push_back({std::move(id), e.source, e.range});
    }
  }
  return Graph::build(std::move(decl.vertices), specs);
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Graph parse_graph_dsl(std::string_view text) {
  Declarations decl;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    parse_line(text.substr(start, end - start), ++line_no, decl);
    start = end + 1;
  }
  return assemble(std::move(decl));
}

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw SyntaxError(line, col, "malformed JSON");
  }
  auto bad = [](const std::string& msg) -> Error { return Error(ErrorKind::Syntax, msg); };
  if (!doc.is_object()) throw bad("graph JSON must be an object");
  if (doc.contains("schema") && doc["schema"] != 1) throw bad("unsupported schema version");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw bad("graph JSON needs a \"vertices\" array");

  Declarations decl;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw bad("vertex ids must be strings");
    decl.vertices.push_back(v.get<std::string>());
    decl.vertex_lines.push_back(0);
    decl.vertex_cols.push_back(0);
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw bad("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_object()) throw bad("each edge must be an object");
      PendingEdge edge;
      if (e.contains("id")) {
        if (!e["id"].is_string()) throw bad("edge id must be a string");
        edge.id = e["id"].get<std::string>();
      }
      if (!e.contains("src") || !e["src"].is_string() || !e.contains("dst") || !e["dst"].is_string())
        throw bad("each edge needs string \"src\" and \"dst\"");
      edge.source = e["src"].get<std::string>();
      edge.range = e["dst"].get<std::string>();
      if (e.contains("mult")) {
        if (!e["mult"].is_number_integer() || e["mult"].get<long long>() < 1)
          throw bad("\"mult\" must be a positive integer");
        edge.multiplicity = e["mult"].get<std::size_t>();
      }
      decl.edges.push_back(std::move(edge));
    }
  }
  return assemble(std::move(decl));
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_graph_json(text);
  return parse_graph_dsl(text);
}

std::string to_dsl(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : g.vertex_ids()) out << ' ' << v;
  out << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << e.id << ": " << g.vertex_id(e.source) << " -> " << g.vertex_id(e.range) << '\n';
  return out.str();
}

std::string to_json_text(const Graph& g) {
  json doc;
  doc["schema"] = 1;
  doc["vertices"] = json::array();
  for (const auto& v : g.vertex_ids()) doc["vertices"].push_back(v);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back({{"id", e.id}, {"src", g.vertex_id(e.source)}, {"dst", g.vertex_id(e.range)}});
  return doc.dump(2);
}

}  // namespace leavitt
