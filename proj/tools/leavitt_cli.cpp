// Command-line front end. Talks to the library only through leavitt.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "leavitt/leavitt.h"

namespace {

enum Exit { kOk = 0, kFailure = 1, kInputError = 2, kInconclusive = 3 };

int exit_code(lv_status s) {
  switch (s) {
    case LV_OK: return kOk;
    case LV_ERR_INCONCLUSIVE:
    case LV_ERR_LIMIT: return kInconclusive;
    case LV_ERR_CHECK_FAILED:
    case LV_ERR_INTERNAL: return kFailure;
    default: return kInputError;
  }
}

struct GraphDeleter {
  void operator()(lv_graph* g) const { lv_graph_free(g); }
};
using GraphPtr = std::unique_ptr<lv_graph, GraphDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { lv_string_free(p); }
};

int report_error(lv_status s) {
  std::cerr << "leavitt: " << lv_status_name(s) << ": " << lv_last_error() << "\n";
  return exit_code(s);
}

struct InputOptions {
  std::string path;
  std::string gen;
  bool json = false;
  std::size_t cap = 0;

  lv_format format() const { return json ? LV_FORMAT_JSON : LV_FORMAT_TEXT; }
};

void add_input(CLI::App* cmd, InputOptions& in, bool with_cap) {
  cmd->add_option("input", in.path, "graph file (DSL or JSON); '-' reads standard input");
  cmd->add_option("--gen", in.gen, "generate a family graph, e.g. rose(3), enm(2,3), mult2");
  cmd->add_flag("--json", in.json, "machine-readable output");
  if (with_cap) cmd->add_option("--cap", in.cap, "cap on the hereditary saturated lattice enumeration");
}

// Loads the graph named by the input options; on failure prints a message
// and stores the exit code.
GraphPtr load(const InputOptions& in, int& code) {
  lv_graph* g = nullptr;
  lv_status s;
  if (!in.gen.empty()) {
    if (!in.path.empty()) {
      std::cerr << "leavitt: give either an input file or --gen, not both\n";
      code = kInputError;
      return nullptr;
    }
    s = lv_graph_generate(in.gen.c_str(), &g);
  } else {
    std::string text;
    if (in.path.empty() || in.path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream file(in.path, std::ios::binary);
      if (!file) {
        std::cerr << "leavitt: cannot read '" << in.path << "'\n";
        code = kInputError;
        return nullptr;
      }
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    s = lv_graph_parse(text.c_str(), &g);
  }
  if (s != LV_OK) {
    code = report_error(s);
    return nullptr;
  }
  return GraphPtr(g);
}

// Prints the string produced by a C API call, then maps its status.
int emit(lv_status s, const OwnedString& out) {
  if (out.p) std::cout << out.p;
  if (s != LV_OK) return report_error(s);
  return kOk;
}

int print_graph(const lv_graph* g, bool json) {
  OwnedString out;
  return emit(json ? lv_graph_to_json(g, &out.p) : lv_graph_to_dsl(g, &out.p), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable rank, K-theory and structure of Leavitt path algebras of finite graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lv_version_string());

  InputOptions in;
  std::string set, vertex, f_text, g_text, corpus_file;
  std::size_t count = 500, max_vertices = 6, max_edges = 10;
  std::uint64_t seed = 0;

  auto* report = app.add_subcommand("report", "full invariant report");
  add_input(report, in, true);
  auto* sr = app.add_subcommand("sr", "stable rank with certificate");
  add_input(sr, in, true);
  auto* k0 = app.add_subcommand("k0", "K0 group and the class of the identity");
  add_input(k0, in, false);
  auto* lattice = app.add_subcommand("lattice", "hereditary saturated vertex sets");
  add_input(lattice, in, true);
  auto* quotient = app.add_subcommand("quotient", "quotient graph E/H");
  add_input(quotient, in, false);
  quotient->add_option("--set", set, "comma-separated vertex ids")->required();
  auto* restrict = app.add_subcommand("restrict", "restriction graph to a hereditary set");
  add_input(restrict, in, false);
  restrict->add_option("--set", set, "comma-separated vertex ids")->required();
  auto* ideal = app.add_subcommand("ideal-graph", "graph realizing the ideal of a hereditary saturated set");
  add_input(ideal, in, false);
  ideal->add_option("--set", set, "comma-separated vertex ids")->required();
  auto* csp = app.add_subcommand("csp", "closed simple paths based at a vertex");
  add_input(csp, in, false);
  csp->add_option("--vertex", vertex, "vertex id")->required();
  auto* laurent = app.add_subcommand("laurent-check", "comaximality and reducibility of a row (f, g)");
  laurent->add_option("f", f_text, "Laurent polynomial, e.g. 1+z")->required();
  laurent->add_option("g", g_text, "Laurent polynomial, e.g. 1+z^2")->required();
  laurent->add_flag("--json", in.json, "machine-readable output");
  auto* corpus = app.add_subcommand("corpus", "check the built-in example graphs against known values");
  corpus->add_option("--file", corpus_file, "corpus JSON file to run instead of the built-in one");
  corpus->add_flag("--json", in.json, "machine-readable output");
  auto* fuzz = app.add_subcommand("fuzz", "cross-check invariants on seeded random graphs");
  fuzz->add_option("--count", count, "number of graphs");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--max-vertices", max_vertices, "at most this many vertices");
  fuzz->add_option("--max-edges", max_edges, "at most this many edges");
  fuzz->add_flag("--json", in.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  OwnedString out;
  int code = kOk;

  if (laurent->parsed()) {
    int kind = 0;
    const lv_status s = lv_laurent_check(f_text.c_str(), g_text.c_str(), in.format(), &kind, &out.p);
    code = emit(s, out);
    return code == kOk && kind == 2 ? kInconclusive : code;
  }
  if (corpus->parsed()) {
    std::string text;
    if (!corpus_file.empty()) {
      std::ifstream file(corpus_file, std::ios::binary);
      if (!file) {
        std::cerr << "leavitt: cannot read '" << corpus_file << "'\n";
        return kInputError;
      }
      text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return emit(lv_corpus_run(corpus_file.empty() ? nullptr : text.c_str(), in.format(), &out.p), out);
  }
  if (fuzz->parsed())
    return emit(lv_fuzz(count, max_vertices, max_edges, seed, in.format(), &out.p), out);

  GraphPtr g = load(in, code);
  if (!g) return code;

  if (report->parsed()) return emit(lv_report(g.get(), in.cap, in.format(), &out.p), out);
  if (sr->parsed()) return emit(lv_stable_rank(g.get(), in.cap, in.format(), nullptr, &out.p), out);
  if (k0->parsed()) return emit(lv_k0(g.get(), in.format(), &out.p), out);
  if (lattice->parsed()) return emit(lv_lattice(g.get(), in.cap, in.format(), &out.p), out);
  if (csp->parsed()) return emit(lv_csp(g.get(), vertex.c_str(), in.format(), &out.p), out);
  if (quotient->parsed() || restrict->parsed()) {
    lv_graph* result = nullptr;
    const lv_status s = quotient->parsed() ? lv_quotient(g.get(), set.c_str(), &result)
                                           : lv_restrict(g.get(), set.c_str(), &result);
    if (s != LV_OK) return report_error(s);
    GraphPtr owned(result);
    return print_graph(owned.get(), in.json);
  }
  if (ideal->parsed()) {
    lv_graph* result = nullptr;
    const lv_status s = lv_ideal_graph(g.get(), set.c_str(), &result, &out.p);
    if (s != LV_OK) return report_error(s);
    if (out.p) {
      if (in.json) {
        std::cout << out.p;
      } else {
        std::cout << "F_E(X) is infinite: a cycle outside X reaches X\n" << out.p;
      }
      return kOk;
    }
    GraphPtr owned(result);
    return print_graph(owned.get(), in.json);
  }
  return kInputError;
}
