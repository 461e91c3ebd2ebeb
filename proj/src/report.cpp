#include "leavitt/report.hpp"

#include <limits>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

using nlohmann::json;

namespace {

std::string braces(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> edge_ids(const Graph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<std::string> out;
  for (EdgeIndex e : edges) out.push_back(g.edge(e).id);
  return out;
}

}  // namespace

std::string k0_group_text(const K0Presentation& k0) {
  std::vector<std::string> parts;
  for (const auto& d : k0.invariant_factors) parts.push_back("Z/" + d.get_str());
  if (k0.free_rank == 1) parts.push_back("Z");
  if (k0.free_rank > 1) parts.push_back("Z^" + std::to_string(k0.free_rank));
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorKind::Syntax, std::string("report JSON: missing array '") + key + "'");
  return j[key].get<std::vector<std::string>>();
}

}  // namespace

CertificateRecord certificate_record(const Graph& g, const RankCertificate& c) {
  CertificateRecord rec;
  if (std::holds_alternative<AcyclicCertificate>(c)) {
    rec.kind = "acyclic";
  } else if (const auto* h = std::get_if<WitnessH>(&c)) {
    rec.kind = "witness_h";
    rec.set = ids_of(g, h->h.set());
  } else {
    const auto& cyc = std::get<WitnessCycle>(c).cycle;
    rec.kind = "witness_cycle";
    rec.base = g.vertex_id(cyc.base);
    rec.edges = edge_ids(g, cyc.edges);
  }
  return rec;
}

std::string explain(const Graph& g, const RankVerdict& v) {
  const CertificateRecord rec = certificate_record(g, v.certificate);
  switch (v.value) {
    case StableRank::One:
      return "sr(L(E)) = 1: the graph is acyclic.";
    case StableRank::Infinite:
      return "sr(L(E)) = inf: H = " + braces(rec.set) +
             " is hereditary and saturated, and E/H is nonempty, cofinal, has no sinks and every "
             "cycle in it has an exit, so L(E) has a unital purely infinite simple quotient.";
    case StableRank::Two: {
      std::string cyc;
      for (std::size_t i = 0; i < rec.edges.size(); ++i) cyc += (i ? " " : "") + rec.edges[i];
      return "sr(L(E)) = 2: the graph has a cycle (" + cyc + " at " + rec.base +
             ") and no hereditary saturated H gives a quotient E/H that is nonempty, cofinal, "
             "sink-free and has exits on all cycles.";
    }
  }
  return {};
}

Report build_report(const Graph& g, std::size_t cap) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "cannot report on the empty graph");
  Report r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.sinks = ids_of(g, sinks(g));
  r.acyclic = is_acyclic(g);
  r.cofinal = is_cofinal(g);
  r.condition_l = condition_L(g);
  r.condition_k = condition_K(g);
  r.isolated_cycles = has_isolated_cycles(g);
  const VertexSet x0 = x0_set(g);
  r.x0 = ids_of(g, x0);
  r.x0_closure = ids_of(g, hs_closure(g, x0).set());
  const HSLattice lattice = enumerate_hs(g, cap);
  r.lattice_size = lattice.elements.size();
  r.lattice_truncated = lattice.truncated;
  const RankVerdict verdict = stable_rank(g, cap);
  r.sr = verdict.value;
  r.certificate = certificate_record(g, verdict.certificate);
  r.cstar = cstar_stable_rank(g, cap);
  r.k0 = k0_presentation(g);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  auto row = [&](const char* label, const std::string& value) {
    out << label;
    for (std::size_t i = std::string_view(label).size(); i < 18; ++i) out << ' ';
    out << value << '\n';
  };
  row("vertices", std::to_string(r.vertex_count));
  row("edges", std::to_string(r.edge_count));
  row("sinks", braces(r.sinks));
  row("acyclic", yes_no(r.acyclic));
  row("cofinal", yes_no(r.cofinal));
  row("condition (L)", yes_no(r.condition_l));
  row("condition (K)", yes_no(r.condition_k));
  row("isolated cycles", yes_no(r.isolated_cycles));
  row("X0", braces(r.x0));
  row("X0 closure", braces(r.x0_closure));
  row("lattice size", std::to_string(r.lattice_size) + (r.lattice_truncated ? " (truncated)" : ""));
  row("sr L(E)", std::string(to_string(r.sr)));
  row("sr C*(E)", std::string(to_string(r.cstar)));
  row("K0", k0_group_text(r.k0));
  row("[1]", "torsion order " + r.k0.one_torsion_order.get_str() + ", free gcd " +
                 r.k0.one_free_gcd.get_str());
  if (r.certificate.kind == "acyclic") {
    row("certificate", "acyclic");
  } else if (r.certificate.kind == "witness_h") {
    row("certificate", "H = " + braces(r.certificate.set));
  } else {
    std::string edges;
    for (const auto& e : r.certificate.edges) edges += (edges.empty() ? "" : " ") + e;
    row("certificate", "cycle " + edges + " at " + r.certificate.base);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(ErrorKind::Syntax, "expected an integer");
}

json to_json(const CertificateRecord& c) {
  json j{{"kind", c.kind}};
  if (c.kind == "witness_h") j["set"] = c.set;
  if (c.kind == "witness_cycle") {
    j["base"] = c.base;
    j["edges"] = c.edges;
  }
  return j;
}

CertificateRecord certificate_from_json(const json& j) {
  CertificateRecord c;
  c.kind = j.at("kind").get<std::string>();
  if (c.kind == "witness_h") {
    c.set = string_list(j, "set");
  } else if (c.kind == "witness_cycle") {
    c.base = j.at("base").get<std::string>();
    c.edges = string_list(j, "edges");
  } else if (c.kind != "acyclic") {
    throw Error(ErrorKind::Syntax, "unknown certificate kind '" + c.kind + "'");
  }
  return c;
}

json k0_to_json(const K0Presentation& k0) {
  json torsion = json::array(), one = json::array();
  for (const auto& d : k0.invariant_factors) torsion.push_back(mpz_to_json(d));
  for (const auto& c : k0.one_class) one.push_back(mpz_to_json(c));
  return json{{"torsion", torsion},
              {"free_rank", k0.free_rank},
              {"one_class", one},
              {"one_torsion_order", mpz_to_json(k0.one_torsion_order)},
              {"one_free_gcd", mpz_to_json(k0.one_free_gcd)}};
}

namespace {

K0Presentation k0_from_json(const json& j) {
  K0Presentation k0;
  for (const auto& d : j.at("torsion")) k0.invariant_factors.push_back(mpz_from_json(d));
  k0.free_rank = j.at("free_rank").get<std::size_t>();
  if (j.contains("one_class"))
    for (const auto& c : j["one_class"]) k0.one_class.push_back(mpz_from_json(c));
  k0.one_torsion_order = mpz_from_json(j.at("one_torsion_order"));
  k0.one_free_gcd = mpz_from_json(j.at("one_free_gcd"));
  return k0;
}

}  // namespace

json to_json(const Report& r) {
  return json{
      {"schema", kSchemaVersion},
      {"graph", {{"vertices", r.vertex_count}, {"edges", r.edge_count}, {"sinks", r.sinks}}},
      {"conditions",
       {{"acyclic", r.acyclic},
        {"cofinal", r.cofinal},
        {"condition_l", r.condition_l},
        {"condition_k", r.condition_k},
        {"isolated_cycles", r.isolated_cycles}}},
      {"x0", r.x0},
      {"x0_closure", r.x0_closure},
      {"lattice", {{"size", r.lattice_size}, {"truncated", r.lattice_truncated}}},
      {"rank", {{"sr", std::string(to_string(r.sr))}, {"certificate", to_json(r.certificate)}}},
      {"cstar_sr", std::string(to_string(r.cstar))},
      {"k0", k0_to_json(r.k0)},
  };
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema") != kSchemaVersion) throw Error(ErrorKind::Syntax, "unsupported schema version");
    Report r;
    const json& graph = j.at("graph");
    r.vertex_count = graph.at("vertices").get<std::size_t>();
    r.edge_count = graph.at("edges").get<std::size_t>();
    r.sinks = string_list(graph, "sinks");
    const json& c = j.at("conditions");
    r.acyclic = c.at("acyclic").get<bool>();
    r.cofinal = c.at("cofinal").get<bool>();
    r.condition_l = c.at("condition_l").get<bool>();
    r.condition_k = c.at("condition_k").get<bool>();
    r.isolated_cycles = c.at("isolated_cycles").get<bool>();
    r.x0 = string_list(j, "x0");
    r.x0_closure = string_list(j, "x0_closure");
    r.lattice_size = j.at("lattice").at("size").get<std::size_t>();
    r.lattice_truncated = j.at("lattice").at("truncated").get<bool>();
    r.sr = stable_rank_from_string(j.at("rank").at("sr").get<std::string>());
    r.certificate = certificate_from_json(j.at("rank").at("certificate"));
    r.cstar = stable_rank_from_string(j.at("cstar_sr").get<std::string>());
    r.k0 = k0_from_json(j.at("k0"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Syntax, std::string("report JSON: ") + e.what());
  }
}

json verdict_to_json(const Graph& g, const RankVerdict& v) {
  return json{{"schema", kSchemaVersion},
              {"sr", std::string(to_string(v.value))},
              {"certificate", to_json(certificate_record(g, v.certificate))}};
}

json lattice_to_json(const Graph& g, const HSLattice& lattice) {
  json elements = json::array();
  for (const HSSet& h : lattice.elements) elements.push_back(ids_of(g, h.set()));
  return json{{"schema", kSchemaVersion}, {"elements", elements}, {"truncated", lattice.truncated}};
}

json paths_to_json(const Graph& g, const std::vector<ClosedSimplePath>& paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(edge_ids(g, p.edges));
  return out;
}

json csp_to_json(const Graph& g, VertexIndex v, const CspSet& csps) {
  json j{{"schema", kSchemaVersion},
         {"vertex", g.vertex_id(v)},
         {"finite", csps.finite()},
         {"paths", paths_to_json(g, csps.paths)}};
  if (csps.infinite_witness) j["witness_cycle"] = edge_ids(g, csps.infinite_witness->edges);
  return j;
}

json laurent_check_to_json(const LaurentPoly& f, const LaurentPoly& g,
                           const std::optional<std::pair<LaurentPoly, LaurentPoly>>& bez,
                           const ReductionOutcome& outcome) {
  json j{{"schema", kSchemaVersion}, {"f", f.to_string()}, {"g", g.to_string()}};
  if (bez)
    j["bezout"] = {{"a", bez->first.to_string()}, {"b", bez->second.to_string()}};
  else
    j["bezout"] = nullptr;
  if (const auto* r = std::get_if<Reducible>(&outcome)) {
    j["reduction"] = {{"kind", "reducible"}, {"v", r->v.to_string()}, {"unit", (f + r->v * g).to_string()}};
  } else if (const auto* p = std::get_if<IrreducibleProof>(&outcome)) {
    json residues = json::array();
    for (const auto& res : p->residues) residues.push_back(res.to_string());
    j["reduction"] = {{"kind", "irreducible"},
                      {"modulus", p->modulus.to_string()},
                      {"period", p->period},
                      {"residues", residues},
                      {"target", p->target.to_string()},
                      {"verified", verify_irreducible(f, g, *p)}};
  } else {
    j["reduction"] = {{"kind", "inconclusive"}};
  }
  return j;
}

}  // namespace leavitt
