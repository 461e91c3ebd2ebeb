#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "leavitt/cycles.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/hereditary.hpp"
#include "leavitt/ktheory.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/rank.hpp"

namespace leavitt {

inline constexpr int kSchemaVersion = 1;

/// A rank certificate spelled with vertex and edge ids, detached from the
/// graph it was computed on.
struct CertificateRecord {
  std::string kind;                // "acyclic" | "witness_h" | "witness_cycle"
  std::vector<std::string> set;    // witness_h
  std::string base;                // witness_cycle
  std::vector<std::string> edges;  // witness_cycle

  bool operator==(const CertificateRecord&) const = default;
};

struct Report {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::vector<std::string> sinks;
  bool acyclic = false;
  bool cofinal = false;
  bool condition_l = false;
  bool condition_k = false;
  bool isolated_cycles = false;
  std::vector<std::string> x0;
  std::vector<std::string> x0_closure;
  std::size_t lattice_size = 0;
  bool lattice_truncated = false;
  StableRank sr = StableRank::One;
  CertificateRecord certificate;
  StableRank cstar = StableRank::One;
  K0Presentation k0;

  bool operator==(const Report&) const = default;
};

Report build_report(const Graph& g, std::size_t cap = kDefaultLatticeCap);
std::string render_text(const Report& r);
/// The group as a direct sum, e.g. "Z/2 + Z"; "0" for the trivial group.
std::string k0_group_text(const K0Presentation& k0);

CertificateRecord certificate_record(const Graph& g, const RankCertificate& c);
/// One-paragraph account of which branch of the classification fired.
std::string explain(const Graph& g, const RankVerdict& v);

// JSON. Every top-level document carries "schema": 1. Integers that do not
// fit in 64 bits are written as decimal strings.
nlohmann::json mpz_to_json(const mpz_class& z);
mpz_class mpz_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CertificateRecord& c);
CertificateRecord certificate_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Graph& g, const RankVerdict& v);
nlohmann::json k0_to_json(const K0Presentation& k0);
nlohmann::json lattice_to_json(const Graph& g, const HSLattice& lattice);
nlohmann::json paths_to_json(const Graph& g, const std::vector<ClosedSimplePath>& paths);
nlohmann::json csp_to_json(const Graph& g, VertexIndex v, const CspSet& csps);
nlohmann::json laurent_check_to_json(const LaurentPoly& f, const LaurentPoly& g,
                                     const std::optional<std::pair<LaurentPoly, LaurentPoly>>& bez,
                                     const ReductionOutcome& outcome);

}  // namespace leavitt
