#include "leavitt/rank.hpp"

#include "leavitt/error.hpp"

namespace leavitt {

std::string_view to_string(StableRank r) {
  switch (r) {
    case StableRank::One:
      return "1";
    case StableRank::Two:
      return "2";
    case StableRank::Infinite:
      return "inf";
  }
  return "?";
}

StableRank stable_rank_from_string(std::string_view s) {
  if (s == "1") return StableRank::One;
  if (s == "2") return StableRank::Two;
  if (s == "inf") return StableRank::Infinite;
  throw Error(ErrorKind::Syntax, "stable rank must be \"1\", \"2\" or \"inf\"");
}

bool verify_pisu_quotient(const Graph& g, const HSSet& h) {
  if (h.set().universe() != g.vertex_count())
    throw Error(ErrorKind::Precondition, "vertex set does not belong to this graph");
  const Graph quotient = quotient_graph(g, h);
  if (quotient.empty()) return false;
  if (!sinks(quotient).empty()) return false;
  if (!condition_L(quotient)) return false;
  return is_cofinal(quotient);
}

std::optional<HSSet> has_pisu_quotient(const Graph& g, std::size_t cap) {
  const HSLattice lattice = enumerate_hs(g, cap);
  for (const HSSet& h : lattice.elements)
    if (verify_pisu_quotient(g, h)) return h;
  if (lattice.truncated)
    throw Error(ErrorKind::Inconclusive,
                "hereditary saturated lattice truncated at " + std::to_string(cap) +
                    " elements without a purely infinite simple quotient witness");
  return std::nullopt;
}

RankVerdict stable_rank(const Graph& g, std::size_t cap) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "stable rank is undefined for the empty graph");
  if (is_acyclic(g)) return {StableRank::One, AcyclicCertificate{}};
  if (auto h = has_pisu_quotient(g, cap)) return {StableRank::Infinite, WitnessH{*h}};
  return {StableRank::Two, WitnessCycle{*find_cycle(g)}};
}

StableRank cstar_stable_rank(const Graph& g, std::size_t cap) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "stable rank is undefined for the empty graph");
  if (!is_acyclic(g) && has_pisu_quotient(g, cap)) return StableRank::Infinite;
  return some_cycle_has_exit(g) ? StableRank::Two : StableRank::One;
}

}  // namespace leavitt
