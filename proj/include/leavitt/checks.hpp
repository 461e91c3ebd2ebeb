#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leavitt/graph.hpp"
#include "leavitt/ktheory.hpp"

namespace leavitt {

// Brute-force oracles. They work on bitmasks of vertex indices and share no
// code with the library algorithms they check, so they are limited to small
// graphs (Error(Precondition) above kOracleMaxVertices).

inline constexpr std::size_t kOracleMaxVertices = 12;

using Mask = std::uint32_t;

Mask to_mask(const VertexSet& s);
VertexSet from_mask(std::size_t universe, Mask m);

/// Transitive-reflexive closure of the adjacency relation by repeated boolean
/// matrix products. Row v is the set reachable from v.
std::vector<Mask> oracle_reach(const Graph& g);
/// Every hereditary saturated subset, found by testing all 2^n subsets.
std::vector<Mask> oracle_hs_sets(const Graph& g);
/// Intersection of all hereditary saturated sets containing s.
Mask oracle_hs_closure(const Graph& g, Mask s);
/// Closed simple paths based at v with at most `max_len` edges.
std::vector<std::vector<EdgeIndex>> oracle_bounded_csps(const Graph& g, VertexIndex v, std::size_t max_len);
bool oracle_isolated_cycles(const Graph& g);
bool oracle_condition_L(const Graph& g);
bool oracle_condition_K(const Graph& g);
Mask oracle_x0(const Graph& g);
/// Number of cycles counted through their rotations.
std::size_t oracle_cycle_count(const Graph& g);
/// Direct check of the quotient conditions on E/H.
bool oracle_pisu(const Graph& g, Mask h);
/// Paths entering X at their last edge, of length at most max_len.
std::vector<std::vector<EdgeIndex>> oracle_entry_paths(const Graph& g, Mask x, std::size_t max_len);

mpz_class bareiss_determinant(const IntMatrix& m);

// Random inputs. Vertex ids v1..vn, edge ids e1..em; both counts drawn
// uniformly (at least one vertex).
Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges);
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long lo, long hi);

/// A named invariant; returns a description of the violation, if any.
struct GraphCheck {
  std::string name;
  std::function<std::optional<std::string>(const Graph&)> run;
};

/// Every cross-module invariant, in a fixed order.
const std::vector<GraphCheck>& graph_checks();
const GraphCheck& graph_check(const std::string& name);

struct CheckFailure {
  std::string property;
  std::string detail;
};

std::optional<CheckFailure> check_graph(const Graph& g);
std::optional<std::string> check_snf(const IntMatrix& m);

struct FuzzOptions {
  std::size_t count = 500;
  std::size_t max_vertices = 6;
  std::size_t max_edges = 10;
  std::uint64_t seed = 0;
};

struct FuzzResult {
  std::size_t tested = 0;
  std::optional<CheckFailure> failure;
  std::string counterexample_dsl;
};

/// Runs graph_checks() on `count` seeded random graphs and check_snf on the
/// K0 relation matrix of each; stops at the first counterexample.
FuzzResult fuzz(const FuzzOptions& options);

}  // namespace leavitt
