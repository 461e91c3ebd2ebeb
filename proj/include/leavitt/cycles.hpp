#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt {

/// Closed path e₁…eₙ with s(e₁) = r(eₙ) = base that does not pass through
/// `base` in between (s(eᵢ) ≠ base for i > 1). Intermediate vertices may
/// repeat.
struct ClosedSimplePath {
  VertexIndex base = 0;
  std::vector<EdgeIndex> edges;

  bool operator==(const ClosedSimplePath&) const = default;
};

/// A closed simple path whose sources s(eᵢ) are pairwise distinct.
using Cycle = ClosedSimplePath;

/// Hard cap on the number of paths any single enumeration may produce.
inline constexpr std::size_t kPathEnumerationCap = 1'000'000;

/// Structural checks against g (consecutive edges, base condition).
bool is_closed_simple_path(const Graph& g, const ClosedSimplePath& p);
bool is_cycle(const Graph& g, const ClosedSimplePath& p);

/// Every cycle exactly once, rotated to start at its lexicographically least
/// vertex id; sorted by base id, then by edge-id sequence.
std::vector<Cycle> simple_cycles(const Graph& g, std::size_t cap = kPathEnumerationCap);

/// One cycle, found without full enumeration: based at the least vertex id
/// that lies on any cycle, following edges in declaration order.
std::optional<Cycle> find_cycle(const Graph& g);

/// CSP_E(v). When an intermediate cycle can be traversed any number of times
/// the set is infinite; then `paths` is empty and `infinite_witness` holds a
/// cycle avoiding v that such paths can wind around.
struct CspSet {
  std::vector<ClosedSimplePath> paths;
  std::optional<Cycle> infinite_witness;

  bool finite() const noexcept { return !infinite_witness.has_value(); }
};

CspSet csp_based_at(const Graph& g, VertexIndex v, std::size_t cap = kPathEnumerationCap);

/// min(|CSP_E(v)|, limit); an infinite set counts as `limit`.
std::size_t csp_count_at(const Graph& g, VertexIndex v, std::size_t limit);

bool has_exit(const Graph& g, const ClosedSimplePath& c);
bool condition_L(const Graph& g);
bool some_cycle_has_exit(const Graph& g);
bool condition_K(const Graph& g);
bool has_isolated_cycles(const Graph& g);

/// Vertices emitting two distinct edges whose ranges both reach back.
VertexSet x0_set(const Graph& g);

}  // namespace leavitt
