#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "leavitt/cycles.hpp"
#include "leavitt/graph.hpp"
#include "leavitt/hereditary.hpp"

namespace leavitt {

enum class StableRank { One = 1, Two = 2, Infinite = 3 };

/// "1", "2" or "inf".
std::string_view to_string(StableRank r);
StableRank stable_rank_from_string(std::string_view s);

struct AcyclicCertificate {
  bool operator==(const AcyclicCertificate&) const = default;
};

/// H whose quotient E/H is nonempty, cofinal, sink-free and has an exit on
/// every cycle.
struct WitnessH {
  HSSet h;
  bool operator==(const WitnessH&) const = default;
};

struct WitnessCycle {
  Cycle cycle;
  bool operator==(const WitnessCycle&) const = default;
};

using RankCertificate = std::variant<AcyclicCertificate, WitnessH, WitnessCycle>;

struct RankVerdict {
  StableRank value;
  RankCertificate certificate;
};

bool verify_pisu_quotient(const Graph& g, const HSSet& h);

/// Smallest passing H (by size, then lexicographically) in the lattice.
/// Throws Error(Inconclusive) if the lattice was truncated and no witness was
/// found among the enumerated elements.
std::optional<HSSet> has_pisu_quotient(const Graph& g, std::size_t cap = kDefaultLatticeCap);

RankVerdict stable_rank(const Graph& g, std::size_t cap = kDefaultLatticeCap);

/// Stable rank of the graph C*-algebra: infinite under the same quotient
/// criterion, otherwise 1 when no cycle has an exit and 2 when one does.
StableRank cstar_stable_rank(const Graph& g, std::size_t cap = kDefaultLatticeCap);

}  // namespace leavitt
