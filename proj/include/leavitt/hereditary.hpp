#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "leavitt/cycles.hpp"
#include "leavitt/graph.hpp"

namespace leavitt {

/// A vertex set known to be hereditary and saturated in the graph it was
/// checked against. Only produced by `hs_closure`, `HSSet::verify` and the
/// lattice operations.
class HSSet {
 public:
  /// Throws Error(Precondition) unless `s` is hereditary and saturated in g.
  static HSSet verify(const Graph& g, const VertexSet& s);

  const VertexSet& set() const noexcept { return set_; }
  std::size_t size() const noexcept { return set_.size(); }
  bool empty() const noexcept { return set_.empty(); }

  bool operator==(const HSSet&) const = default;

 private:
  friend HSSet hs_closure(const Graph&, const VertexSet&);
  friend HSSet hs_meet(const Graph&, const HSSet&, const HSSet&);
  explicit HSSet(VertexSet s) : set_(std::move(s)) {}

  VertexSet set_;
};

struct HSLattice {
  std::vector<HSSet> elements;  // sorted by size, then lexicographically
  bool truncated = false;
};

inline constexpr std::size_t kDefaultLatticeCap = 4096;

bool is_hereditary(const Graph& g, const VertexSet& s);
bool is_saturated(const Graph& g, const VertexSet& s);

VertexSet hereditary_closure(const Graph& g, const VertexSet& s);
HSSet hs_closure(const Graph& g, const VertexSet& s);
HSLattice enumerate_hs(const Graph& g, std::size_t cap = kDefaultLatticeCap);
HSSet hs_join(const Graph& g, const HSSet& a, const HSSet& b);
HSSet hs_meet(const Graph& g, const HSSet& a, const HSSet& b);

/// Every vertex generates the whole vertex set as a hereditary saturated set.
/// Throws Error(EmptyGraph) on the empty graph.
bool is_cofinal(const Graph& g);

/// E/X: vertices outside X, edges whose range lies outside X.
Graph quotient_graph(const Graph& g, const HSSet& x);
/// E_H: vertices of H, edges emitted from H. Throws unless H is hereditary.
Graph restriction_graph(const Graph& g, const VertexSet& h);

/// F_E(X) is infinite exactly when a cycle outside X can reach X.
struct InfiniteWitness {
  Cycle cycle;
};

/// One element of F_E(X): a path starting outside X that first enters X at
/// its final edge.
struct EntryPath {
  std::vector<EdgeIndex> edges;
};

struct IdealGraph {
  Graph graph;
  std::vector<EntryPath> entry_paths;  // F_E(X), in the order of the new vertices
};

/// The graph whose vertices are X together with F_E(X), with edges those
/// emitted from X plus one edge from each α ∈ F_E(X) to r(α). New vertex ids
/// are `[e1.e2...]` and new edge ids `~[e1.e2...]` (primes appended on
/// collision).
std::variant<IdealGraph, InfiniteWitness> ideal_graph(const Graph& g, const HSSet& x);

}  // namespace leavitt
