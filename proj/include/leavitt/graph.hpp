#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace leavitt {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
  std::string id;
  VertexIndex source;
  VertexIndex range;

  bool operator==(const Edge&) const = default;
};

/// Edge as declared by a caller, endpoints named by vertex id.
struct EdgeSpec {
  std::string id;
  std::string source;
  std::string range;
};

/// Subset of a graph's vertices. Membership is indexed by declaration order,
/// which is also the canonical iteration order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet full(std::size_t universe);
  static VertexSet of(std::size_t universe, std::initializer_list<VertexIndex> members);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(VertexIndex v) const { return v < bits_.size() && bits_[v]; }
  void insert(VertexIndex v) { bits_.at(v) = true; }
  void erase(VertexIndex v) { bits_.at(v) = false; }

  std::vector<VertexIndex> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;

  bool operator==(const VertexSet&) const = default;

  /// Orders by cardinality, then lexicographically by member indices.
  static bool canonical_less(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<bool> bits_;
};

/// Finite directed multigraph. Immutable once built; vertex order is the
/// declaration order and every edge endpoint is a declared vertex.
class Graph {
 public:
  Graph() = default;

  /// Validates ids (unique within their kind, well-formed) and endpoints.
  static Graph build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
  std::span<const std::string> vertex_ids() const noexcept { return vertices_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;
  /// Throws Error(UnknownVertex) if absent.
  VertexIndex vertex(std::string_view id) const;

  /// Edges emitted by v, in declaration order (s⁻¹(v)).
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_.at(v); }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_.at(v); }
  std::size_t out_degree(VertexIndex v) const { return out_.at(v).size(); }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> in_;
};

/// True if `id` can appear in the text DSL and in comma-separated set lists.
bool is_valid_id(std::string_view id);

/// Square matrix indexed by vertex declaration order; entry (u, v) counts
/// the edges u → v.
struct AdjacencyMatrix {
  std::size_t size = 0;
  std::vector<std::size_t> entries;  // row-major

  std::size_t at(VertexIndex u, VertexIndex v) const { return entries.at(u * size + v); }
  bool operator==(const AdjacencyMatrix&) const = default;
};

// Ingestion and serialization. `parse_graph` accepts either the text DSL or
// a JSON document (detected by a leading '{').
Graph parse_graph(std::string_view text);
Graph parse_graph_dsl(std::string_view text);
Graph parse_graph_json(std::string_view text);
std::string to_dsl(const Graph& g);
std::string to_json_text(const Graph& g);

// Vertex-set helpers.
VertexSet vertex_set_from_ids(const Graph& g, std::span<const std::string> ids);
/// Parses "v1,v2,..." (empty string is the empty set).
VertexSet parse_vertex_list(const Graph& g, std::string_view csv);
std::vector<std::string> ids_of(const Graph& g, const VertexSet& s);

// Elementary queries.
VertexSet sinks(const Graph& g);
bool reaches(const Graph& g, VertexIndex v, VertexIndex w);
bool reaches(const Graph& g, std::string_view v, std::string_view w);
/// All vertices reachable from v (v included).
VertexSet reachable_from(const Graph& g, VertexIndex v);
/// All vertices that reach v (v included).
VertexSet reaching(const Graph& g, VertexIndex v);
AdjacencyMatrix adjacency_matrix(const Graph& g);
bool is_acyclic(const Graph& g);

/// Strongly connected components, each sorted by vertex index; components are
/// listed in order of their smallest member.
std::vector<std::vector<VertexIndex>> strongly_connected_components(const Graph& g);

/// Subgraph on `keep` with every edge whose endpoints both lie in `keep`.
/// Ids are preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Same graph with vertices redeclared in the given order (a permutation of
/// the vertex indices). Edge order is preserved.
Graph reorder_vertices(const Graph& g, std::span<const VertexIndex> order);

}  // namespace leavitt
