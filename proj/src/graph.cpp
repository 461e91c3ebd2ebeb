#include "leavitt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "leavitt/error.hpp"

namespace leavitt {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), true);
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<VertexIndex> members) {
  VertexSet s(universe);
  for (VertexIndex v : members) s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexIndex> VertexSet::members() const {
  std::vector<VertexIndex> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(i)) return false;
  return true;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet out(std::max(universe(), other.universe()));
  for (std::size_t i = 0; i < out.universe(); ++i)
    if (contains(i) || other.contains(i)) out.insert(i);
  return out;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet out(std::max(universe(), other.universe()));
  for (std::size_t i = 0; i < out.universe(); ++i)
    if (contains(i) && other.contains(i)) out.insert(i);
  return out;
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  VertexSet out(universe());
  for (std::size_t i = 0; i < out.universe(); ++i)
    if (contains(i) && !other.contains(i)) out.insert(i);
  return out;
}

bool VertexSet::canonical_less(const VertexSet& a, const VertexSet& b) {
  const auto sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.members() < b.members();
}

// ---------------------------------------------------------------------------
// Graph

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  if (id.find("->") != std::string_view::npos) return false;
  for (unsigned char c : id) {
    if (c <= 0x20 || c == 0x7f) return false;
    if (c == ':' || c == '#' || c == ',' || c == '*' || c == '"') return false;
  }
  return true;
}

Graph Graph::build(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges) {
  Graph g;
  std::unordered_map<std::string, VertexIndex> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!is_valid_id(vertices[i]))
      throw Error(ErrorKind::Syntax, "invalid vertex id '" + vertices[i] + "'");
    if (!index.emplace(vertices[i], i).second)
      throw Error(ErrorKind::DuplicateId, "duplicate vertex id '" + vertices[i] + "'");
  }
  g.vertices_ = std::move(vertices);
  g.out_.resize(g.vertices_.size());
  g.in_.resize(g.vertices_.size());

  std::unordered_set<std::string> edge_ids;
  g.edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (!is_valid_id(spec.id)) throw Error(ErrorKind::Syntax, "invalid edge id '" + spec.id + "'");
    if (!edge_ids.insert(spec.id).second)
      throw Error(ErrorKind::DuplicateId, "duplicate edge id '" + spec.id + "'");
    auto s = index.find(spec.source);
    if (s == index.end())
      throw Error(ErrorKind::UnknownVertex,
                  "edge '" + spec.id + "' uses undeclared vertex '" + spec.source + "'");
    auto r = index.find(spec.range);
    if (r == index.end())
      throw Error(ErrorKind::UnknownVertex,
                  "edge '" + spec.id + "' uses undeclared vertex '" + spec.range + "'");
    const EdgeIndex e = g.edges_.size();
    g.edges_.push_back(Edge{spec.id, s->second, r->second});
    g.out_[s->second].push_back(e);
    g.in_[r->second].push_back(e);
  }
  return g;
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return i;
  return std::nullopt;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

VertexIndex Graph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(id) + "'");
}

// ---------------------------------------------------------------------------
// Vertex-set helpers

VertexSet vertex_set_from_ids(const Graph& g, std::span<const std::string> ids) {
  VertexSet s(g.vertex_count());
  for (const auto& id : ids) {
    const VertexIndex v = g.vertex(id);
    if (s.contains(v)) throw Error(ErrorKind::DuplicateId, "vertex '" + id + "' listed twice");
    s.insert(v);
  }
  return s;
}

VertexSet parse_vertex_list(const Graph& g, std::string_view csv) {
  std::vector<std::string> ids;
  std::size_t start = 0;
  auto trim = [](std::string_view t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
    return t;
  };
  if (trim(csv).empty()) return VertexSet(g.vertex_count());
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto tok = trim(csv.substr(start, end - start));
    if (tok.empty()) throw Error(ErrorKind::Syntax, "empty vertex id in set list");
    ids.emplace_back(tok);
    start = end + 1;
  }
  return vertex_set_from_ids(g, ids);
}

std::vector<std::string> ids_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexIndex v : s.members()) out.push_back(g.vertex_id(v));
  return out;
}

// ---------------------------------------------------------------------------
// Queries

VertexSet sinks(const Graph& g) {
  VertexSet s(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) == 0) s.insert(v);
  return s;
}

VertexSet reachable_from(const Graph& g, VertexIndex v) {
  VertexSet seen(g.vertex_count());
  std::vector<VertexIndex> stack{v};
  seen.insert(v);
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.out_edges(u)) {
      const VertexIndex w = g.edge(e).range;
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

VertexSet reaching(const Graph& g, VertexIndex v) {
  VertexSet seen(g.vertex_count());
  std::vector<VertexIndex> stack{v};
  seen.insert(v);
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.in_edges(u)) {
      const VertexIndex w = g.edge(e).source;
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool reaches(const Graph& g, VertexIndex v, VertexIndex w) {
  if (v >= g.vertex_count() || w >= g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  return reachable_from(g, v).contains(w);
}

bool reaches(const Graph& g, std::string_view v, std::string_view w) {
  return reaches(g, g.vertex(v), g.vertex(w));
}

AdjacencyMatrix adjacency_matrix(const Graph& g) {
  AdjacencyMatrix m;
  m.size = g.vertex_count();
  m.entries.assign(m.size * m.size, 0);
  for (const Edge& e : g.edges()) ++m.entries[e.source * m.size + e.range];
  return m;
}

bool is_acyclic(const Graph& g) {
  // Kahn: a topological order exists iff there is no directed cycle.
  std::vector<std::size_t> indegree(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) ++indegree[e.range];
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const VertexIndex u = ready.back();
    ready.pop_back();
    ++removed;
    for (EdgeIndex e : g.out_edges(u))
      if (--indegree[g.edge(e).range] == 0) ready.push_back(g.edge(e).range);
  }
  return removed == g.vertex_count();
}

std::vector<std::vector<VertexIndex>> strongly_connected_components(const Graph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexIndex> stack;
  std::vector<std::vector<VertexIndex>> components;
  std::size_t counter = 0;

  struct Frame {
    VertexIndex v;
    std::size_t next_edge;
  };

  for (VertexIndex root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      auto outs = g.out_edges(f.v);
      if (f.next_edge < outs.size()) {
        const VertexIndex w = g.edge(outs[f.next_edge++]).range;
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexIndex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexIndex> comp;
        VertexIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<std::string> vertices;
  for (VertexIndex v : keep.members()) vertices.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges())
    if (keep.contains(e.source) && keep.contains(e.range))
      edges.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  return Graph::build(std::move(vertices), edges);
}

Graph reorder_vertices(const Graph& g, std::span<const VertexIndex> order) {
  if (order.size() != g.vertex_count())
    throw Error(ErrorKind::Precondition, "vertex order is not a permutation");
  std::vector<std::string> vertices;
  for (VertexIndex v : order) vertices.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges())
    edges.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  // Graph::build rejects duplicates, so a non-permutation fails there.
  return Graph::build(std::move(vertices), edges);
}

}  // namespace leavitt
