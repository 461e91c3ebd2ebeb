#include "leavitt/hereditary.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw Error(ErrorKind::UnknownVertex, "vertex set does not belong to this graph");
}

}  // namespace

bool is_hereditary(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  for (const Edge& e : g.edges())
    if (s.contains(e.source) && !s.contains(e.range)) return false;
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (s.contains(v) || g.out_degree(v) == 0) continue;
    const auto outs = g.out_edges(v);
    if (std::all_of(outs.begin(), outs.end(),
                    [&](EdgeIndex e) { return s.contains(g.edge(e).range); }))
      return false;
  }
  return true;
}

HSSet HSSet::verify(const Graph& g, const VertexSet& s) {
  if (!is_hereditary(g, s)) throw Error(ErrorKind::Precondition, "vertex set is not hereditary");
  if (!is_saturated(g, s)) throw Error(ErrorKind::Precondition, "vertex set is not saturated");
  return HSSet(s);
}

VertexSet hereditary_closure(const Graph& g, const VertexSet& s) {
  require_universe(g, s);
  VertexSet out = s;
  std::vector<VertexIndex> stack = s.members();
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.out_edges(u)) {
      const VertexIndex w = g.edge(e).range;
      if (!out.contains(w)) {
        out.insert(w);
        stack.push_back(w);
      }
    }
  }
  return out;
}

HSSet hs_closure(const Graph& g, const VertexSet& s) {
  VertexSet h = hereditary_closure(g, s);
  // Saturation: a vertex joins once all of its (≥ 1) edges range inside H.
  // Adding such a vertex keeps H hereditary, so one pass suffices.
  std::vector<std::size_t> outside(g.vertex_count(), 0);
  std::vector<VertexIndex> ready;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || g.out_degree(v) == 0) continue;
    for (EdgeIndex e : g.out_edges(v))
      if (!h.contains(g.edge(e).range)) ++outside[v];
    if (outside[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    const VertexIndex v = ready.back();
    ready.pop_back();
    h.insert(v);
    for (EdgeIndex e : g.in_edges(v)) {
      const VertexIndex u = g.edge(e).source;
      if (h.contains(u)) continue;
      if (--outside[u] == 0) ready.push_back(u);
    }
  }
  return HSSet(std::move(h));
}

HSLattice enumerate_hs(const Graph& g, std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::Precondition, "lattice cap must be positive");
  HSLattice lattice;
  std::set<std::vector<VertexIndex>> seen;
  std::deque<HSSet> pending;

  auto offer = [&](HSSet h) {
    if (!seen.insert(h.set().members()).second) return true;
    if (lattice.elements.size() == cap) {
      lattice.truncated = true;
      return false;
    }
    lattice.elements.push_back(h);
    pending.push_back(std::move(h));
    return true;
  };

  // Every element is reached from ∅ by repeatedly closing up one more vertex.
  bool open = offer(hs_closure(g, VertexSet(g.vertex_count())));
  while (open && !pending.empty()) {
    const HSSet current = pending.front();
    pending.pop_front();
    for (VertexIndex v = 0; open && v < g.vertex_count(); ++v) {
      if (current.set().contains(v)) continue;
      VertexSet grown = current.set();
      grown.insert(v);
      open = offer(hs_closure(g, grown));
    }
  }
  std::sort(lattice.elements.begin(), lattice.elements.end(),
            [](const HSSet& a, const HSSet& b) { return VertexSet::canonical_less(a.set(), b.set()); });
  return lattice;
}

HSSet hs_join(const Graph& g, const HSSet& a, const HSSet& b) {
  require_universe(g, a.set());
  require_universe(g, b.set());
  return hs_closure(g, a.set() | b.set());
}

HSSet hs_meet(const Graph& g, const HSSet& a, const HSSet& b) {
  require_universe(g, a.set());
  require_universe(g, b.set());
  return HSSet(a.set() & b.set());
}

bool is_cofinal(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "cofinality is undefined for the empty graph");
  const VertexSet all = VertexSet::full(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    VertexSet single(g.vertex_count());
    single.insert(v);
    if (hs_closure(g, single).set() != all) return false;
  }
  return true;
}

Graph quotient_graph(const Graph& g, const HSSet& x) {
  require_universe(g, x.set());
  std::vector<std::string> vertices;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!x.set().contains(v)) vertices.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges())
    if (!x.set().contains(e.range))
      edges.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  return Graph::build(std::move(vertices), edges);
}

Graph restriction_graph(const Graph& g, const VertexSet& h) {
  if (!is_hereditary(g, h)) throw Error(ErrorKind::Precondition, "vertex set is not hereditary");
  std::vector<std::string> vertices;
  for (VertexIndex v : h.members()) vertices.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges())
    if (h.contains(e.source)) edges.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  return Graph::build(std::move(vertices), edges);
}

std::variant<IdealGraph, InfiniteWitness> ideal_graph(const Graph& g, const HSSet& x) {
  require_universe(g, x.set());
  if (x.empty()) throw Error(ErrorKind::Precondition, "ideal graph needs a nonempty set");
  const VertexSet& inside = x.set();
  const std::size_t n = g.vertex_count();

  // W: vertices outside X that reach X.
  VertexSet feeders(n);
  std::vector<VertexIndex> stack = inside.members();
  VertexSet seen = inside;
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.in_edges(u)) {
      const VertexIndex w = g.edge(e).source;
      if (seen.contains(w)) continue;
      seen.insert(w);
      feeders.insert(w);
      stack.push_back(w);
    }
  }

  const Graph outer = induced_subgraph(g, feeders);
  if (!is_acyclic(outer)) {
    const Cycle c = *find_cycle(outer);
    Cycle lifted{g.vertex(outer.vertex_id(c.base)), {}};
    for (EdgeIndex e : c.edges) lifted.edges.push_back(*g.find_edge(outer.edge(e).id));
    return InfiniteWitness{std::move(lifted)};
  }

  // Enumerate F_E(X). W induces an acyclic graph, so the search terminates.
  IdealGraph result;
  for (VertexIndex start : feeders.members()) {
    struct Frame {
      VertexIndex at;
      std::size_t next;
    };
    std::vector<Frame> frames{{start, 0}};
    std::vector<EdgeIndex> path;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto outs = g.out_edges(f.at);
      if (f.next == outs.size()) {
        frames.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const EdgeIndex e = outs[f.next++];
      const VertexIndex w = g.edge(e).range;
      path.push_back(e);
      if (inside.contains(w)) {
        result.entry_paths.push_back({path});
        if (result.entry_paths.size() > kPathEnumerationCap)
          throw Error(ErrorKind::Limit, "F_E(X) exceeds the enumeration cap");
        path.pop_back();
      } else if (feeders.contains(w)) {
        frames.push_back({w, 0});
      } else {
        path.pop_back();
      }
    }
  }

  std::vector<std::string> vertices;
  std::unordered_set<std::string> vertex_ids, edge_ids;
  for (VertexIndex v : inside.members()) {
    vertices.push_back(g.vertex_id(v));
    vertex_ids.insert(g.vertex_id(v));
  }
  std::vector<EdgeSpec> edges;
  for (const Edge& e : g.edges()) {
    if (!inside.contains(e.source)) continue;
    edges.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
    edge_ids.insert(e.id);
  }
  auto fresh = [](std::unordered_set<std::string>& used, std::string id) {
    while (!used.insert(id).second) id += '\'';
    return id;
  };
  for (const EntryPath& alpha : result.entry_paths) {
    std::string label = "[";
    for (std::size_t i = 0; i < alpha.edges.size(); ++i) {
      if (i) label += '.';
      label += g.edge(alpha.edges[i]).id;
    }
    label += ']';
    const std::string vertex = fresh(vertex_ids, label);
    vertices.push_back(vertex);
    edges.push_back({fresh(edge_ids, "~" + label), vertex,
                     g.vertex_id(g.edge(alpha.edges.back()).range)});
  }
  result.graph = Graph::build(std::move(vertices), edges);
  return result;
}

}  // namespace leavitt
