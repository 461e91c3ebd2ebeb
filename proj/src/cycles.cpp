#include "leavitt/cycles.hpp"

#include <algorithm>
#include <numeric>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_cap(std::size_t count, std::size_t cap, const std::string& what) {
  if (count > cap)
    throw Error(ErrorKind::Limit, what + " exceeds the enumeration cap of " +
                                      std::to_string(cap));
}

std::vector<std::string> edge_ids(const Graph& g, const ClosedSimplePath& p) {
  std::vector<std::string> ids;
  ids.reserve(p.edges.size());
  for (EdgeIndex e : p.edges) ids.push_back(g.edge(e).id);
  return ids;
}

/// Maps a path found in a subgraph (ids preserved) back into g.
ClosedSimplePath lift(const Graph& sub, const Graph& g, const ClosedSimplePath& p) {
  ClosedSimplePath out;
  out.base = g.vertex(sub.vertex_id(p.base));
  for (EdgeIndex e : p.edges) out.edges.push_back(*g.find_edge(sub.edge(e).id));
  return out;
}

/// Vertices (other than v) that lie on some path leaving v and returning to
/// v without passing through v in between.
VertexSet csp_interior(const Graph& g, VertexIndex v) {
  const std::size_t n = g.vertex_count();
  VertexSet forward(n), backward(n);
  std::vector<VertexIndex> stack;
  for (EdgeIndex e : g.out_edges(v)) {
    const VertexIndex w = g.edge(e).range;
    if (w != v && !forward.contains(w)) {
      forward.insert(w);
      stack.push_back(w);
    }
  }
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.out_edges(u)) {
      const VertexIndex w = g.edge(e).range;
      if (w != v && !forward.contains(w)) {
        forward.insert(w);
        stack.push_back(w);
      }
    }
  }
  for (EdgeIndex e : g.in_edges(v)) {
    const VertexIndex w = g.edge(e).source;
    if (w != v && !backward.contains(w)) {
      backward.insert(w);
      stack.push_back(w);
    }
  }
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : g.in_edges(u)) {
      const VertexIndex w = g.edge(e).source;
      if (w != v && !backward.contains(w)) {
        backward.insert(w);
        stack.push_back(w);
      }
    }
  }
  return forward & backward;
}

/// Walks every closed simple path at `base` whose interior stays in `interior`
/// (which must induce an acyclic subgraph). `visit` returns false to stop.
template <typename Visit>
void walk_csps(const Graph& g, VertexIndex base, const VertexSet& interior, Visit&& visit) {
  struct Frame {
    VertexIndex at;
    std::size_t next;
  };
  std::vector<Frame> frames{{base, 0}};
  std::vector<EdgeIndex> path;
  while (!frames.empty()) {
    Frame& f = frames.back();
    auto outs = g.out_edges(f.at);
    if (f.next == outs.size()) {
      frames.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const EdgeIndex e = outs[f.next++];
    const VertexIndex w = g.edge(e).range;
    if (w == base) {
      path.push_back(e);
      const bool more = visit(path);
      path.pop_back();
      if (!more) return;
    } else if (interior.contains(w)) {
      path.push_back(e);
      frames.push_back({w, 0});
    }
  }
}

}  // namespace

bool is_closed_simple_path(const Graph& g, const ClosedSimplePath& p) {
  if (p.edges.empty() || p.base >= g.vertex_count()) return false;
  for (EdgeIndex e : p.edges)
    if (e >= g.edge_count()) return false;
  if (g.edge(p.edges.front()).source != p.base) return false;
  if (g.edge(p.edges.back()).range != p.base) return false;
  for (std::size_t i = 0; i + 1 < p.edges.size(); ++i) {
    if (g.edge(p.edges[i]).range != g.edge(p.edges[i + 1]).source) return false;
    if (g.edge(p.edges[i + 1]).source == p.base) return false;
  }
  return true;
}

bool is_cycle(const Graph& g, const ClosedSimplePath& p) {
  if (!is_closed_simple_path(g, p)) return false;
  std::vector<VertexIndex> sources;
  for (EdgeIndex e : p.edges) sources.push_back(g.edge(e).source);
  std::sort(sources.begin(), sources.end());
  return std::adjacent_find(sources.begin(), sources.end()) == sources.end();
}

std::vector<Cycle> simple_cycles(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  // rank[v] = position of v when vertices are sorted by id.
  std::vector<VertexIndex> by_id(n);
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(),
            [&](VertexIndex a, VertexIndex b) { return g.vertex_id(a) < g.vertex_id(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[by_id[i]] = i;

  std::vector<Cycle> cycles;
  for (VertexIndex start : by_id) {
    // Vertex-simple paths from start through higher-ranked vertices only, so
    // each cycle is found once, based at its least id.
    struct Frame {
      VertexIndex at;
      std::size_t next;
    };
    std::vector<Frame> frames{{start, 0}};
    std::vector<EdgeIndex> path;
    std::vector<bool> on_path(n, false);
    on_path[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto outs = g.out_edges(f.at);
      if (f.next == outs.size()) {
        on_path[f.at] = false;
        frames.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      const EdgeIndex e = outs[f.next++];
      const VertexIndex w = g.edge(e).range;
      if (w == start) {
        path.push_back(e);
        cycles.push_back(Cycle{start, path});
        path.pop_back();
        check_cap(cycles.size(), cap, "number of cycles");
      } else if (rank[w] > rank[start] && !on_path[w]) {
        on_path[w] = true;
        path.push_back(e);
        frames.push_back({w, 0});
      }
    }
  }
  std::sort(cycles.begin(), cycles.end(), [&](const Cycle& a, const Cycle& b) {
    if (a.base != b.base) return g.vertex_id(a.base) < g.vertex_id(b.base);
    return edge_ids(g, a) < edge_ids(g, b);
  });
  return cycles;
}

std::optional<Cycle> find_cycle(const Graph& g) {
  std::optional<VertexIndex> base;
  std::vector<VertexIndex> base_component;
  for (const auto& comp : strongly_connected_components(g)) {
    bool cyclic = comp.size() > 1;
    for (EdgeIndex e : g.out_edges(comp.front()))
      cyclic = cyclic || g.edge(e).range == comp.front();
    if (!cyclic) continue;
    for (VertexIndex v : comp) {
      if (!base || g.vertex_id(v) < g.vertex_id(*base)) {
        base = v;
        base_component = comp;
      }
    }
  }
  if (!base) return std::nullopt;

  VertexSet inside(g.vertex_count());
  for (VertexIndex v : base_component) inside.insert(v);
  struct Frame {
    VertexIndex at;
    std::size_t next;
  };
  std::vector<Frame> frames{{*base, 0}};
  std::vector<EdgeIndex> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  on_path[*base] = true;
  while (!frames.empty()) {
    Frame& f = frames.back();
    auto outs = g.out_edges(f.at);
    if (f.next == outs.size()) {
      on_path[f.at] = false;
      frames.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const EdgeIndex e = outs[f.next++];
    const VertexIndex w = g.edge(e).range;
    if (w == *base) {
      path.push_back(e);
      return Cycle{*base, path};
    }
    if (inside.contains(w) && !on_path[w]) {
      on_path[w] = true;
      path.push_back(e);
      frames.push_back({w, 0});
    }
  }
  throw Error(ErrorKind::Internal, "cyclic component without a cycle");
}

CspSet csp_based_at(const Graph& g, VertexIndex v, std::size_t cap) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  CspSet result;
  const VertexSet interior = csp_interior(g, v);
  const Graph inner = induced_subgraph(g, interior);
  if (!is_acyclic(inner)) {
    result.infinite_witness = lift(inner, g, *find_cycle(inner));
    return result;
  }
  walk_csps(g, v, interior, [&](const std::vector<EdgeIndex>& path) {
    result.paths.push_back(ClosedSimplePath{v, path});
    check_cap(result.paths.size(), cap, "CSP count at '" + g.vertex_id(v) + "'");
    return true;
  });
  return result;
}

std::size_t csp_count_at(const Graph& g, VertexIndex v, std::size_t limit) {
  if (v >= g.vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  const VertexSet interior = csp_interior(g, v);
  if (!is_acyclic(induced_subgraph(g, interior))) return limit;
  std::size_t count = 0;
  if (limit == 0) return 0;
  walk_csps(g, v, interior, [&](const std::vector<EdgeIndex>&) { return ++count < limit; });
  return count;
}

bool has_exit(const Graph& g, const ClosedSimplePath& c) {
  if (!is_closed_simple_path(g, c))
    throw Error(ErrorKind::Precondition, "not a closed simple path of the graph");
  for (EdgeIndex e : c.edges) {
    const VertexIndex u = g.edge(e).source;
    for (EdgeIndex f : g.out_edges(u))
      if (f != e) return true;
  }
  return false;
}

namespace {

bool component_has_cycle(const Graph& g, const std::vector<VertexIndex>& comp) {
  if (comp.size() > 1) return true;
  for (EdgeIndex e : g.out_edges(comp.front()))
    if (g.edge(e).range == comp.front()) return true;
  return false;
}

}  // namespace

// A closed simple path that is not a cycle revisits some vertex along two
// different edges, so (L) only has to be checked on cycles. A cycle without
// an exit is exactly a cyclic component whose vertices all have out-degree 1.
bool condition_L(const Graph& g) {
  for (const auto& comp : strongly_connected_components(g)) {
    if (!component_has_cycle(g, comp)) continue;
    if (std::all_of(comp.begin(), comp.end(), [&](VertexIndex v) { return g.out_degree(v) == 1; }))
      return false;
  }
  return true;
}

bool some_cycle_has_exit(const Graph& g) {
  for (const auto& comp : strongly_connected_components(g)) {
    if (!component_has_cycle(g, comp)) continue;
    if (std::any_of(comp.begin(), comp.end(), [&](VertexIndex v) { return g.out_degree(v) > 1; }))
      return true;
  }
  return false;
}

bool condition_K(const Graph& g) {
  // A vertex lies on a closed simple path iff its strongly connected
  // component contains a cycle.
  for (const auto& comp : strongly_connected_components(g)) {
    if (!component_has_cycle(g, comp)) continue;
    for (VertexIndex v : comp)
      if (csp_count_at(g, v, 2) < 2) return false;
  }
  return true;
}

bool has_isolated_cycles(const Graph& g) {
  for (const auto& comp : strongly_connected_components(g)) {
    if (!component_has_cycle(g, comp)) continue;
    VertexSet inside(g.vertex_count());
    for (VertexIndex v : comp) inside.insert(v);
    for (VertexIndex v : comp) {
      std::size_t internal = 0;
      for (EdgeIndex e : g.out_edges(v))
        if (inside.contains(g.edge(e).range)) ++internal;
      if (internal != 1) return false;
    }
  }
  return true;
}

VertexSet x0_set(const Graph& g) {
  VertexSet out(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) < 2) continue;
    const VertexSet back = reaching(g, v);
    std::size_t returning = 0;
    for (EdgeIndex e : g.out_edges(v))
      if (back.contains(g.edge(e).range)) ++returning;
    if (returning >= 2) out.insert(v);
  }
  return out;
}

}  // namespace leavitt
