#include "leavitt/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "leavitt/cycles.hpp"
#include "leavitt/error.hpp"
#include "leavitt/hereditary.hpp"
#include "leavitt/rank.hpp"
#include "leavitt/report.hpp"

namespace leavitt {

namespace {

void require_small(const Graph& g) {
  if (g.vertex_count() > kOracleMaxVertices)
    throw Error(ErrorKind::Precondition, "oracle checks need at most " +
                                             std::to_string(kOracleMaxVertices) + " vertices");
}

Mask full_mask(const Graph& g) { return g.vertex_count() == 0 ? 0 : (Mask{1} << g.vertex_count()) - 1; }
bool has(Mask m, std::size_t v) { return (m >> v) & 1U; }
Mask bit(std::size_t v) { return Mask{1} << v; }

std::string mask_text(const Graph& g, Mask m) {
  std::string out = "{";
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (has(m, v)) out += (out.size() > 1 ? "," : "") + g.vertex_id(v);
  return out + "}";
}

// Depth-first walk of closed paths from `base`, never re-entering base before
// the last edge. Stops early once `limit` paths are collected.
void walk_csps(const Graph& g, VertexIndex base, VertexIndex at, std::size_t max_len,
               const std::vector<Mask>& reach, std::vector<EdgeIndex>& path,
               std::vector<std::vector<EdgeIndex>>& out, std::size_t limit) {
  for (EdgeIndex e : g.out_edges(at)) {
    if (out.size() >= limit) return;
    const VertexIndex r = g.edge(e).range;
    path.push_back(e);
    if (r == base)
      out.push_back(path);
    else if (path.size() < max_len && has(reach[r], base))
      walk_csps(g, base, r, max_len, reach, path, out, limit);
    path.pop_back();
  }
}

std::vector<std::vector<EdgeIndex>> csps_limited(const Graph& g, VertexIndex v, std::size_t max_len,
                                                 std::size_t limit) {
  const auto reach = oracle_reach(g);
  std::vector<std::vector<EdgeIndex>> out;
  std::vector<EdgeIndex> path;
  walk_csps(g, v, v, max_len, reach, path, out, limit);
  return out;
}

bool sources_distinct(const Graph& g, const std::vector<EdgeIndex>& p) {
  Mask seen = 0;
  for (EdgeIndex e : p) {
    const auto s = g.edge(e).source;
    if (has(seen, s)) return false;
    seen |= bit(s);
  }
  return true;
}

bool path_has_exit(const Graph& g, const std::vector<EdgeIndex>& p) {
  for (EdgeIndex e : p)
    if (g.out_degree(g.edge(e).source) > 1) return true;
  return false;
}

// All bounded cycles of g, each once per rotation.
std::vector<std::vector<EdgeIndex>> bounded_cycles(const Graph& g) {
  std::vector<std::vector<EdgeIndex>> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (auto& p : oracle_bounded_csps(g, v, g.vertex_count()))
      if (sources_distinct(g, p)) out.push_back(std::move(p));
  return out;
}

Graph quotient_by_mask(const Graph& g, Mask h) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!has(h, v)) vertices.push_back(g.vertex_id(v));
  for (const Edge& e : g.edges())
    if (!has(h, e.source) && !has(h, e.range))
      edges.push_back({e.id, g.vertex_id(e.source), g.vertex_id(e.range)});
  return Graph::build(std::move(vertices), edges);
}

std::vector<Mask> sorted_masks(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool same_k0_summary(const K0Presentation& a, const K0Presentation& b) {
  return a.invariant_factors == b.invariant_factors && a.free_rank == b.free_rank &&
         a.one_torsion_order == b.one_torsion_order && a.one_free_gcd == b.one_free_gcd;
}

using Result = std::optional<std::string>;

Result fail(const std::string& s) { return s; }

}  // namespace

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (VertexIndex v : s.members()) m |= bit(v);
  return m;
}

VertexSet from_mask(std::size_t universe, Mask m) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v)
    if (has(m, v)) s.insert(v);
  return s;
}

std::vector<Mask> oracle_reach(const Graph& g) {
  require_small(g);
  const std::size_t n = g.vertex_count();
  std::vector<Mask> adj(n, 0), r(n, 0);
  for (const Edge& e : g.edges()) adj[e.source] |= bit(e.range);
  for (std::size_t v = 0; v < n; ++v) r[v] = bit(v);
  // R ← R ∨ R·A, n times
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Mask> next = r;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        if (has(r[v], u)) next[v] |= adj[u];
    r = std::move(next);
  }
  return r;
}

std::vector<Mask> oracle_hs_sets(const Graph& g) {
  require_small(g);
  std::vector<Mask> out;
  const Mask full = full_mask(g);
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (has(m, e.source) && !has(m, e.range)) ok = false;
    for (VertexIndex v = 0; ok && v < g.vertex_count(); ++v) {
      if (has(m, v) || g.out_degree(v) == 0) continue;
      bool all_inside = true;
      for (EdgeIndex e : g.out_edges(v)) all_inside = all_inside && has(m, g.edge(e).range);
      if (all_inside) ok = false;
    }
    if (ok) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

Mask oracle_hs_closure(const Graph& g, Mask s) {
  Mask out = full_mask(g);
  for (Mask h : oracle_hs_sets(g))
    if ((h & s) == s) out &= h;
  return out;
}

std::vector<std::vector<EdgeIndex>> oracle_bounded_csps(const Graph& g, VertexIndex v, std::size_t max_len) {
  return csps_limited(g, v, max_len, static_cast<std::size_t>(-1));
}

bool oracle_isolated_cycles(const Graph& g) {
  // edges used by some closed simple path, grouped by source
  std::vector<std::set<EdgeIndex>> used(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (const auto& p : oracle_bounded_csps(g, v, g.vertex_count()))
      for (EdgeIndex e : p) used[g.edge(e).source].insert(e);
  for (const auto& s : used)
    if (s.size() > 1) return false;
  return true;
}

bool oracle_condition_L(const Graph& g) {
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    for (const auto& p : oracle_bounded_csps(g, v, g.vertex_count()))
      if (!path_has_exit(g, p)) return false;
  return true;
}

bool oracle_condition_K(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (VertexIndex v = 0; v < n; ++v) {
    if (csps_limited(g, v, n, 1).empty()) continue;
    // A second closed simple path, if any, has one of length < 2n.
    if (csps_limited(g, v, 2 * n, 2).size() < 2) return false;
  }
  return true;
}

Mask oracle_x0(const Graph& g) {
  const auto reach = oracle_reach(g);
  Mask out = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    std::size_t returning = 0;
    for (EdgeIndex e : g.out_edges(v))
      if (has(reach[g.edge(e).range], v)) ++returning;
    if (returning >= 2) out |= bit(v);
  }
  return out;
}

std::size_t oracle_cycle_count(const Graph& g) {
  std::vector<std::size_t> by_length(g.vertex_count() + 1, 0);
  for (const auto& c : bounded_cycles(g)) ++by_length[c.size()];
  std::size_t total = 0;
  for (std::size_t len = 1; len < by_length.size(); ++len) total += by_length[len] / len;
  return total;
}

bool oracle_pisu(const Graph& g, Mask h) {
  if ((h & full_mask(g)) == full_mask(g)) return false;
  const Graph q = quotient_by_mask(g, h);
  for (VertexIndex v = 0; v < q.vertex_count(); ++v)
    if (q.out_degree(v) == 0) return false;
  if (oracle_hs_sets(q).size() != 2) return false;
  return oracle_condition_L(q);
}

std::vector<std::vector<EdgeIndex>> oracle_entry_paths(const Graph& g, Mask x, std::size_t max_len) {
  std::vector<std::vector<EdgeIndex>> out;
  std::vector<EdgeIndex> path;
  std::function<void(VertexIndex)> walk = [&](VertexIndex at) {
    for (EdgeIndex e : g.out_edges(at)) {
      const VertexIndex r = g.edge(e).range;
      path.push_back(e);
      if (has(x, r))
        out.push_back(path);
      else if (path.size() < max_len)
        walk(r);
      path.pop_back();
    }
  };
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!has(x, v)) walk(v);
  return out;
}

mpz_class bareiss_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Precondition, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Graph random_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = 1 + rng() % max_vertices;
  const std::size_t m = rng() % (max_edges + 1);
  std::vector<std::string> vertices;
  for (std::size_t i = 1; i <= n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::size_t s = rng() % n;
    const std::size_t r = rng() % n;
    edges.push_back({"e" + std::to_string(i), vertices[s], vertices[r]});
  }
  return Graph::build(std::move(vertices), edges);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long lo, long hi) {
  const std::size_t rows = 1 + rng() % max_dim;
  const std::size_t cols = 1 + rng() % max_dim;
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = lo + static_cast<long>(rng() % span);
  return m;
}

std::optional<std::string> check_snf(const IntMatrix& m) {
  const SNFResult r = smith_normal_form(m);
  if (r.U * m * r.V != r.D) return fail("U*M*V != D");
  const mpz_class du = bareiss_determinant(r.U), dv = bareiss_determinant(r.V);
  if (abs(du) != 1 || abs(dv) != 1)
    return fail("det U = " + du.get_str() + ", det V = " + dv.get_str());
  for (std::size_t i = 0; i < r.D.rows(); ++i)
    for (std::size_t j = 0; j < r.D.cols(); ++j)
      if (i != j && r.D(i, j) != 0) return fail("D is not diagonal");
  const auto d = r.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return fail("negative diagonal entry");
    if (i + 1 < d.size()) {
      if (d[i] == 0 && d[i + 1] != 0) return fail("zero before a nonzero diagonal entry");
      if (d[i] != 0 && d[i + 1] % d[i] != 0) return fail("divisibility chain broken at " + std::to_string(i));
    }
  }
  if (m.rows() == m.cols()) {
    mpz_class product = 1;
    for (const auto& x : d) product *= x;
    const mpz_class det = bareiss_determinant(m);
    if (abs(det) != product) return fail("|det M| = " + mpz_class(abs(det)).get_str() +
                                         " but the diagonal product is " + product.get_str());
  }
  return std::nullopt;
}

const std::vector<GraphCheck>& graph_checks() {
  static const std::vector<GraphCheck> checks = {
      {"reachability",
       [](const Graph& g) -> Result {
         const auto reach = oracle_reach(g);
         for (VertexIndex v = 0; v < g.vertex_count(); ++v)
           if (to_mask(reachable_from(g, v)) != reach[v]) return fail("reachable set of " + g.vertex_id(v));
         return std::nullopt;
       }},
      {"hs-lattice",
       [](const Graph& g) -> Result {
         const HSLattice lattice = enumerate_hs(g);
         std::vector<Mask> got;
         for (const auto& h : lattice.elements) got.push_back(to_mask(h.set()));
         if (lattice.truncated || sorted_masks(got) != sorted_masks(oracle_hs_sets(g)))
           return fail("enumerate_hs differs from the all-subsets scan");
         return std::nullopt;
       }},
      {"hs-closure-oracle",
       [](const Graph& g) -> Result {
         for (Mask s = 0; s <= full_mask(g); ++s) {
           if (to_mask(hs_closure(g, from_mask(g.vertex_count(), s)).set()) != oracle_hs_closure(g, s))
             return fail("hs_closure of " + mask_text(g, s));
           if (s == full_mask(g)) break;
         }
         return std::nullopt;
       }},
      {"closure-operator",
       [](const Graph& g) -> Result {
         const std::size_t n = g.vertex_count();
         for (Mask s = 0; s <= full_mask(g); ++s) {
           const Mask c = to_mask(hs_closure(g, from_mask(n, s)).set());
           if ((c & s) != s) return fail("not extensive at " + mask_text(g, s));
           if (to_mask(hs_closure(g, from_mask(n, c)).set()) != c) return fail("not idempotent at " + mask_text(g, s));
           for (std::size_t v = 0; v < n; ++v) {
             const Mask t = s | bit(v);
             if ((to_mask(hs_closure(g, from_mask(n, t)).set()) & c) != c)
               return fail("not monotone at " + mask_text(g, s) + " + " + g.vertex_id(v));
           }
           if (s == full_mask(g)) break;
         }
         return std::nullopt;
       }},
      {"lattice-laws",
       [](const Graph& g) -> Result {
         const HSLattice lattice = enumerate_hs(g);
         std::vector<HSSet> l(lattice.elements.begin(),
                              lattice.elements.begin() + std::min<std::size_t>(lattice.elements.size(), 12));
         const auto all = oracle_hs_sets(g);
         auto is_hs = [&](Mask m) { return std::find(all.begin(), all.end(), m) != all.end(); };
         for (const auto& a : l)
           for (const auto& b : l) {
             const Mask ma = to_mask(a.set()), mb = to_mask(b.set());
             if (!is_hs(ma & mb)) return fail("intersection is not hereditary saturated");
             if (to_mask(hs_meet(g, a, b).set()) != (ma & mb)) return fail("meet is not the intersection");
             if (to_mask(hs_join(g, a, b).set()) != oracle_hs_closure(g, ma | mb)) return fail("join mismatch");
             if (!(hs_join(g, a, b) == hs_join(g, b, a))) return fail("join not commutative");
             if (!(hs_join(g, a, hs_meet(g, a, b)) == a)) return fail("absorption fails");
             if (!(hs_meet(g, a, hs_join(g, a, b)) == a)) return fail("absorption fails");
             for (const auto& c : l)
               if (!(hs_join(g, hs_join(g, a, b), c) == hs_join(g, a, hs_join(g, b, c))))
                 return fail("join not associative");
           }
         return std::nullopt;
       }},
      {"cofinal",
       [](const Graph& g) -> Result {
         if (g.empty()) return std::nullopt;
         if (is_cofinal(g) != (oracle_hs_sets(g).size() == 2)) return fail("is_cofinal disagrees with the lattice size");
         return std::nullopt;
       }},
      {"quotient-correspondence",
       [](const Graph& g) -> Result {
         const auto all = oracle_hs_sets(g);
         for (const HSSet& x : enumerate_hs(g).elements) {
           const Graph q = quotient_graph(g, x);
           const Mask mx = to_mask(x.set());
           std::vector<Mask> image;
           for (Mask h : all) {
             if ((h & mx) != mx) continue;
             Mask m = 0;
             for (VertexIndex v = 0; v < g.vertex_count(); ++v)
               if (has(h, v) && !has(mx, v)) m |= bit(q.vertex(g.vertex_id(v)));
             image.push_back(m);
           }
           if (sorted_masks(image) != sorted_masks(oracle_hs_sets(q)))
             return fail("H -> H\\X is not onto the lattice of E/" + mask_text(g, mx));
         }
         return std::nullopt;
       }},
      {"ideal-graph",
       [](const Graph& g) -> Result {
         const std::size_t n = g.vertex_count();
         for (const HSSet& x : enumerate_hs(g).elements) {
           if (x.empty()) continue;
           const Mask mx = to_mask(x.set());
           const auto paths = oracle_entry_paths(g, mx, n + 1);
           const bool longer = std::any_of(paths.begin(), paths.end(), [&](const auto& p) { return p.size() > n; });
           const auto result = ideal_graph(g, x);
           if (const auto* w = std::get_if<InfiniteWitness>(&result)) {
             if (!longer) return fail("witness claimed but F_E(X) is finite for X = " + mask_text(g, mx));
             if (!is_cycle(g, w->cycle)) return fail("witness is not a cycle");
             for (EdgeIndex e : w->cycle.edges)
               if (has(mx, g.edge(e).source)) return fail("witness cycle meets X");
             continue;
           }
           const auto& ig = std::get<IdealGraph>(result);
           if (longer) return fail("F_E(X) has a path longer than |E0| for X = " + mask_text(g, mx));
           if (ig.entry_paths.size() != paths.size()) return fail("|F_E(X)| mismatch for X = " + mask_text(g, mx));
           std::size_t from_x = 0;
           for (const Edge& e : g.edges()) from_x += has(mx, e.source);
           if (ig.graph.vertex_count() != x.size() + paths.size() ||
               ig.graph.edge_count() != from_x + paths.size())
             return fail("ideal graph has the wrong size for X = " + mask_text(g, mx));
         }
         return std::nullopt;
       }},
      {"cycles",
       [](const Graph& g) -> Result {
         const auto cycles = simple_cycles(g);
         for (const auto& c : cycles)
           if (!is_cycle(g, c)) return fail("simple_cycles returned a non-cycle");
         if (cycles.size() != oracle_cycle_count(g)) return fail("cycle count differs from the oracle");
         if (is_acyclic(g) != cycles.empty()) return fail("is_acyclic disagrees with simple_cycles");
         if (is_acyclic(g)) {
           if (!x0_set(g).empty()) return fail("acyclic graph with nonempty X0");
           for (VertexIndex v = 0; v < g.vertex_count(); ++v)
             if (!csp_based_at(g, v).paths.empty()) return fail("acyclic graph with a closed simple path");
         }
         return std::nullopt;
       }},
      {"isolated-cycles",
       [](const Graph& g) -> Result {
         if (has_isolated_cycles(g) != oracle_isolated_cycles(g)) return fail("SCC criterion disagrees with CSP pairs");
         return std::nullopt;
       }},
      {"conditions",
       [](const Graph& g) -> Result {
         const bool l = condition_L(g), k = condition_K(g);
         if (l != oracle_condition_L(g)) return fail("condition (L) disagrees with the oracle");
         if (k != oracle_condition_K(g)) return fail("condition (K) disagrees with the oracle");
         if (k && !l) return fail("condition (K) without condition (L)");
         return std::nullopt;
       }},
      {"x0",
       [](const Graph& g) -> Result {
         if (to_mask(x0_set(g)) != oracle_x0(g)) return fail("x0_set disagrees with the oracle");
         return std::nullopt;
       }},
      {"x0-quotient-isolated",
       [](const Graph& g) -> Result {
         const Graph q = quotient_graph(g, hs_closure(g, x0_set(g)));
         if (!has_isolated_cycles(q) || !oracle_isolated_cycles(q)) return fail("E/X0 closure has non-isolated cycles");
         return std::nullopt;
       }},
      {"isolated-csps-are-cycles",
       [](const Graph& g) -> Result {
         if (!oracle_isolated_cycles(g)) return std::nullopt;
         for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
           const CspSet s = csp_based_at(g, v);
           if (!s.finite()) return fail("infinite CSP set at " + g.vertex_id(v));
           for (const auto& p : s.paths)
             if (!is_cycle(g, p)) return fail("closed simple path at " + g.vertex_id(v) + " is not a cycle");
         }
         return std::nullopt;
       }},
      {"rank-relations",
       [](const Graph& g) -> Result {
         if (g.empty()) return std::nullopt;
         const StableRank sr = stable_rank(g).value, cs = cstar_stable_rank(g);
         if ((sr == StableRank::One) != is_acyclic(g)) return fail("sr = 1 does not match acyclicity");
         if ((sr == StableRank::Infinite) != (cs == StableRank::Infinite)) return fail("infinite ranks disagree");
         if (sr == StableRank::One && cs != StableRank::One) return fail("sr = 1 but C* rank is not 1");
         if (static_cast<int>(cs) > static_cast<int>(sr)) return fail("C* rank exceeds the algebraic rank");
         bool exit = false, quotient = false;
         for (const auto& c : bounded_cycles(g)) exit = exit || path_has_exit(g, c);
         for (Mask h : oracle_hs_sets(g)) quotient = quotient || oracle_pisu(g, h);
         const StableRank expect = quotient ? StableRank::Infinite : exit ? StableRank::Two : StableRank::One;
         if (cs != expect) return fail("C* rank disagrees with the oracle");
         return std::nullopt;
       }},
      {"certificates",
       [](const Graph& g) -> Result {
         if (g.empty()) return std::nullopt;
         const RankVerdict v = stable_rank(g);
         const auto all = oracle_hs_sets(g);
         for (const HSSet& h : enumerate_hs(g).elements)
           if (verify_pisu_quotient(g, h) != oracle_pisu(g, to_mask(h.set())))
             return fail("verify_pisu_quotient disagrees with the oracle at " + mask_text(g, to_mask(h.set())));
         switch (v.value) {
           case StableRank::One:
             if (!std::holds_alternative<AcyclicCertificate>(v.certificate) || !is_acyclic(g))
               return fail("rank 1 without an acyclic certificate");
             break;
           case StableRank::Infinite: {
             const auto* w = std::get_if<WitnessH>(&v.certificate);
             if (!w) return fail("rank inf without an H witness");
             const Mask mh = to_mask(w->h.set());
             if (std::find(all.begin(), all.end(), mh) == all.end()) return fail("witness H is not hereditary saturated");
             if (!verify_pisu_quotient(g, w->h) || !oracle_pisu(g, mh)) return fail("witness H fails re-verification");
             for (Mask h : all)
               if (oracle_pisu(g, h) && VertexSet::canonical_less(from_mask(g.vertex_count(), h), w->h.set()))
                 return fail("a smaller witness exists");
             break;
           }
           case StableRank::Two: {
             const auto* w = std::get_if<WitnessCycle>(&v.certificate);
             if (!w || !is_cycle(g, w->cycle)) return fail("rank 2 without a cycle witness");
             const auto cycles = simple_cycles(g);
             const bool listed = std::any_of(cycles.begin(), cycles.end(), [&](const Cycle& c) {
               if (c.edges.size() != w->cycle.edges.size()) return false;
               for (std::size_t shift = 0; shift < c.edges.size(); ++shift)
                 if (std::equal(c.edges.begin(), c.edges.end(), w->cycle.edges.begin() + shift, w->cycle.edges.end()) &&
                     std::equal(c.edges.end() - shift, c.edges.end(), w->cycle.edges.begin()))
                   return true;
               return false;
             });
             if (!listed) return fail("witness cycle is not among simple_cycles");
             for (Mask h : all)
               if (oracle_pisu(g, h)) return fail("rank 2 but " + mask_text(g, h) + " passes");
             break;
           }
         }
         return std::nullopt;
       }},
      {"k0-relabel",
       [](const Graph& g) -> Result {
         if (g.empty()) return std::nullopt;
         const K0Presentation k0 = k0_presentation(g);
         std::vector<VertexIndex> reversed(g.vertex_count()), rotated(g.vertex_count());
         for (std::size_t i = 0; i < reversed.size(); ++i) {
           reversed[i] = reversed.size() - 1 - i;
           rotated[i] = (i + 1) % rotated.size();
         }
         if (!same_k0_summary(k0, k0_presentation(reorder_vertices(g, reversed))) ||
             !same_k0_summary(k0, k0_presentation(reorder_vertices(g, rotated))))
           return fail("K0 changes under relabelling");
         return std::nullopt;
       }},
      {"k0-snf",
       [](const Graph& g) -> Result {
         if (g.empty()) return std::nullopt;
         const IntMatrix m = k0_relation_matrix(g);
         if (auto bad = check_snf(m)) return fail("relation matrix: " + *bad);
         if (m.rows() == m.cols() && m.rows() > 0) {
           const mpz_class det = bareiss_determinant(m);
           const K0Presentation k0 = k0_presentation(g);
           if (det != 0) {
             mpz_class product = 1;
             for (const auto& d : k0.invariant_factors) product *= d;
             if (k0.free_rank != 0 || product != abs(det)) return fail("|K0| differs from |det|");
           } else if (k0.free_rank == 0) {
             return fail("singular relations but no free part");
           }
         }
         return std::nullopt;
       }},
      {"serialization",
       [](const Graph& g) -> Result {
         if (!(parse_graph(to_dsl(g)) == g)) return fail("DSL round trip changed the graph");
         if (!(parse_graph(to_json_text(g)) == g)) return fail("JSON round trip changed the graph");
         if (g.empty()) return std::nullopt;
         const Report r = build_report(g);
         if (!(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r))
           return fail("report JSON round trip changed the report");
         return std::nullopt;
       }},
  };
  return checks;
}

const GraphCheck& graph_check(const std::string& name) {
  for (const auto& c : graph_checks())
    if (c.name == name) return c;
  throw Error(ErrorKind::Precondition, "no check named '" + name + "'");
}

std::optional<CheckFailure> check_graph(const Graph& g) {
  require_small(g);
  for (const auto& c : graph_checks()) {
    try {
      if (auto detail = c.run(g)) return CheckFailure{c.name, *detail};
    } catch (const Error& e) {
      return CheckFailure{c.name, std::string("error: ") + e.what()};
    }
  }
  return std::nullopt;
}

FuzzResult fuzz(const FuzzOptions& options) {
  if (options.max_vertices == 0 || options.max_vertices > kOracleMaxVertices)
    throw Error(ErrorKind::Precondition, "fuzz: max vertices must be between 1 and " +
                                             std::to_string(kOracleMaxVertices));
  std::mt19937_64 rng(options.seed);
  FuzzResult result;
  for (std::size_t i = 0; i < options.count; ++i) {
    const Graph g = random_graph(rng, options.max_vertices, options.max_edges);
    ++result.tested;
    if (auto failure = check_graph(g)) {
      result.failure = std::move(failure);
      result.counterexample_dsl = to_dsl(g);
      break;
    }
  }
  return result;
}

}  // namespace leavitt
