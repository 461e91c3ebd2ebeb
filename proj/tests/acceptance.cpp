// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leavitt/checks.hpp"
#include "leavitt/cycles.hpp"
#include "leavitt/families.hpp"
#include "leavitt/hereditary.hpp"
#include "leavitt/ktheory.hpp"
#include "leavitt/laurent.hpp"
#include "leavitt/rank.hpp"

using namespace leavitt;

namespace {

constexpr std::uint64_t kSeed = 0;

Graph fam(const std::string& spec) { return generate(parse_family_spec(spec)); }

std::vector<Graph> random_corpus(std::size_t count, std::size_t max_v, std::size_t max_e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(rng, max_v, max_e));
  return out;
}

// Collects failures for one criterion.
struct Tally {
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int report(int number, const char* title, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool pass = t.failures.empty();
  std::printf("%s criterion %d: %s", pass ? "PASS" : "FAIL", number, title);
  if (!t.summary.empty()) std::printf(" (%s)", t.summary.c_str());
  std::printf("\n");
  for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i) std::printf("    %s\n", t.failures[i].c_str());
  return pass ? 0 : 1;
}

std::string rank_name(StableRank r) { return std::string(to_string(r)); }

}  // namespace

int main() {
  const std::vector<Graph> corpus500 = random_corpus(500, 6, 10, kSeed);
  int failed = 0;

  failed += report(1, "stable rank trichotomy on the example graphs", [](Tally& t) {
    const std::vector<std::pair<std::string, StableRank>> cases = {
        {"line(5)", StableRank::One},       {"rose(2)", StableRank::Infinite},
        {"rose(3)", StableRank::Infinite},  {"rose(5)", StableRank::Infinite},
        {"loop", StableRank::Two},          {"chain3", StableRank::Two},
        {"enm(2,3)", StableRank::Infinite},
    };
    for (const auto& [spec, want] : cases) {
      const StableRank got = stable_rank(fam(spec)).value;
      t.expect(got == want, spec + ": got " + rank_name(got) + ", want " + rank_name(want));
    }
    t.summary = std::to_string(cases.size()) + " graphs";
  });

  failed += report(2, "C* comparison", [&](Tally& t) {
    const Graph loop = fam("loop");
    t.expect(cstar_stable_rank(loop) == StableRank::One, "cstar(loop) != 1");
    t.expect(stable_rank(loop).value == StableRank::Two, "sr(loop) != 2");
    std::size_t n = 0;
    for (const Graph& g : corpus500) {
      const StableRank sr = stable_rank(g).value, cs = cstar_stable_rank(g);
      const bool ok = ((sr == StableRank::Infinite) == (cs == StableRank::Infinite)) &&
                      (sr != StableRank::One || cs == StableRank::One);
      t.expect(ok, "graph " + std::to_string(n) + ": sr " + rank_name(sr) + ", cstar " + rank_name(cs) + "\n" + to_dsl(g));
      ++n;
    }
    t.summary = std::to_string(n) + " random graphs, seed " + std::to_string(kSeed);
  });

  failed += report(3, "K0 values of the example graphs", [](Tally& t) {
    auto expect_k0 = [&](const std::string& spec, std::vector<long> torsion, std::size_t free_rank, long order,
                         std::optional<long> free_gcd) {
      const K0Presentation k = k0_presentation(fam(spec));
      std::vector<mpz_class> want(torsion.begin(), torsion.end());
      t.expect(k.invariant_factors == want, spec + ": torsion");
      t.expect(k.free_rank == free_rank, spec + ": free rank " + std::to_string(k.free_rank));
      t.expect(k.one_torsion_order == order, spec + ": order of [1] " + k.one_torsion_order.get_str());
      if (free_gcd) t.expect(k.one_free_gcd == *free_gcd, spec + ": free gcd " + k.one_free_gcd.get_str());
    };
    expect_k0("rose(2)", {}, 0, 1, 0);  // Z/1 = 0
    expect_k0("rose(3)", {2}, 0, 2, 0);
    expect_k0("rose(4)", {3}, 0, 3, 0);
    expect_k0("tri", {}, 1, 1, 0);
    expect_k0("k3", {2, 2}, 0, 1, 0);
    expect_k0("mult2", {2}, 1, 2, 1);
    t.summary = "rose(2..4), tri, k3, mult2";
  });

  failed += report(4, "quotient by the closure of X0 has isolated cycles", [&](Tally& t) {
    std::size_t n = 0, nontrivial = 0;
    for (const Graph& g : corpus500) {
      const VertexSet x0 = x0_set(g);
      nontrivial += !x0.empty();
      const Graph q = quotient_graph(g, hs_closure(g, x0));
      t.expect(has_isolated_cycles(q) && oracle_isolated_cycles(q), "graph " + std::to_string(n) + "\n" + to_dsl(g));
      ++n;
    }
    t.summary = std::to_string(n) + " random graphs, " + std::to_string(nontrivial) + " with X0 nonempty";
  });

  failed += report(5, "oracle equivalences on small graphs", [](Tally& t) {
    const std::vector<Graph> small = random_corpus(300, 5, 8, kSeed + 1);
    std::size_t cofinal_cases = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
      const Graph& g = small[i];
      const std::string tag = "graph " + std::to_string(i);
      // (a) closure = intersection of the lattice elements containing s
      const HSLattice lattice = enumerate_hs(g);
      for (Mask s = 0; s < (Mask{1} << g.vertex_count()); ++s) {
        Mask meet = (Mask{1} << g.vertex_count()) - 1;
        for (const HSSet& h : lattice.elements) {
          const Mask m = to_mask(h.set());
          if ((m & s) == s) meet &= m;
        }
        const Mask closure = to_mask(hs_closure(g, from_mask(g.vertex_count(), s)).set());
        t.expect(closure == meet && closure == oracle_hs_closure(g, s), tag + ": (a) closure");
      }
      // (b) SCC criterion = literal CSP-pair check
      t.expect(has_isolated_cycles(g) == oracle_isolated_cycles(g), tag + ": (b) isolated cycles");
      // (c) cofinal ⟺ exactly two hereditary saturated sets
      const std::size_t size = oracle_hs_sets(g).size();
      t.expect(size >= 2, tag + ": lattice smaller than {0, E0}");
      t.expect(is_cofinal(g) == (size == 2), tag + ": (c) cofinality");
      cofinal_cases += size == 2;
    }
    t.summary = std::to_string(small.size()) + " graphs with <= 5 vertices, <= 8 edges; " +
                std::to_string(cofinal_cases) + " cofinal";
  });

  failed += report(6, "Smith normal form validity", [](Tally& t) {
    std::mt19937_64 rng(kSeed + 2);
    std::size_t square_nonsingular = 0;
    for (int i = 0; i < 200; ++i) {
      const IntMatrix m = random_matrix(rng, 8, -9, 9);
      if (const auto bad = check_snf(m)) {
        std::ostringstream os;
        os << "matrix " << i << " (" << m.rows() << "x" << m.cols() << "): " << *bad;
        t.failures.push_back(os.str());
      }
      if (m.rows() == m.cols() && bareiss_determinant(m) != 0) ++square_nonsingular;
    }
    t.summary = "200 matrices up to 8x8, " + std::to_string(square_nonsingular) + " square nonsingular";
  });

  failed += report(7, "Laurent row (1+z, 1+z^2)", [](Tally& t) {
    const LaurentPoly f = LaurentPoly::parse("1+z"), g = LaurentPoly::parse("1+z^2");
    const auto w = bezout(f, g);
    t.expect(w.has_value(), "bezout found no pair");
    if (w) t.expect(w->first * f + w->second * g == LaurentPoly(1), "bezout pair does not give 1");
    const auto out = reduction_witness(f, g);
    const auto* proof = std::get_if<IrreducibleProof>(&out);
    t.expect(proof != nullptr, "reduction_witness did not return Irreducible");
    if (proof) {
      t.expect(proof->period == 4, "period " + std::to_string(proof->period));
      t.expect(verify_irreducible(f, g, *proof), "proof fails re-verification");
      t.summary = "a = " + w->first.to_string() + ", b = " + w->second.to_string() + ", period 4";
    }
  });

  failed += report(8, "certificate soundness", [&](Tally& t) {
    std::vector<Graph> graphs = corpus500;
    for (const char* spec : {"line(5)", "rose(2)", "rose(3)", "rose(5)", "loop", "chain3", "enm(2,3)", "tri", "k3", "mult2"})
      graphs.push_back(fam(spec));
    std::size_t counts[4] = {0, 0, 0, 0};
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      const std::string tag = "graph " + std::to_string(i);
      const RankVerdict v = stable_rank(g);
      ++counts[static_cast<int>(v.value)];
      if (v.value == StableRank::Infinite) {
        const auto* w = std::get_if<WitnessH>(&v.certificate);
        t.expect(w && verify_pisu_quotient(g, w->h) && oracle_pisu(g, to_mask(w->h.set())), tag + ": witness H");
      } else if (v.value == StableRank::Two) {
        const auto* w = std::get_if<WitnessCycle>(&v.certificate);
        t.expect(w && is_cycle(g, w->cycle), tag + ": witness cycle");
        for (const HSSet& h : enumerate_hs(g).elements)
          t.expect(!verify_pisu_quotient(g, h), tag + ": a lattice element passes");
        for (Mask h : oracle_hs_sets(g)) t.expect(!oracle_pisu(g, h), tag + ": oracle finds a quotient");
      } else {
        t.expect(is_acyclic(g) && std::holds_alternative<AcyclicCertificate>(v.certificate), tag + ": acyclic");
      }
    }
    t.summary = std::to_string(graphs.size()) + " graphs: " + std::to_string(counts[1]) + " rank 1, " +
                std::to_string(counts[2]) + " rank 2, " + std::to_string(counts[3]) + " rank inf";
  });

  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
