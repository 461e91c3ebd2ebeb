#include "leavitt/ktheory.hpp"

#include <utility>

#include "leavitt/error.hpp"

namespace leavitt {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntMatrix(rows, cols) {
  if (values.size() != rows * cols)
    throw Error(ErrorKind::Precondition, "initializer does not match matrix dimensions");
  std::size_t i = 0;
  for (long v : values) entries_[i++] = v;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::Precondition, "matrix dimension mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::vector<mpz_class> SNFResult::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < D.rows() && i < D.cols(); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Elementary operations applied simultaneously to D and the transform that
// records them (U for rows, V for columns).
struct Reducer {
  IntMatrix& D;
  IntMatrix& U;
  IntMatrix& V;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
  }
  // row[target] += k · row[source]
  void add_row(std::size_t target, std::size_t source, const mpz_class& k) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(target, j) += k * D(source, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(target, j) += k * U(source, j);
  }
  // col[target] += k · col[source]
  void add_col(std::size_t target, std::size_t source, const mpz_class& k) {
    for (std::size_t i = 0; i < D.rows(); ++i) D(i, target) += k * D(i, source);
    for (std::size_t i = 0; i < V.rows(); ++i) V(i, target) += k * V(i, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult res{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  Reducer ops{res.D, res.U, res.V};
  IntMatrix& D = res.D;
  const std::size_t rows = m.rows(), cols = m.cols();

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    while (true) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in
      // row-major order on ties.
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (D(i, j) == 0) continue;
          if (!found || abs(D(i, j)) < abs(D(pr, pc))) {
            found = true;
            pr = i;
            pc = j;
          }
        }
      if (!found) return res;  // trailing block is zero
      ops.swap_rows(t, pr);
      ops.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        ops.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        ops.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            ops.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) ops.negate_row(t);
  }
  return res;
}

IntMatrix k0_relation_matrix(const Graph& g) {
  std::vector<VertexIndex> emitters;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) > 0) emitters.push_back(v);
  IntMatrix m(g.vertex_count(), emitters.size());
  for (std::size_t j = 0; j < emitters.size(); ++j) {
    const VertexIndex v = emitters[j];
    m(v, j) += 1;
    for (EdgeIndex e : g.out_edges(v)) m(g.edge(e).range, j) -= 1;
  }
  return m;
}

K0Presentation k0_presentation(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyGraph, "K0 is undefined for the empty graph");
  const SNFResult snf = smith_normal_form(k0_relation_matrix(g));
  const std::vector<mpz_class> diag = snf.diagonal();

  // [1] = Σ e_v maps to U·(1, …, 1) in the diagonal basis.
  std::vector<mpz_class> unit(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (std::size_t j = 0; j < g.vertex_count(); ++j) unit[i] += snf.U(i, j);

  K0Presentation k0;
  std::size_t rank = 0;
  while (rank < diag.size() && diag[rank] != 0) ++rank;
  k0.free_rank = g.vertex_count() - rank;
  mpz_class free_gcd = 0;
  for (std::size_t i = rank; i < g.vertex_count(); ++i) free_gcd = gcd(free_gcd, unit[i]);

  // The torsion component t of [1] depends on the complement chosen for the
  // torsion subgroup T: it ranges over t + d·T, d = free_gcd. Report the
  // largest order in that coset, which does not depend on the basis. In a
  // factor Z/dᵢ it is dᵢ / gcd(tᵢ, d, dᵢ).
  mpz_class order = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (diag[i] == 1) continue;
    k0.invariant_factors.push_back(diag[i]);
    mpz_class residue;
    mpz_fdiv_r(residue.get_mpz_t(), unit[i].get_mpz_t(), diag[i].get_mpz_t());
    k0.one_class.push_back(residue);
    const mpz_class slack = gcd(free_gcd, diag[i]);
    order = lcm(order, diag[i] / gcd(residue, slack));
  }
  for (std::size_t i = rank; i < g.vertex_count(); ++i) k0.one_class.push_back(unit[i]);
  k0.one_torsion_order = order;
  k0.one_free_gcd = free_gcd;
  return k0;
}

}  // namespace leavitt
