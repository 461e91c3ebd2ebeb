#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "leavitt/graph.hpp"

namespace leavitt {

/// Dense exact integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

/// U·M·V = D with U, V unimodular and D diagonal: d₁ | d₂ | … , dᵢ ≥ 0, zeros
/// last.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// The min(rows, cols) diagonal entries of D.
  std::vector<mpz_class> diagonal() const;
};

SNFResult smith_normal_form(const IntMatrix& m);

/// Cokernel presentation of the graph monoid's group completion: generators
/// e_v for every vertex, one relation e_v = Σ_{s(e)=v} e_{r(e)} per non-sink v.
IntMatrix k0_relation_matrix(const Graph& g);

struct K0Presentation {
  std::vector<mpz_class> invariant_factors;  // torsion, each ≥ 2, dividing the next
  std::size_t free_rank = 0;
  /// [1] in the SNF basis: one residue per torsion factor, then the free part.
  std::vector<mpz_class> one_class;
  /// Largest order of the torsion component of [1] over all splittings
  /// K0 = T ⊕ Z^r. Equals the plain order when the free part of [1] is 0.
  mpz_class one_torsion_order = 1;
  mpz_class one_free_gcd = 0;  // 0 when the free part of [1] vanishes

  bool operator==(const K0Presentation&) const = default;
};

K0Presentation k0_presentation(const Graph& g);

}  // namespace leavitt
