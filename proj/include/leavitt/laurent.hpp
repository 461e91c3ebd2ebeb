#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace leavitt {

/// Element of Q[z, z⁻¹]. Zero coefficients are never stored, so the
/// representation is unique.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(mpq_class constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(mpq_class coefficient, long exponent);
  static LaurentPoly z() { return monomial(1, 1); }

  /// Parses literals such as `1+z`, `1+z^2`, `3*z^-2`, `-1/2*z+1/2`.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Lowest and highest exponents present; require a nonzero polynomial.
  long min_exponent() const;
  long max_exponent() const;
  mpq_class coefficient(long exponent) const;
  const std::map<long, mpq_class>& terms() const noexcept { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly shifted(long k) const;  // multiply by z^k

  bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }

  std::string to_string() const;

 private:
  void add_term(long exponent, const mpq_class& c);

  std::map<long, mpq_class> terms_;
};

/// Units of the Laurent ring are exactly the nonzero monomials.
bool is_unit(const LaurentPoly& a);

/// a·z^(-min exponent): a polynomial with nonzero constant term, or zero.
LaurentPoly normalization(const LaurentPoly& a);

/// Polynomial division with remainder over Q; both arguments must have only
/// nonnegative exponents and the divisor must be nonzero.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// (a, b) with a·f + b·g = 1 when f and g are comaximal; nullopt otherwise.
/// Throws Error(Precondition) when both are zero.
std::optional<std::pair<LaurentPoly, LaurentPoly>> bezout(const LaurentPoly& f, const LaurentPoly& g);

struct Reducible {
  LaurentPoly v;  // f + v·g is a unit
};

/// Certificate that no v makes f + v·g a unit: z has order `period` modulo
/// the normalization of g, and f is not a nonzero scalar multiple of any of
/// the residues z^k (0 ≤ k < period).
struct IrreducibleProof {
  LaurentPoly modulus;
  std::size_t period = 0;
  std::vector<LaurentPoly> residues;  // z^k mod modulus
  LaurentPoly target;                 // f mod modulus
};

struct Inconclusive {};

using ReductionOutcome = std::variant<Reducible, IrreducibleProof, Inconclusive>;

struct ReductionOptions {
  long window = 8;               // exponents searched when no period is found
  std::size_t period_bound = 1024;
};

ReductionOutcome reduction_witness(const LaurentPoly& f, const LaurentPoly& g,
                                   const ReductionOptions& options = {});

/// Re-derives every residue and comparison in the proof from f and g.
bool verify_irreducible(const LaurentPoly& f, const LaurentPoly& g, const IrreducibleProof& proof);

}  // namespace leavitt
