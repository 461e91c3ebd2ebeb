#include "leavitt/laurent.hpp"

#include <cctype>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(mpq_class(constant)) {}

LaurentPoly::LaurentPoly(mpq_class constant) {
  constant.canonicalize();
  if (constant != 0) terms_.emplace(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(mpq_class coefficient, long exponent) {
  LaurentPoly p;
  coefficient.canonicalize();
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(long exponent, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

long LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::Precondition, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

mpq_class LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, mpq_class(ca * cb));
  return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const mpq_class magnitude = abs(c);
    if (negative)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << 'z';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip();
    if (done()) fail("empty polynomial");
    bool first = true;
    while (!done()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result = result + term(sign);
      skip();
    }
    return result;
  }

 private:
  LaurentPoly term(int sign) {
    mpq_class coefficient = sign;
    bool has_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient *= number();
      has_number = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'z') fail("expected 'z' after '*'");
      }
    }
    if (peek() != 'z') {
      if (!has_number) fail("expected a coefficient or 'z'");
      return LaurentPoly(coefficient);
    }
    ++pos_;
    skip();
    long exponent = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      long s = 1;
      if (peek() == '-') {
        s = -1;
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      exponent = s * std::stol(digits());
    }
    return LaurentPoly::monomial(coefficient, exponent);
  }

  mpq_class number() {
    mpq_class value{mpz_class(digits())};
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      mpz_class den(digits());
      if (den == 0) fail("zero denominator");
      value /= den;
    }
    value.canonicalize();
    return value;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(1, pos_ + 1, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// a mod m in Q[z, z⁻¹]/(m), where m is a polynomial with m(0) ≠ 0 and
/// positive degree; the result has degree < deg m.
LaurentPoly reduce_mod(const LaurentPoly& a, const LaurentPoly& m) {
  if (a.is_zero()) return a;
  const long low = a.min_exponent();
  if (low >= 0) return poly_divmod(a, m).second;
  // z⁻¹ ≡ -(m - m(0)) / (m(0)·z)
  const mpq_class c0 = m.coefficient(0);
  const LaurentPoly z_inverse =
      ((m - LaurentPoly(c0)).shifted(-1)) * LaurentPoly(mpq_class(-1 / c0));
  LaurentPoly scale(1);
  for (long i = 0; i < -low; ++i) scale = poly_divmod(scale * z_inverse, m).second;
  const LaurentPoly body = poly_divmod(a.shifted(-low), m).second;
  return poly_divmod(body * scale, m).second;
}

/// Nonzero c with target = c·r, if any.
std::optional<mpq_class> scalar_ratio(const LaurentPoly& target, const LaurentPoly& r) {
  if (target.is_zero() || r.is_zero()) return std::nullopt;
  const long lead = r.max_exponent();
  if (target.max_exponent() != lead) return std::nullopt;
  mpq_class c = target.coefficient(lead) / r.coefficient(lead);
  c.canonicalize();
  if (target == r * LaurentPoly(c)) return c;
  return std::nullopt;
}

/// v with f + v·g = c·z^k, given that c·z^k ≡ f modulo g's normalization.
LaurentPoly solve_for_v(const LaurentPoly& f, const LaurentPoly& g, const mpq_class& c, long k) {
  const LaurentPoly w = LaurentPoly::monomial(c, k) - f;
  if (w.is_zero()) return LaurentPoly();
  const long s = -w.min_exponent();
  const LaurentPoly g_hat = normalization(g);
  auto [q, r] = poly_divmod(w.shifted(s), g_hat);
  if (!r.is_zero()) throw Error(ErrorKind::Internal, "residue match did not divide exactly");
  return q.shifted(-s - g.min_exponent());
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

bool is_unit(const LaurentPoly& a) { return a.terms().size() == 1; }

LaurentPoly normalization(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  return a.shifted(-a.min_exponent());
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Precondition, "division by the zero polynomial");
  if ((!a.is_zero() && a.min_exponent() < 0) || b.min_exponent() < 0)
    throw Error(ErrorKind::Precondition, "polynomial division needs nonnegative exponents");
  LaurentPoly quotient, remainder = a;
  const long db = b.max_exponent();
  const mpq_class lead = b.coefficient(db);
  while (!remainder.is_zero() && remainder.max_exponent() >= db) {
    const long shift = remainder.max_exponent() - db;
    mpq_class c = remainder.coefficient(remainder.max_exponent()) / lead;
    c.canonicalize();
    const LaurentPoly step = LaurentPoly::monomial(c, shift);
    quotient = quotient + step;
    remainder = remainder - step * b;
  }
  return {quotient, remainder};
}

std::optional<std::pair<LaurentPoly, LaurentPoly>> bezout(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::Precondition, "bezout needs a nonzero argument");
  const LaurentPoly fh = normalization(f), gh = normalization(g);
  auto degree = [](const LaurentPoly& p) { return p.is_zero() ? -1 : p.max_exponent(); };

  // Invariant: r = s·f̂ + t·ĝ for both rows.
  struct Row {
    LaurentPoly r, s, t;
  };
  Row a{fh, 1, 0}, b{gh, 0, 1};
  if (degree(fh) < degree(gh)) std::swap(a, b);
  while (!b.r.is_zero()) {
    const LaurentPoly q = poly_divmod(a.r, b.r).first;
    Row next{a.r - q * b.r, a.s - q * b.s, a.t - q * b.t};
    a = std::move(b);
    b = std::move(next);
  }
  if (degree(a.r) != 0) return std::nullopt;
  const LaurentPoly inverse(mpq_class(1 / a.r.coefficient(0)));
  LaurentPoly x = a.s * inverse, y = a.t * inverse;
  if (!f.is_zero()) x = x.shifted(-f.min_exponent());
  if (!g.is_zero()) y = y.shifted(-g.min_exponent());
  return std::make_pair(x, y);
}

ReductionOutcome reduction_witness(const LaurentPoly& f, const LaurentPoly& g,
                                   const ReductionOptions& options) {
  if (g.is_zero()) throw Error(ErrorKind::Precondition, "g has zero normalization");
  if (is_unit(f)) return Reducible{LaurentPoly()};
  const LaurentPoly modulus = normalization(g);
  if (modulus.max_exponent() == 0) {
    // g is a unit: f + ((1 - f)/g)·g = 1.
    return Reducible{solve_for_v(f, g, 1, 0)};
  }

  const LaurentPoly target = reduce_mod(f, modulus);
  const LaurentPoly z_mod = reduce_mod(LaurentPoly::z(), modulus);

  std::vector<LaurentPoly> residues{LaurentPoly(1)};
  std::size_t period = 0;
  for (std::size_t k = 1; k <= options.period_bound; ++k) {
    LaurentPoly next = poly_divmod(residues.back() * z_mod, modulus).second;
    if (next == LaurentPoly(1)) {
      period = k;
      break;
    }
    residues.push_back(std::move(next));
  }

  if (period != 0) {
    for (std::size_t k = 0; k < period; ++k)
      if (auto c = scalar_ratio(target, residues[k]))
        return Reducible{solve_for_v(f, g, *c, static_cast<long>(k))};
    return IrreducibleProof{modulus, period, std::move(residues), target};
  }

  for (long k = -options.window; k <= options.window; ++k) {
    const LaurentPoly residue = reduce_mod(LaurentPoly::monomial(1, k), modulus);
    if (auto c = scalar_ratio(target, residue)) return Reducible{solve_for_v(f, g, *c, k)};
  }
  return Inconclusive{};
}

bool verify_irreducible(const LaurentPoly& f, const LaurentPoly& g, const IrreducibleProof& proof) {
  if (g.is_zero() || proof.period == 0) return false;
  const LaurentPoly modulus = normalization(g);
  if (!(proof.modulus == modulus) || modulus.max_exponent() == 0) return false;
  if (proof.residues.size() != proof.period) return false;
  LaurentPoly power(1);
  for (std::size_t k = 0; k < proof.period; ++k) {
    if (!(proof.residues[k] == power)) return false;
    power = poly_divmod(power.shifted(1), modulus).second;
  }
  if (!(power == LaurentPoly(1))) return false;  // z^period ≡ 1
  if (!(proof.target == reduce_mod(f, modulus))) return false;
  for (const LaurentPoly& r : proof.residues)
    if (scalar_ratio(proof.target, r)) return false;
  return true;
}

}  // namespace leavitt
