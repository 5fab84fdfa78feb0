#pragma once

#include "qes/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qes {

// Fixed indeterminate set for every symbolic computation in the library:
// the five model coefficients of the reduced second-order operator, the
// deformation parameter, the energy, the mass-profile width and the mass
// scale.  Keeping the set closed lets expressions stay simple sparse
// polynomials with a cheap canonical form instead of a general CAS term.
enum class Var : unsigned {
  alpha1 = 0,
  alpha2,
  alpha3,
  alpha4,
  alpha5,
  mu,
  energy,
  width_a,
  mass_m0,
};

inline constexpr std::size_t kVarCount = 9;

std::string_view var_name(Var v);

// Exponent vector of one monomial; entry i is the power of Var(i).
using Exponents = std::array<std::uint8_t, kVarCount>;

// Graded lexicographic order: total degree first, then lexicographic.
// Gives a deterministic leading term for division and printing.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored coefficient is zero.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  MPoly() = default;
  MPoly(int value) : MPoly(Rational(value)) {}  // NOLINT: arithmetic literals
  MPoly(const Rational& value);                 // NOLINT: coefficient lift

  static MPoly variable(Var v, unsigned power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero allowed); throws std::logic_error
  // if any variable is present.
  Rational constant_value() const;

  unsigned total_degree() const;  // 0 for the zero polynomial
  unsigned degree_in(Var v) const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const MPoly& b) { return a *= b; }
  bool operator==(const MPoly& rhs) const { return terms_ == rhs.terms_; }

  MPoly pow(unsigned k) const;

  // Coefficient of v^k, a polynomial in the remaining variables.
  MPoly coefficient_in(Var v, unsigned k) const;

  // Replaces v by a polynomial value.
  MPoly substitute(Var v, const MPoly& value) const;

  // Replaces the listed variables by rational values; others stay symbolic.
  MPoly evaluate_partial(const std::map<Var, Rational>& values) const;

  // Full evaluation; throws std::invalid_argument if a variable present in
  // the polynomial is missing from the map.
  Rational evaluate(const std::map<Var, Rational>& values) const;

  // gcd of coefficient numerators / lcm of denominators; 0 for zero poly.
  Rational content() const;
  // Per-variable minimum exponent over all terms (zero vector if empty).
  Exponents monomial_gcd() const;

  // Exact quotient this/divisor if it exists (single-divisor multivariate
  // division in graded-lex order; exactness is detected, not assumed).
  std::optional<MPoly> try_divide(const MPoly& divisor) const;

  const TermMap& terms() const { return terms_; }
  void add_term(const Exponents& e, const Rational& c);

  // Deterministic text form, highest graded-lex term first.
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Quotient of two MPoly values with a cheap deterministic canonical form:
//  - zero numerator forces denominator 1;
//  - common monomial factors and the joint rational content are removed;
//  - the denominator's leading coefficient is positive;
//  - exact numerator/denominator division is applied when it exists.
// There is deliberately no general multivariate gcd; equality is decided by
// cross-multiplication, which is exact regardless of reduced form.
class ParamExpr {
 public:
  ParamExpr() : num_(), den_(1) {}
  ParamExpr(int value) : num_(value), den_(1) {}          // NOLINT
  ParamExpr(const Rational& value) : num_(value), den_(1) {}  // NOLINT
  ParamExpr(MPoly numerator);                             // NOLINT
  ParamExpr(MPoly numerator, MPoly denominator);          // throws on zero den

  static ParamExpr variable(Var v) { return ParamExpr(MPoly::variable(v)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const;
  Rational rational_value() const;  // throws std::logic_error if symbolic

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }

  ParamExpr operator-() const;
  ParamExpr& operator+=(const ParamExpr& rhs);
  ParamExpr& operator-=(const ParamExpr& rhs);
  ParamExpr& operator*=(const ParamExpr& rhs);
  ParamExpr& operator/=(const ParamExpr& rhs);  // throws on zero divisor
  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator*(ParamExpr a, const ParamExpr& b) { return a *= b; }
  friend ParamExpr operator/(ParamExpr a, const ParamExpr& b) { return a /= b; }

  // Exact equality by cross-multiplication.
  bool operator==(const ParamExpr& rhs) const;
  bool operator!=(const ParamExpr& rhs) const { return !(*this == rhs); }

  // Replaces the listed variables by expressions; others stay symbolic.
  ParamExpr substitute(const std::map<Var, ParamExpr>& values) const;

  // Full rational evaluation; throws std::invalid_argument on a missing
  // variable and std::domain_error on a vanishing denominator.
  Rational evaluate(const std::map<Var, Rational>& values) const;

  std::string to_string() const;

 private:
  void normalize();

  MPoly num_;
  MPoly den_;
};

// Evaluates a polynomial with each variable replaced by an expression from
// the map (absent variables stay symbolic).
ParamExpr evaluate_poly(const MPoly& poly, const std::map<Var, ParamExpr>& values);

// Solves expr == 0 for a variable appearing linearly: expr = A*v + B with A,
// B free of v gives -B/A.  Throws std::domain_error if v is absent, appears
// nonlinearly, or A == 0.
ParamExpr solve_linear(const ParamExpr& expr, Var v);

}  // namespace qes
