#include "qes/param_expr.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qes {

namespace {

constexpr Exponents kUnitMonomial{};  // all zeros

Exponents single_var(Var v, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return e;
}

unsigned degree_of(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned sum = unsigned{a[i]} + unsigned{b[i]};
    if (sum > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r[i] = static_cast<std::uint8_t>(sum);
  }
  return r;
}

}  // namespace

std::string_view var_name(Var v) {
  switch (v) {
    case Var::alpha1: return "a1";
    case Var::alpha2: return "a2";
    case Var::alpha3: return "a3";
    case Var::alpha4: return "a4";
    case Var::alpha5: return "a5";
    case Var::mu: return "mu";
    case Var::energy: return "E";
    case Var::width_a: return "a";
    case Var::mass_m0: return "m0";
  }
  throw std::logic_error("unknown variable tag");
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MPoly::MPoly(const Rational& value) {
  if (value != 0) terms_.emplace(kUnitMonomial, value);
}

MPoly MPoly::variable(Var v, unsigned power) {
  MPoly p;
  if (power == 0) return MPoly(1);
  p.terms_.emplace(single_var(v, power), Rational(1));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kUnitMonomial);
}

Rational MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.begin()->second;
}

unsigned MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  return degree_of(terms_.rbegin()->first);
}

unsigned MPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, unsigned{e[static_cast<std::size_t>(v)]});
  }
  return d;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) {
  MPoly result;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      result.add_term(add_exponents(ea, eb), ca * cb);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

MPoly MPoly::coefficient_in(Var v, unsigned k) const {
  const auto idx = static_cast<std::size_t>(v);
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == k) {
      Exponents rest = e;
      rest[idx] = 0;
      r.add_term(rest, c);
    }
  }
  return r;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  const auto idx = static_cast<std::size_t>(v);
  MPoly result;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[idx] = 0;
    MPoly term;
    term.add_term(rest, c);
    if (e[idx] > 0) term *= value.pow(e[idx]);
    result += term;
  }
  return result;
}

MPoly MPoly::evaluate_partial(const std::map<Var, Rational>& values) const {
  MPoly result;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest = e;
    for (const auto& [v, x] : values) {
      const auto idx = static_cast<std::size_t>(v);
      for (unsigned k = 0; k < e[idx]; ++k) coeff *= x;
      rest[idx] = 0;
    }
    result.add_term(rest, coeff);
  }
  return result;
}

Rational MPoly::evaluate(const std::map<Var, Rational>& values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      const auto it = values.find(static_cast<Var>(i));
      if (it == values.end()) {
        throw std::invalid_argument(std::string("missing value for variable ") +
                                    std::string(var_name(static_cast<Var>(i))));
      }
      for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
    }
    total += term;
  }
  return total;
}

Rational MPoly::content() const {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd,
                                         boost::multiprecision::numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(c));
  }
  if (num_gcd == 0) return Rational(0);
  return Rational(num_gcd, den_lcm);
}

Exponents MPoly::monomial_gcd() const {
  Exponents g{};
  if (terms_.empty()) return g;
  g.fill(255);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < kVarCount; ++i) g[i] = std::min(g[i], e[i]);
  }
  return g;
}

std::optional<MPoly> MPoly::try_divide(const MPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly remainder = *this;
  MPoly quotient;
  const auto& [dlead_e, dlead_c] = *divisor.terms_.rbegin();
  while (!remainder.is_zero()) {
    const auto& [rlead_e, rlead_c] = *remainder.terms_.rbegin();
    Exponents q{};
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (rlead_e[i] < dlead_e[i]) return std::nullopt;
      q[i] = static_cast<std::uint8_t>(rlead_e[i] - dlead_e[i]);
    }
    MPoly term;
    term.add_term(q, rlead_c / dlead_c);
    quotient += term;
    remainder -= term * divisor;
  }
  return quotient;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    std::string vars;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += std::string(var_name(static_cast<Var>(i)));
      if (e[i] > 1) vars += "^" + std::to_string(unsigned{e[i]});
    }
    if (vars.empty()) {
      out << qes::to_string(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << qes::to_string(mag) << "*" << vars;
    }
  }
  return out.str();
}

ParamExpr::ParamExpr(MPoly numerator) : num_(std::move(numerator)), den_(1) {
  normalize();
}

ParamExpr::ParamExpr(MPoly numerator, MPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator expression");
  normalize();
}

bool ParamExpr::is_rational() const { return num_.is_constant() && den_.is_constant(); }

Rational ParamExpr::rational_value() const {
  if (!is_rational()) {
    throw std::logic_error("expression is symbolic: " + to_string());
  }
  return num_.constant_value() / den_.constant_value();
}

void ParamExpr::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }

  // Strip monomial factors shared by numerator and denominator.
  const Exponents gn = num_.monomial_gcd();
  const Exponents gd = den_.monomial_gcd();
  Exponents g{};
  bool any = false;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    g[i] = std::min(gn[i], gd[i]);
    any = any || g[i] > 0;
  }
  if (any) {
    // Dividing by a monomial is subtracting exponents termwise.
    const auto strip = [&](const MPoly& p) {
      MPoly r;
      for (const auto& [e, c] : p.terms()) {
        Exponents ne{};
        for (std::size_t i = 0; i < kVarCount; ++i) {
          ne[i] = static_cast<std::uint8_t>(e[i] - g[i]);
        }
        r.add_term(ne, c);
      }
      return r;
    };
    num_ = strip(num_);
    den_ = strip(den_);
  }

  // Cancel an exact polynomial quotient when one exists.
  if (auto q = num_.try_divide(den_)) {
    num_ = std::move(*q);
    den_ = MPoly(1);
  }

  // Joint rational scaling: make both parts integer with overall content 1.
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const MPoly* p : {&num_, &den_}) {
    for (const auto& [e, c] : p->terms()) {
      num_gcd = boost::multiprecision::gcd(num_gcd,
                                           boost::multiprecision::numerator(c));
      den_lcm = boost::multiprecision::lcm(
          den_lcm, boost::multiprecision::denominator(c));
    }
  }
  if (num_gcd != 0 && !(num_gcd == den_lcm)) {
    const Rational scale(den_lcm, num_gcd);
    if (scale != 1) {
      num_ = num_ * MPoly(scale);
      den_ = den_ * MPoly(scale);
    }
  }

  // Positive leading coefficient on the denominator.
  if (den_.terms().rbegin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ParamExpr ParamExpr::operator-() const {
  ParamExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

ParamExpr& ParamExpr::operator*=(const ParamExpr& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

ParamExpr& ParamExpr::operator/=(const ParamExpr& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero expression");
  num_ = num_ * rhs.den_;
  den_ = den_ * rhs.num_;
  normalize();
  return *this;
}

bool ParamExpr::operator==(const ParamExpr& rhs) const {
  return num_ * rhs.den_ == rhs.num_ * den_;
}

ParamExpr ParamExpr::substitute(const std::map<Var, ParamExpr>& values) const {
  const ParamExpr den_value = evaluate_poly(den_, values);
  if (den_value.is_zero()) {
    throw std::domain_error("substitution produced a zero denominator");
  }
  return evaluate_poly(num_, values) / den_value;
}

Rational ParamExpr::evaluate(const std::map<Var, Rational>& values) const {
  const Rational d = den_.evaluate(values);
  if (d == 0) throw std::domain_error("expression denominator vanished");
  return num_.evaluate(values) / d;
}

std::string ParamExpr::to_string() const {
  if (is_rational()) return qes::to_string(rational_value());
  if (den_ == MPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ParamExpr evaluate_poly(const MPoly& poly, const std::map<Var, ParamExpr>& values) {
  ParamExpr total(0);
  for (const auto& [e, c] : poly.terms()) {
    ParamExpr term{Rational(c)};
    MPoly symbolic(1);
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      const Var v = static_cast<Var>(i);
      const auto it = values.find(v);
      if (it == values.end()) {
        symbolic *= MPoly::variable(v, e[i]);
      } else {
        for (unsigned k = 0; k < e[i]; ++k) term *= it->second;
      }
    }
    term *= ParamExpr(symbolic);
    total += term;
  }
  return total;
}

ParamExpr solve_linear(const ParamExpr& expr, Var v) {
  const MPoly& num = expr.numerator();
  if (expr.denominator().depends_on(v)) {
    throw std::domain_error("cannot solve: denominator depends on the unknown");
  }
  const unsigned deg = num.degree_in(v);
  if (deg == 0) throw std::domain_error("unknown is absent from the equation");
  if (deg > 1) throw std::domain_error("unknown appears nonlinearly");
  const MPoly a = num.coefficient_in(v, 1);
  const MPoly b = num.coefficient_in(v, 0);
  if (a.is_zero()) throw std::domain_error("degenerate linear equation");
  return ParamExpr(-b, a);
}

}  // namespace qes
