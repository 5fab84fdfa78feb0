#pragma once

#include "qes/param_expr.hpp"
#include "qes/rational.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qes {

// Dense univariate polynomial over an exact coefficient ring R (Rational or
// ParamExpr).  Invariant: the trailing stored coefficient is nonzero.
template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<R> ascending) : c_(ascending) { trim(); }
  explicit Poly(std::vector<R> ascending) : c_(std::move(ascending)) { trim(); }

  static Poly constant(R value) { return Poly({std::move(value)}); }
  static Poly monomial(unsigned k, R coeff = R(1)) {
    std::vector<R> c(k + 1, R(0));
    c[k] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  R coeff(unsigned k) const { return k < c_.size() ? c_[k] : R(0); }
  const std::vector<R>& coefficients() const { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()), R(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const R& s, const Poly& p) {
    return Poly::constant(s) * p;
  }

  bool operator==(const Poly& rhs) const {
    if (c_.size() != rhs.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!(c_[i] == rhs.c_[i])) return false;
    }
    return true;
  }
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  Poly derivative() const {
    if (c_.size() < 2) return Poly();
    std::vector<R> d(c_.size() - 1, R(0));
    for (std::size_t k = 1; k < c_.size(); ++k) {
      d[k - 1] = R(static_cast<int>(k)) * c_[k];
    }
    return Poly(std::move(d));
  }

  R evaluate(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // p(-x): flips the sign of odd coefficients.
  Poly reflect() const {
    Poly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
  }

  Poly even_part() const {
    Poly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = R(0);
    r.trim();
    return r;
  }
  Poly odd_part() const {
    Poly r = *this;
    for (std::size_t k = 0; k < r.c_.size(); k += 2) r.c_[k] = R(0);
    r.trim();
    return r;
  }
  bool is_even() const { return odd_part().is_zero(); }
  bool is_odd() const { return even_part().is_zero(); }

  template <class S, class F>
  Poly<S> map(F&& f) const {
    std::vector<S> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(f(x));
    return Poly<S>(std::move(c));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == R(0)) continue;
      if (!first) out << " + ";
      first = false;
      out << "(" << coeff_text(c_[k]) << ")";
      if (k >= 1) out << "*" << var;
      if (k >= 2) out << "^" << k;
    }
    return out.str();
  }

 private:
  static std::string coeff_text(const Rational& c) { return qes::to_string(c); }
  static std::string coeff_text(const ParamExpr& c) { return c.to_string(); }

  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }

  std::vector<R> c_;
};

using RationalPoly = Poly<Rational>;
using ParamPoly = Poly<ParamExpr>;

inline ParamPoly lift(const RationalPoly& p) {
  return p.map<ParamExpr>([](const Rational& c) { return ParamExpr(c); });
}

inline Poly<double> to_double_poly(const RationalPoly& p) {
  return p.map<double>([](const Rational& c) { return to_double(c); });
}

// Rewrites an even polynomial p(x) as q(z) under the substitution x^2 = s*z,
// so q_k = p_{2k} * s^k.  The caller guarantees p is even.
template <class R>
Poly<R> even_poly_in_z(const Poly<R>& p, const R& s) {
  std::vector<R> q;
  R power(1);
  for (int k = 0; 2 * k <= p.degree(); ++k) {
    q.push_back(p.coeff(2 * k) * power);
    power = power * s;
  }
  return Poly<R>(std::move(q));
}

}  // namespace qes
