#pragma once

#include "qes/errors.hpp"
#include "qes/poly.hpp"

#include <string>
#include <utility>

namespace qes {

// Linear differential operator of order at most two with polynomial
// coefficients: c2(x) d^2/dx^2 + c1(x) d/dx + c0(x).
template <class R>
struct DiffOperator2 {
  Poly<R> c2, c1, c0;

  bool is_zero() const { return c2.is_zero() && c1.is_zero() && c0.is_zero(); }
  int order() const { return !c2.is_zero() ? 2 : (!c1.is_zero() ? 1 : 0); }

  friend DiffOperator2 operator+(const DiffOperator2& a, const DiffOperator2& b) {
    return {a.c2 + b.c2, a.c1 + b.c1, a.c0 + b.c0};
  }
  friend DiffOperator2 operator-(const DiffOperator2& a, const DiffOperator2& b) {
    return {a.c2 - b.c2, a.c1 - b.c1, a.c0 - b.c0};
  }
  friend DiffOperator2 operator*(const R& s, const DiffOperator2& op) {
    return {s * op.c2, s * op.c1, s * op.c0};
  }
  friend DiffOperator2 operator*(const Poly<R>& s, const DiffOperator2& op) {
    return {s * op.c2, s * op.c1, s * op.c0};
  }
  bool operator==(const DiffOperator2& rhs) const {
    return c2 == rhs.c2 && c1 == rhs.c1 && c0 == rhs.c0;
  }

  std::string to_string(const std::string& var = "x") const {
    return "[" + c2.to_string(var) + "] d2 + [" + c1.to_string(var) +
           "] d + [" + c0.to_string(var) + "]";
  }
};

template <class R>
Poly<R> op_apply(const DiffOperator2<R>& op, const Poly<R>& p) {
  const Poly<R> dp = p.derivative();
  return op.c2 * dp.derivative() + op.c1 * dp + op.c0 * p;
}

// Operator composition A(B(f)).  Defined whenever the combined order stays
// at most two; otherwise third-order terms would appear and the fixed shape
// cannot hold, so we refuse.
template <class R>
DiffOperator2<R> op_compose(const DiffOperator2<R>& a, const DiffOperator2<R>& b) {
  if (a.order() + b.order() > 2) {
    throw std::domain_error("operator composition exceeds order two");
  }
  if (a.order() == 0) return a.c0 * b;
  if (b.order() == 0) {
    // A(g f) with polynomial g: expand the product rule.
    const Poly<R>& g = b.c0;
    const Poly<R> dg = g.derivative();
    return {a.c2 * g, R(2) * (a.c2 * dg) + a.c1 * g,
            a.c2 * dg.derivative() + a.c1 * dg + a.c0 * g};
  }
  // Both strictly first order: (a1 d + a0)(b1 d + b0).
  const Poly<R>&a1 = a.c1, &a0 = a.c0, &b1 = b.c1, &b0 = b.c0;
  return {a1 * b1, a1 * b1.derivative() + a1 * b0 + a0 * b1,
          a1 * b0.derivative() + a0 * b0};
}

// Change of variable x^2 = -(a_squared) z applied to an operator acting on
// parity eigenfunctions of x (so they become functions of z).  Under the map,
//   d/dx   -> (-2x/a_squared) d/dz
//   d2/dx2 -> (-4z/a_squared) d2/dz2 - (2/a_squared) d/dz.
// Coefficient parities must be compatible: c2 and c0 even, c1 odd (or zero),
// i.e. the operator preserves parity.  Anything else cannot be expressed in
// the z variable and raises OddCoefficientError.
template <class R>
DiffOperator2<R> op_substitute_quadratic_scaled(const DiffOperator2<R>& op,
                                                const R& a_squared) {
  if (a_squared == R(0)) {
    throw std::invalid_argument("substitution scale must be invertible");
  }
  if (!op.c2.is_even() || !op.c0.is_even() || !op.c1.is_odd()) {
    throw OddCoefficientError(
        "operator coefficients have mixed parity; cannot substitute x^2 -> z");
  }
  const R s = R(0) - a_squared;             // x^2 = s z
  const R inv = R(Rational(-2)) / a_squared;  // -2/a^2
  const R quad = R(Rational(-4)) / a_squared;
  const Poly<R> C2 = even_poly_in_z(op.c2, s);
  const Poly<R> C1x = even_poly_in_z(Poly<R>::monomial(1) * op.c1, s);
  const Poly<R> C0 = even_poly_in_z(op.c0, s);

  DiffOperator2<R> result;
  result.c2 = (quad * Poly<R>::monomial(1)) * C2;
  result.c1 = inv * (C2 + C1x);
  result.c0 = C0;
  return result;
}

template <class R>
DiffOperator2<R> op_substitute_quadratic(const DiffOperator2<R>& op,
                                         const Rational& a) {
  if (a <= 0) throw std::invalid_argument("width parameter must be positive");
  return op_substitute_quadratic_scaled(op, R(a * a));
}

// Rational function kept as an explicit numerator/denominator pair.
template <class R>
struct RationalFunction {
  Poly<R> num;
  Poly<R> den = Poly<R>::constant(R(1));
};

// Operator together with a scalar polynomial denominator: the pair stands
// for op/den without introducing rational-function coefficients.
template <class R>
struct GaugedOperator {
  DiffOperator2<R> op;
  Poly<R> denominator;
};

// Similarity transform G^{-1} H G for a gauge factor G with logarithmic
// derivative G'/G = num/den.  Uses d -> d + (num/den) and
// d^2 -> d^2 + 2(num/den) d + (num/den)^2 + (num/den)', returned over the
// common denominator den^2.
template <class R>
GaugedOperator<R> gauge_similarity(const DiffOperator2<R>& op,
                                   const RationalFunction<R>& logderiv) {
  if (logderiv.den.is_zero()) {
    throw std::domain_error("gauge factor has zero denominator");
  }
  const Poly<R>& n = logderiv.num;
  const Poly<R>& d = logderiv.den;
  const Poly<R> d2 = d * d;
  // (n/d)' = (n' d - n d') / d^2.
  const Poly<R> deriv_num = n.derivative() * d - n * d.derivative();

  GaugedOperator<R> g;
  g.op.c2 = op.c2 * d2;
  g.op.c1 = R(2) * (op.c2 * n * d) + op.c1 * d2;
  g.op.c0 = op.c2 * (n * n + deriv_num) + op.c1 * n * d + op.c0 * d2;
  g.denominator = d2;
  return g;
}

}  // namespace qes
