#pragma once

// Hand-rolled reference implementations used to cross-check the library.
// Everything here is deliberately independent of the library's algorithms:
// determinants by Laplace expansion instead of fraction-free elimination, and
// the variable-mass operator applied symbolically in the quadratic extension
// Q(x)[r] / (r^2 = q(x)) instead of finite differences.

#include "qes/matrix.hpp"
#include "qes/model.hpp"
#include "qes/poly.hpp"

#include <cstddef>

namespace oracle {

using qes::Rational;
using qes::RationalPoly;

// Laplace expansion along the first row; fine for the small matrices used in
// tests.
template <class T>
T cofactor_determinant(const qes::Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  T det = T(0);
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    qes::Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t out = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, out++) = m.at(r, c);
      }
    }
    const T term = m.at(0, j) * cofactor_determinant(minor);
    if (sign > 0) {
      det = det + term;
    } else {
      det = det - term;
    }
    sign = -sign;
  }
  return det;
}

// Rational function of x with exact coefficients.  No reduction is attempted;
// equality cross-multiplies and evaluation divides exactly.
struct FracPoly {
  RationalPoly num;
  RationalPoly den = RationalPoly::constant(Rational(1));

  static FracPoly constant(const Rational& c) {
    return {RationalPoly::constant(c), RationalPoly::constant(Rational(1))};
  }
  static FracPoly poly(RationalPoly p) {
    return {std::move(p), RationalPoly::constant(Rational(1))};
  }

  bool is_zero() const { return num.is_zero(); }

  FracPoly operator+(const FracPoly& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  FracPoly operator-(const FracPoly& o) const {
    return {num * o.den - o.num * den, den * o.den};
  }
  FracPoly operator*(const FracPoly& o) const { return {num * o.num, den * o.den}; }
  FracPoly operator/(const FracPoly& o) const { return {num * o.den, den * o.num}; }

  bool operator==(const FracPoly& o) const { return num * o.den == o.num * den; }

  FracPoly derivative() const {
    return {num.derivative() * den - num * den.derivative(), den * den};
  }
  FracPoly reflect() const { return {num.reflect(), den.reflect()}; }

  double evaluate(double x) const {
    return qes::to_double_poly(num).evaluate(x) / qes::to_double_poly(den).evaluate(x);
  }
};

// Element c0 + c1 * r of the extension ring, with r^2 = q(x) fixed by the
// surrounding PdmModel (r plays the role of 1/sqrt(m)).
struct RadicalElement {
  FracPoly c0;
  FracPoly c1;
};

inline RadicalElement radical_add(const RadicalElement& a, const RadicalElement& b) {
  return {a.c0 + b.c0, a.c1 + b.c1};
}

inline RadicalElement radical_sub(const RadicalElement& a, const RadicalElement& b) {
  return {a.c0 - b.c0, a.c1 - b.c1};
}

inline RadicalElement radical_scale(const FracPoly& s, const RadicalElement& a) {
  return {s * a.c0, s * a.c1};
}

inline RadicalElement radical_mul_root(const RadicalElement& a, const FracPoly& q) {
  return {a.c1 * q, a.c0};  // (c0 + c1 r) r = c1 q + c0 r
}

// d/dx on c0 + c1 r:  r' = q' / (2 r) = (q' / (2 q)) r.
inline RadicalElement radical_derivative(const RadicalElement& a, const FracPoly& q) {
  const FracPoly half = FracPoly::constant(Rational(1, 2));
  return {a.c0.derivative(),
          a.c1.derivative() + a.c1 * q.derivative() * half / q};
}

inline RadicalElement radical_reflect(const RadicalElement& a) {
  // q is even for the profiles used here, so r itself is reflection-invariant.
  return {a.c0.reflect(), a.c1.reflect()};
}

// Reflection-difference derivative D = d/dx + (mu/x)(1 - R).
inline RadicalElement radical_dunkl(const RadicalElement& a, const Rational& mu,
                                    const FracPoly& q) {
  const FracPoly mu_over_x{RationalPoly::constant(mu), RationalPoly::monomial(1)};
  return radical_add(radical_derivative(a, q),
                     radical_scale(mu_over_x, radical_sub(a, radical_reflect(a))));
}

// The full kinetic operator -(1/2) D (r D (r psi)) applied to a polynomial,
// with r = 1/sqrt(m) and r^2 = q = (a^2 + x^2)/(a^2 m0).  Both root
// multiplications flip the grade, so the result is a plain rational function,
// returned as the grade-zero component (the grade-one component is zero by
// construction and asserted by callers).
inline RadicalElement pdm_kinetic_apply(const qes::PdmModel& model,
                                        const RationalPoly& psi) {
  const Rational a2 = model.a * model.a;
  const FracPoly q{RationalPoly({a2, Rational(0), Rational(1)}),
                   RationalPoly::constant(a2 * model.m0)};
  const RadicalElement start{FracPoly::poly(psi), FracPoly::constant(Rational(0))};
  const RadicalElement inner =
      radical_dunkl(radical_mul_root(start, q), model.mu.mu(), q);
  const RadicalElement outer =
      radical_dunkl(radical_mul_root(inner, q), model.mu.mu(), q);
  return radical_scale(FracPoly::constant(Rational(-1, 2)), outer);
}

}  // namespace oracle
