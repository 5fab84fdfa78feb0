#pragma once

#include "qes/diff_operator.hpp"
#include "qes/matrix.hpp"
#include "qes/model.hpp"
#include "qes/param_expr.hpp"

#include <vector>

namespace qes {

// Label of the three first-order generators acting on polynomials in z:
//   raising  J+ = z^2 d/dz - n z
//   cartan   J0 = z d/dz - n/2
//   lowering J- = d/dz
// They close under commutation and preserve the span of {1, z, ..., z^n}.
enum class Sl2Generator { raising, cartan, lowering };

// Representation label n >= 0; the invariant subspace has dimension n + 1.
struct QesLevel {
  int n;
  explicit QesLevel(int level) : n(level) {
    if (n < 0) throw std::invalid_argument("representation label must be >= 0");
  }
};

// Matrix of a generator on the basis {z^0, ..., z^n}; column k holds the
// coefficients of J(z^k).
Matrix<Rational> generator_matrix(Sl2Generator g, QesLevel level);

template <class T>
DiffOperator2<T> generator_operator(Sl2Generator g, QesLevel level);

// Coefficients of the quadratic combination
//   c_pp J+J+ + c_p0 J+J0 + c_pm J+J- + c_0m J0J- + c_mm J-J-
//   + c_p J+ + c_0 J0 + c_m J- + c_const.
// The J0J0 product is omitted: its symbol overlaps J+J- at order z^2 d^2 and
// the matching convention resolves the ambiguity in favour of J+J-.
template <class T>
struct Sl2Coefficients {
  T c_pp{0}, c_p0{0}, c_pm{0}, c_0m{0}, c_mm{0};
  T c_p{0}, c_0{0}, c_m{0};
  T c_const{0};
};

// The combination evaluated by actual operator composition.
template <class T>
DiffOperator2<T> build_qes_operator(const Sl2Coefficients<T>& c, QesLevel level);

// The same combination written out in closed form (coefficient polynomials
// of d^2, d, 1 as explicit formulas in n).  Kept separate from
// build_qes_operator so the two routes can be compared term by term.
template <class T>
DiffOperator2<T> expanded_qes_operator(const Sl2Coefficients<T>& c, QesLevel level);

// Reduced model operator in the z variable:
//   (z^2 - z^3) d^2 + [(a2 - a3) z^2 + (a1 + a3) z] d + (a4 z + a5).
template <class T>
DiffOperator2<T> model_z_operator(const AlphaParams<T>& alpha);

// Result of expressing the model operator in the generator basis.  The
// operator coefficients match exactly; one scalar relation is left over
// because no generator produces a plain multiple of z at order zero:
//   constraint = (-n^2/2 - n c_p) - a4, which must vanish for the model
// operator to lie in the enveloping algebra of the level-n representation.
template <class T>
struct MatchResult {
  Sl2Coefficients<T> coefficients;
  T constraint;
};

template <class T>
MatchResult<T> match_model_coefficients(const AlphaParams<T>& alpha, QesLevel level);

// Action of the model operator on the span of {z^0, ..., z^n}: column k of
// `action` holds the coefficients of the image of z^k inside the span, and
// overflow[k] is the z^{n+1} coefficient that falls outside.  Only the last
// column can overflow, and its value is the matching constraint; in strict
// mode a nonzero overflow raises ConstraintViolatedError.
template <class T>
struct QesMatrix {
  Matrix<T> action;
  std::vector<T> overflow;
};

template <class T>
QesMatrix<T> qes_matrix(const AlphaParams<T>& alpha, QesLevel level,
                        bool strict = false);

// Existence condition for a nontrivial kernel vector: the determinant of the
// reduced action, computed fraction-free.
Rational determinant_condition(const Matrix<Rational>& action);
ParamExpr determinant_condition(const Matrix<ParamExpr>& action);

}  // namespace qes
