#include "qes/sl2.hpp"

#include <stdexcept>

namespace qes {

Matrix<Rational> generator_matrix(Sl2Generator g, QesLevel level) {
  const int n = level.n;
  const auto dim = static_cast<std::size_t>(n + 1);
  Matrix<Rational> m(dim, dim);
  for (int k = 0; k <= n; ++k) {
    const auto col = static_cast<std::size_t>(k);
    switch (g) {
      case Sl2Generator::raising:
        // J+ z^k = (k - n) z^{k+1}; the top basis vector is annihilated,
        // which is exactly why the span is invariant.
        if (k < n) m.at(col + 1, col) = Rational(k - n);
        break;
      case Sl2Generator::cartan:
        m.at(col, col) = Rational(k) - Rational(n, 2);
        break;
      case Sl2Generator::lowering:
        if (k > 0) m.at(col - 1, col) = Rational(k);
        break;
    }
  }
  return m;
}

template <class T>
DiffOperator2<T> generator_operator(Sl2Generator g, QesLevel level) {
  const int n = level.n;
  DiffOperator2<T> op;
  switch (g) {
    case Sl2Generator::raising:
      op.c1 = Poly<T>::monomial(2);
      op.c0 = Poly<T>::monomial(1, T(Rational(-n)));
      break;
    case Sl2Generator::cartan:
      op.c1 = Poly<T>::monomial(1);
      op.c0 = Poly<T>::constant(T(Rational(-n, 2)));
      break;
    case Sl2Generator::lowering:
      op.c1 = Poly<T>::constant(T(1));
      break;
  }
  return op;
}

template <class T>
DiffOperator2<T> build_qes_operator(const Sl2Coefficients<T>& c, QesLevel level) {
  const auto jp = generator_operator<T>(Sl2Generator::raising, level);
  const auto j0 = generator_operator<T>(Sl2Generator::cartan, level);
  const auto jm = generator_operator<T>(Sl2Generator::lowering, level);

  DiffOperator2<T> op = c.c_pp * op_compose(jp, jp);
  op = op + c.c_p0 * op_compose(jp, j0);
  op = op + c.c_pm * op_compose(jp, jm);
  op = op + c.c_0m * op_compose(j0, jm);
  op = op + c.c_mm * op_compose(jm, jm);
  op = op + c.c_p * jp;
  op = op + c.c_0 * j0;
  op = op + c.c_m * jm;
  op.c0 = op.c0 + Poly<T>::constant(c.c_const);
  return op;
}

template <class T>
DiffOperator2<T> expanded_qes_operator(const Sl2Coefficients<T>& c, QesLevel level) {
  const Rational n(level.n);
  const auto lift = [](const Rational& r) { return T(r); };

  DiffOperator2<T> op;
  op.c2 = Poly<T>({c.c_mm, c.c_0m, c.c_pm, c.c_p0, c.c_pp});
  op.c1 = Poly<T>({c.c_m - lift(n / 2) * c.c_0m,
                   c.c_0 - lift(n) * c.c_pm,
                   c.c_p + lift(1 - Rational(3) * n / 2) * c.c_p0,
                   lift(2 - 2 * n) * c.c_pp});
  op.c0 = Poly<T>({c.c_const - lift(n / 2) * c.c_0,
                   lift(n * n / 2) * c.c_p0 - lift(n) * c.c_p,
                   lift(n * (n - 1)) * c.c_pp});
  return op;
}

template <class T>
DiffOperator2<T> model_z_operator(const AlphaParams<T>& alpha) {
  DiffOperator2<T> op;
  op.c2 = Poly<T>({T(0), T(0), T(1), T(-1)});
  op.c1 = Poly<T>({T(0), alpha.a1 + alpha.a3, alpha.a2 - alpha.a3});
  op.c0 = Poly<T>({alpha.a5, alpha.a4});
  return op;
}

template <class T>
MatchResult<T> match_model_coefficients(const AlphaParams<T>& alpha, QesLevel level) {
  const auto target = model_z_operator(alpha);
  const auto jp = generator_operator<T>(Sl2Generator::raising, level);
  const auto j0 = generator_operator<T>(Sl2Generator::cartan, level);
  const auto jm = generator_operator<T>(Sl2Generator::lowering, level);

  Sl2Coefficients<T> c;

  // Order two: the five products have second-order symbols z^4..z^0, so the
  // d^2 coefficient determines them degree by degree (J0J0 is excluded by
  // convention; its slot coincides with J+J-).
  const Poly<T>& r2 = target.c2;
  if (r2.degree() > 4) throw std::logic_error("target operator outside the generator span");
  c.c_pp = r2.coeff(4);
  c.c_p0 = r2.coeff(3);
  c.c_pm = r2.coeff(2);
  c.c_0m = r2.coeff(1);
  c.c_mm = r2.coeff(0);

  DiffOperator2<T> achieved = c.c_pp * op_compose(jp, jp);
  achieved = achieved + c.c_p0 * op_compose(jp, j0);
  achieved = achieved + c.c_pm * op_compose(jp, jm);
  achieved = achieved + c.c_0m * op_compose(j0, jm);
  achieved = achieved + c.c_mm * op_compose(jm, jm);

  // Order one: the generators themselves have symbols z^2, z, 1.
  const Poly<T> r1 = target.c1 - achieved.c1;
  if (r1.degree() > 2) throw std::logic_error("first-order remainder outside the generator span");
  c.c_p = r1.coeff(2);
  c.c_0 = r1.coeff(1);
  c.c_m = r1.coeff(0);

  achieved = achieved + c.c_p * jp;
  achieved = achieved + c.c_0 * j0;
  achieved = achieved + c.c_m * jm;

  // Order zero: only a constant is available, so the z coefficient of the
  // remainder is the obstruction; it must vanish for an exact match.
  const Poly<T> r0 = target.c0 - achieved.c0;
  if (r0.degree() > 1) throw std::logic_error("zeroth-order remainder outside the generator span");
  c.c_const = r0.coeff(0);

  return {c, T(0) - r0.coeff(1)};
}

template <class T>
QesMatrix<T> qes_matrix(const AlphaParams<T>& alpha, QesLevel level, bool strict) {
  const auto op = model_z_operator(alpha);
  const int n = level.n;
  const auto dim = static_cast<std::size_t>(n + 1);

  QesMatrix<T> result{Matrix<T>(dim, dim), std::vector<T>(dim, T(0))};
  for (int k = 0; k <= n; ++k) {
    const Poly<T> image = op_apply(op, Poly<T>::monomial(static_cast<unsigned>(k)));
    if (image.degree() > n + 1) {
      throw std::logic_error("model operator raised the degree by more than one");
    }
    for (int i = 0; i <= n; ++i) {
      result.action.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          image.coeff(static_cast<unsigned>(i));
    }
    result.overflow[static_cast<std::size_t>(k)] =
        image.coeff(static_cast<unsigned>(n + 1));
    if (strict && !(result.overflow[static_cast<std::size_t>(k)] == T(0))) {
      throw ConstraintViolatedError(
          "the span of {1..z^n} is not invariant: z^{n+1} coefficient survives "
          "in column " + std::to_string(k));
    }
  }
  return result;
}

Rational determinant_condition(const Matrix<Rational>& action) {
  return bareiss_determinant(action);
}

ParamExpr determinant_condition(const Matrix<ParamExpr>& action) {
  return expression_determinant(action);
}

template DiffOperator2<Rational> generator_operator<Rational>(Sl2Generator, QesLevel);
template DiffOperator2<ParamExpr> generator_operator<ParamExpr>(Sl2Generator, QesLevel);
template DiffOperator2<Rational> build_qes_operator<Rational>(const Sl2Coefficients<Rational>&, QesLevel);
template DiffOperator2<ParamExpr> build_qes_operator<ParamExpr>(const Sl2Coefficients<ParamExpr>&, QesLevel);
template DiffOperator2<Rational> expanded_qes_operator<Rational>(const Sl2Coefficients<Rational>&, QesLevel);
template DiffOperator2<ParamExpr> expanded_qes_operator<ParamExpr>(const Sl2Coefficients<ParamExpr>&, QesLevel);
template DiffOperator2<Rational> model_z_operator<Rational>(const AlphaParams<Rational>&);
template DiffOperator2<ParamExpr> model_z_operator<ParamExpr>(const AlphaParams<ParamExpr>&);
template MatchResult<Rational> match_model_coefficients<Rational>(const AlphaParams<Rational>&, QesLevel);
template MatchResult<ParamExpr> match_model_coefficients<ParamExpr>(const AlphaParams<ParamExpr>&, QesLevel);
template QesMatrix<Rational> qes_matrix<Rational>(const AlphaParams<Rational>&, QesLevel, bool);
template QesMatrix<ParamExpr> qes_matrix<ParamExpr>(const AlphaParams<ParamExpr>&, QesLevel, bool);

}  // namespace qes
