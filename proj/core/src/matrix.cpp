#include "qes/matrix.hpp"

namespace qes {

ParamExpr expression_determinant(const Matrix<ParamExpr>& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return ParamExpr(1);

  // Clear each row to polynomial entries; accumulate the scale factor.
  Matrix<MPoly> cleared(n, n);
  ParamExpr scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly row_den(1);
    for (std::size_t j = 0; j < n; ++j) row_den *= m.at(i, j).denominator();
    for (std::size_t j = 0; j < n; ++j) {
      MPoly entry = m.at(i, j).numerator();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) entry *= m.at(i, k).denominator();
      }
      cleared.at(i, j) = entry;
    }
    scale *= ParamExpr(row_den);
  }
  return ParamExpr(bareiss_determinant(std::move(cleared))) / scale;
}

}  // namespace qes
