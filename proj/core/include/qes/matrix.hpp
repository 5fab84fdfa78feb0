#pragma once

#include "qes/errors.hpp"
#include "qes/param_expr.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qes {

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "matrix addition");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "matrix subtraction");
    Matrix r(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionMismatchError("matrix product shape mismatch: " +
                                   shape_text(a) + " * " + shape_text(b));
    }
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
        }
      }
    }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  bool operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k) {
      if (!(data_[k] == rhs.data_[k])) return false;
    }
    return true;
  }
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!(x == T(0))) return false;
    }
    return true;
  }

 private:
  static std::string shape_text(const Matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }
  static void check_same_shape(const Matrix& a, const Matrix& b,
                               const std::string& what) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionMismatchError(what + " shape mismatch: " + shape_text(a) +
                                   " vs " + shape_text(b));
    }
  }

  std::size_t rows_, cols_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatchError("commutator requires equal square matrices");
  }
  return a * b - b * a;
}

namespace detail {

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = a.try_divide(b);
  if (!q) throw std::logic_error("fraction-free elimination division was not exact");
  return *q;
}

}  // namespace detail

// Fraction-free determinant (Bareiss elimination).  Every division performed
// is exact by the algorithm's invariant, so no fractions are introduced for
// polynomial entries.  Row swaps flip the sign.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == T(0)) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k) == T(0)) ++pivot;
      if (pivot == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = detail::exact_quotient(num, prev);
      }
      m.at(i, k) = T(0);
    }
    prev = m.at(k, k);
  }
  const T det = m.at(n - 1, n - 1);
  return sign > 0 ? det : T(0) - det;
}

// Determinant of a matrix of expressions: denominators are cleared row by
// row, the polynomial determinant is computed fraction-free, and the scale
// is divided back out.
ParamExpr expression_determinant(const Matrix<ParamExpr>& m);

// Null-space basis over an exact field (Rational or ParamExpr), computed by
// Gauss-Jordan elimination with the first nonzero entry of each column as
// pivot.  Each basis vector has its free coordinate equal to 1, so results
// are deterministic and exactly reproducible.
template <class F>
std::vector<std::vector<F>> null_space(Matrix<F> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::ptrdiff_t> pivot_row_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col) == F(0)) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
    const F inv = m.at(rank, col);
    for (std::size_t j = 0; j < cols; ++j) m.at(rank, j) = m.at(rank, j) / inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const F factor = m.at(i, col);
      if (factor == F(0)) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        m.at(i, j) = m.at(i, j) - factor * m.at(rank, j);
      }
    }
    pivot_row_of_col[col] = static_cast<std::ptrdiff_t>(rank);
    ++rank;
  }

  std::vector<std::vector<F>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_row_of_col[free_col] >= 0) continue;
    std::vector<F> v(cols, F(0));
    v[free_col] = F(1);
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_row_of_col[col] >= 0) {
        v[col] = F(0) - m.at(static_cast<std::size_t>(pivot_row_of_col[col]), free_col);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qes
