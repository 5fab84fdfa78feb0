#include "qes/grid_eigen.hpp"

#include "qes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qes {

namespace {

// Symmetrized off-diagonal entries e_j = sqrt(lower_j * upper_j).  The
// similarity transform is diagonal and positive, so eigenvalues are shared
// with the original matrix.
std::vector<double> symmetrized_offdiagonal(const Tridiagonal& t) {
  std::vector<double> e(t.lower.size(), 0.0);
  for (std::size_t j = 0; j < t.lower.size(); ++j) {
    const double prod = t.lower[j] * t.upper[j];
    if (!(prod > 0.0)) {
      throw ConvergenceFailureError(
          "off-diagonal product is not positive at row " + std::to_string(j) +
          "; the matrix is not diagonally symmetrizable");
    }
    e[j] = std::sqrt(prod);
  }
  return e;
}

// Number of eigenvalues strictly below x, by the classic LDL^T sign count.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e,
                double x) {
  int count = 0;
  double q = d[0] - x;
  if (q < 0) ++count;
  for (std::size_t j = 1; j < d.size(); ++j) {
    double denom = q;
    if (denom == 0.0) denom = std::numeric_limits<double>::min();
    q = d[j] - x - e[j - 1] * e[j - 1] / denom;
    if (q < 0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, int count,
                                            const EigenOptions& options) {
  const std::size_t n = t.size();
  if (count <= 0 || static_cast<std::size_t>(count) > n) {
    throw std::invalid_argument("eigenvalue count must be in [1, matrix size]");
  }
  const std::vector<double> e = symmetrized_offdiagonal(t);

  // Gershgorin bounds of the symmetrized matrix.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    double radius = 0.0;
    if (j > 0) radius += e[j - 1];
    if (j < n - 1) radius += e[j];
    lo = std::min(lo, t.diag[j] - radius);
    hi = std::max(hi, t.diag[j] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));

  std::vector<double> result;
  result.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    // Invariant: fewer than k+1 eigenvalues below a, at least k+1 below b.
    double a = lo;
    double b = hi;
    int iterations = 0;
    while (b - a > options.tolerance + 4 * std::numeric_limits<double>::epsilon() * scale) {
      if (++iterations > options.max_bisections) {
        throw ConvergenceFailureError(
            "bisection failed to reach tolerance " +
            std::to_string(options.tolerance) + " for eigenvalue " +
            std::to_string(k));
      }
      const double mid = 0.5 * (a + b);
      if (sturm_count(t.diag, e, mid) < k + 1) {
        a = mid;
      } else {
        b = mid;
      }
    }
    result.push_back(0.5 * (a + b));
  }
  return result;
}

std::vector<double> tridiagonal_eigenvector(const Tridiagonal& t, double eigenvalue,
                                            const EigenOptions& options) {
  const std::size_t n = t.size();
  // Shift slightly off the eigenvalue so the factorization stays regular.
  const double shift =
      eigenvalue + options.tolerance * std::max(1.0, std::abs(eigenvalue));

  // Partial-pivot LU of the shifted tridiagonal, stored banded (one fill-in
  // superdiagonal appears under row swaps).
  std::vector<double> a(n), b1(n, 0.0), b2(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = t.diag[i] - shift;
    if (i + 1 < n) b1[i] = t.upper[i];
  }
  std::vector<double> sub(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) sub[i] = t.lower[i - 1];

  std::vector<double> l(n, 0.0);
  std::vector<bool> swapped(n, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i + 1]) > std::abs(a[i])) {
      std::swap(a[i], sub[i + 1]);
      std::swap(b1[i], a[i + 1]);
      std::swap(b2[i], b1[i + 1]);
      swapped[i] = true;
    }
    if (a[i] == 0.0) a[i] = std::numeric_limits<double>::min();
    const double m = sub[i + 1] / a[i];
    l[i] = m;
    a[i + 1] -= m * b1[i];
    b1[i + 1] -= m * b2[i];
  }
  if (a[n - 1] == 0.0) a[n - 1] = std::numeric_limits<double>::min();

  const auto solve = [&](std::vector<double> rhs) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
      rhs[i + 1] -= l[i] * rhs[i];
    }
    for (std::size_t i = n; i-- > 0;) {
      double v = rhs[i];
      if (i + 1 < n) v -= b1[i] * rhs[i + 1];
      if (i + 2 < n) v -= b2[i] * rhs[i + 2];
      rhs[i] = v / a[i];
    }
    return rhs;
  };

  std::vector<double> v(n, 1.0);
  double previous_change = std::numeric_limits<double>::infinity();
  for (int iteration = 0; iteration < 64; ++iteration) {
    std::vector<double> next = solve(v);
    double norm = 0.0;
    for (double x : next) norm = std::max(norm, std::abs(x));
    if (norm == 0.0) {
      throw ConvergenceFailureError("inverse iteration produced a zero vector");
    }
    // Fix the overall sign deterministically: first sizable entry positive.
    double lead = 0.0;
    for (double x : next) {
      if (std::abs(x) > 0.1 * norm) {
        lead = x;
        break;
      }
    }
    const double s = (lead < 0 ? -1.0 : 1.0) / norm;
    for (double& x : next) x *= s;

    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(next[i] - v[i]));
    v = std::move(next);
    if (change < 1e-12) return v;
    // Stagnation at roundoff level also counts as converged.
    if (change >= previous_change && change < 1e-8) return v;
    previous_change = change;
  }
  throw ConvergenceFailureError("inverse iteration did not settle in 64 sweeps");
}

std::vector<double> grid_eigen(const PdmModel& model, ParitySector sector,
                               const GridSpec& grid, MassMode mass_mode, int count,
                               const EigenOptions& options) {
  if (count < 1 || count > grid.interior_nodes / 4) {
    throw std::invalid_argument(
        "eigenvalue count must satisfy 1 <= count <= interior_nodes/4; got " +
        std::to_string(count) + " with " + std::to_string(grid.interior_nodes) +
        " nodes");
  }
  const Tridiagonal t = sector_hamiltonian(model, sector, grid, mass_mode);
  return tridiagonal_eigenvalues(t, count, options);
}

double grid_residual(const Tridiagonal& t, const std::vector<double>& values,
                     double energy, int margin) {
  const std::size_t n = t.size();
  if (margin < 3) throw std::invalid_argument("residual margin must be >= 3 rows");
  if (values.size() != n) {
    throw DimensionMismatchError("residual: sample length does not match grid");
  }
  if (n < 2 * static_cast<std::size_t>(margin) + 2) {
    throw InvalidGridError("grid too small for the requested residual margin");
  }
  const std::vector<double> image = t.apply(values);
  double max_residual = 0.0;
  double max_value = 0.0;
  for (std::size_t i = static_cast<std::size_t>(margin);
       i < n - static_cast<std::size_t>(margin); ++i) {
    max_residual = std::max(max_residual, std::abs(image[i] - energy * values[i]));
    max_value = std::max(max_value, std::abs(values[i]));
  }
  if (max_value == 0.0) {
    throw std::invalid_argument("residual of an identically zero sample");
  }
  return max_residual / max_value;
}

double grid_residual(const PdmModel& model, const WavefunctionPoly& w,
                     const GridSpec& grid, int margin) {
  const Tridiagonal t =
      sector_hamiltonian(model, w.sector, grid, MassMode::position_dependent);
  const double h = grid.box_half_width / (grid.interior_nodes + 1);
  const Poly<double> profile = to_double_poly(stationary_polynomial(w));
  std::vector<double> values(static_cast<std::size_t>(grid.interior_nodes));
  for (int j = 1; j <= grid.interior_nodes; ++j) {
    values[static_cast<std::size_t>(j - 1)] = profile.evaluate(j * h);
  }
  return grid_residual(t, values, to_double(w.energy), margin);
}

}  // namespace qes
