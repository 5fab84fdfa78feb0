#include "qes/grid_hamiltonian.hpp"

#include "qes/errors.hpp"

#include <cmath>
#include <string>

namespace qes {

std::vector<double> Tridiagonal::apply(const std::vector<double>& x) const {
  const std::size_t n = diag.size();
  if (x.size() != n) {
    throw DimensionMismatchError("tridiagonal apply: vector length " +
                                 std::to_string(x.size()) + " vs matrix size " +
                                 std::to_string(n));
  }
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = diag[i] * x[i];
    if (i > 0) y[i] += lower[i - 1] * x[i - 1];
    if (i + 1 < n) y[i] += upper[i] * x[i + 1];
  }
  return y;
}

namespace {

struct Profile {
  double mu2;  // 2 mu, the weight exponent
  double a2;   // width squared (unused for constant mass)
  double m0;
  MassMode mode;

  double g(double x) const {  // 1/sqrt(m(x))
    if (mode == MassMode::constant) return 1.0 / std::sqrt(m0);
    return std::sqrt((a2 + x * x) / (a2 * m0));
  }
  double w(double x) const { return mu2 == 0.0 ? 1.0 : std::pow(x, mu2); }
};

}  // namespace

Tridiagonal sector_hamiltonian(const PdmModel& model, ParitySector sector,
                               const GridSpec& grid, MassMode mass_mode) {
  const int n = grid.interior_nodes;
  if (n < 8) {
    throw InvalidGridError("sector grid needs at least 8 interior nodes, got " +
                           std::to_string(n));
  }
  const double h = grid.box_half_width / (n + 1);
  if (!(h > 0)) {
    throw InvalidGridError("grid step must be positive; box half-width was " +
                           std::to_string(grid.box_half_width));
  }

  const Profile p{2.0 * model.mu.mu_double(),
                  to_double(model.a) * to_double(model.a), to_double(model.m0),
                  mass_mode};

  Tridiagonal t;
  t.diag.assign(static_cast<std::size_t>(n), 0.0);
  t.lower.assign(static_cast<std::size_t>(n) - 1, 0.0);
  t.upper.assign(static_cast<std::size_t>(n) - 1, 0.0);

  const auto x_of = [&](double j) { return j * h; };
  const double inv2h2 = 1.0 / (2.0 * h * h);

  if (sector == ParitySector::even) {
    // Flux coefficient C = w g at half nodes; row j of
    // -(1/(2 w_j)) [C_{j+1/2}(F_{j+1}-F_j) - C_{j-1/2}(F_j-F_{j-1})] / h^2
    // with F = g psi.
    for (int j = 1; j <= n; ++j) {
      const double wj = p.w(x_of(j));
      const double cu = p.w(x_of(j + 0.5)) * p.g(x_of(j + 0.5));
      const double cl = p.w(x_of(j - 0.5)) * p.g(x_of(j - 0.5));
      const double gj = p.g(x_of(j));
      const std::size_t i = static_cast<std::size_t>(j - 1);
      if (j == 1) {
        // Origin closure: F_0 = (4 F_1 - F_2)/3 turns both fluxes into
        // multiples of (F_2 - F_1).
        const double c_eff = cu - cl / 3.0;
        t.diag[i] = inv2h2 / wj * c_eff * gj;
        t.upper[i] = -inv2h2 / wj * c_eff * p.g(x_of(2));
      } else {
        t.diag[i] = inv2h2 / wj * (cu + cl) * gj;
        t.lower[i - 1] = -inv2h2 / wj * cl * p.g(x_of(j - 1));
        if (j < n) t.upper[i] = -inv2h2 / wj * cu * p.g(x_of(j + 1));
        // j == n: the wall value F_{n+1} = 0 just drops from the flux.
      }
    }
  } else {
    // Odd sector: row j of -(1/2) [K_{j+1/2}(W_{j+1}-W_j) -
    // K_{j-1/2}(W_j-W_{j-1})] / h^2 with W = w g psi and K = g / w.
    for (int j = 1; j <= n; ++j) {
      const double ku = p.g(x_of(j + 0.5)) / p.w(x_of(j + 0.5));
      const double kl = p.g(x_of(j - 0.5)) / p.w(x_of(j - 0.5));
      const std::size_t i = static_cast<std::size_t>(j - 1);
      const double wgj = p.w(x_of(j)) * p.g(x_of(j));
      if (j == 1) {
        // w g psi ~ x^{2 mu + 1} -> 0 at the origin, exactly.
        t.diag[i] = inv2h2 * (ku + kl) * wgj;
        t.upper[i] = -inv2h2 * ku * p.w(x_of(2)) * p.g(x_of(2));
      } else {
        t.diag[i] = inv2h2 * (ku + kl) * wgj;
        t.lower[i - 1] = -inv2h2 * kl * p.w(x_of(j - 1)) * p.g(x_of(j - 1));
        if (j < n) t.upper[i] = -inv2h2 * ku * p.w(x_of(j + 1)) * p.g(x_of(j + 1));
      }
    }
  }
  return t;
}

Matrix<double> dunkl_hamiltonian_grid(const PdmModel& model, ParitySector sector,
                                      const GridSpec& grid, MassMode mass_mode) {
  const Tridiagonal t = sector_hamiltonian(model, sector, grid, mass_mode);
  const std::size_t n = t.size();
  Matrix<double> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = t.diag[i];
    if (i > 0) m.at(i, i - 1) = t.lower[i - 1];
    if (i + 1 < n) m.at(i, i + 1) = t.upper[i];
  }
  return m;
}

}  // namespace qes
