#pragma once

#include "qes/dunkl.hpp"
#include "qes/matrix.hpp"
#include "qes/model.hpp"

#include <vector>

namespace qes {

// Half-line grid for sector-reduced operators: nodes x_j = j*h for
// j = 1..interior_nodes with h = box_half_width / (interior_nodes + 1) and a
// hard wall (Dirichlet) at x = box_half_width.  The origin is not a node;
// each parity sector carries its own closure there.
struct GridSpec {
  double box_half_width;
  int interior_nodes;
};

// Which mass enters the kinetic operator: the solvable profile
// a^2 m0 / (a^2 + x^2), or the constant m0 (the flat-profile limit used for
// textbook comparisons).
enum class MassMode { position_dependent, constant };

struct Tridiagonal {
  std::vector<double> diag;   // size N
  std::vector<double> lower;  // size N-1, entry j couples row j+1 to column j
  std::vector<double> upper;  // size N-1, entry j couples row j to column j+1

  std::size_t size() const { return diag.size(); }
  // y = T x
  std::vector<double> apply(const std::vector<double>& x) const;
};

// Sector-reduced kinetic operator -(1/2) D g D g in flux (divergence) form,
// discretized to second order with the reflection weight x^{2 mu}:
//   even: H psi = -(1/(2 w)) ( w g (g psi)' )',   w = x^{2 mu}, g = 1/sqrt(m)
//   odd:  H psi = -(1/2) ( (g/w) (w g psi)' )'
// Fluxes live at half-integer nodes.  At the origin the even sector closes
// with the quadratic even extrapolation F_0 = (4 F_1 - F_2)/3 of F = g psi,
// and the odd sector uses w F -> 0 (exact, since w F ~ x^{2 mu + 1}).  The
// off-diagonal couplings are negative on both sides of the diagonal, so the
// matrix is always symmetrizable by a positive diagonal scaling.
// Throws InvalidGridError when interior_nodes < 8 or the step is not
// positive.
Tridiagonal sector_hamiltonian(const PdmModel& model, ParitySector sector,
                               const GridSpec& grid, MassMode mass_mode);

// Dense copy of the same operator.
Matrix<double> dunkl_hamiltonian_grid(const PdmModel& model, ParitySector sector,
                                      const GridSpec& grid, MassMode mass_mode);

}  // namespace qes
