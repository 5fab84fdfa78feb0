#pragma once

#include "qes/grid_hamiltonian.hpp"
#include "qes/wavefunction.hpp"

#include <vector>

namespace qes {

// Controls for the bisection eigenvalue solver.  The tolerance is absolute
// on the eigenvalue and is recorded alongside any result that reaches a
// report.  The routine is fully deterministic.
struct EigenOptions {
  double tolerance = 1e-8;
  int max_bisections = 200;
};

// k smallest eigenvalues by Sturm-count bisection on the symmetrized
// tridiagonal.  Requires sign(lower_j) == sign(upper_j) with positive
// products (true for every operator sector_hamiltonian builds); violations
// or a failed bisection raise ConvergenceFailureError.
std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, int count,
                                            const EigenOptions& options = {});

// Eigenvector for a converged eigenvalue by deterministic inverse iteration
// (all-ones start, partial-pivot tridiagonal solves).
std::vector<double> tridiagonal_eigenvector(const Tridiagonal& t, double eigenvalue,
                                            const EigenOptions& options = {});

// Builds the sector operator and returns its lowest `count` eigenvalues.
// Enforces count <= interior_nodes / 4: bisection counts are reliable well
// below the grid's resolving limit only.
std::vector<double> grid_eigen(const PdmModel& model, ParitySector sector,
                               const GridSpec& grid, MassMode mass_mode, int count,
                               const EigenOptions& options = {});

// Relative sup-norm of (H - E) applied to sampled values, measured away from
// both ends of the half-grid: rows 1..margin and the last margin rows are
// excluded (a closure row and wall rows see the polynomial tail, not the
// operator).  margin >= 3 is required.
double grid_residual(const Tridiagonal& t, const std::vector<double>& values,
                     double energy, int margin);

// Samples the stationary profile of a reduced state and measures the same
// residual against the position-dependent-mass sector operator.
double grid_residual(const PdmModel& model, const WavefunctionPoly& w,
                     const GridSpec& grid, int margin = 3);

}  // namespace qes
