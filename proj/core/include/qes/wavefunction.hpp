#pragma once

#include "qes/model.hpp"
#include "qes/param_expr.hpp"
#include "qes/poly.hpp"
#include "qes/sl2.hpp"

#include <complex>
#include <vector>

namespace qes {

// Polynomial part of a reduced-level state.  The expansion variable is
// z = x^2/a^2, so the physical stationary profile is
//   psi(x) = -(1/a^2) * x^{(1-s)/2} * sum_k b_k (x^2/a^2)^k.
struct WavefunctionPoly {
  std::vector<Rational> b;          // b_0 = 1, derived termination route
  std::vector<Rational> printed_b;  // published recursion run with b_0 = 1
  int n = 0;
  ParitySector sector = ParitySector::even;
  Rational energy;
  Rational a;  // width parameter fixing the expansion variable
  // z^{n+1} coefficient of the reduced operator applied to the state; zero
  // exactly when the closure constraint holds at this energy.
  Rational overflow_residual;
};

// Two-term recursion b_k = numerator(k-1)/denominator(k) * b_{k-1} with
// denominator(k) = k (k-1 + a1 + a3) + a5 for k = 1..n.  The numerator
// derived from the reduced action at step j is j(j-1) - j(a2-a3) - a4.
// Throws SingularDenominatorError when denominator(k) == 0.
std::vector<Rational> recursion_coefficients(const AlphaParams<Rational>& alpha,
                                             QesLevel level);

// Same denominators, but the published numerator formula
//   k(k-1-a2+a3+k/2) + (a2-a3) - k^2/2;
// differs from the derived one by the constant (a2-a3) + a4.
std::vector<Rational> printed_recursion_coefficients(
    const AlphaParams<Rational>& alpha, QesLevel level);

// Builds the level-n state of the model at the closed-form energy (or an
// explicit one), running both recursion routes.
WavefunctionPoly coefficient_recursion(const PdmModel& model, QesLevel level,
                                       ParitySector sector);
WavefunctionPoly coefficient_recursion(const PdmModel& model, QesLevel level,
                                       ParitySector sector, const Rational& energy);

// Stationary profile as an exact polynomial in x.
RationalPoly stationary_polynomial(const WavefunctionPoly& w);

// Full time-dependent value psi(x, t) = exp(-i E t) * stationary(x).
std::complex<double> assemble_wavefunction(const WavefunctionPoly& w, double x,
                                           double t);

// Existence condition for a nontrivial level-n state.
struct SolvabilityResult {
  bool satisfied;      // determinant vanishes at the model parameters, E = E_n
  ParamExpr residual;  // determinant with a1..a4 free, a5 tied to the sector
  Rational value;      // determinant evaluated at the model parameters
};
SolvabilityResult qes_solvability(const PdmModel& model, QesLevel level,
                                  ParitySector sector);

// Closed-form levels up to n_max.  Levels whose existence condition fails
// are flagged, never dropped.
struct SpectrumLevel {
  int n;
  Rational energy;
  ParitySector sector;
  bool solvable;
  Rational residual;  // exact determinant value at this level
};
struct SpectrumResult {
  std::vector<SpectrumLevel> levels;
};
SpectrumResult spectrum(const PdmModel& model, int n_max, ParitySector sector);

}  // namespace qes
