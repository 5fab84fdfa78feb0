#pragma once

#include "qes/dunkl.hpp"
#include "qes/param_expr.hpp"
#include "qes/rational.hpp"

#include <utility>

namespace qes {

// Solvable-mass model: m(x) = a^2 m0 / (a^2 + x^2) with width a > 0 and mass
// scale m0 > 0, carrying a reflection-deformed derivative of parameter mu.
// Units are chosen so the action scale is 1 throughout.
struct PdmModel {
  Rational a;
  Rational m0;
  DunklParam mu;

  PdmModel(Rational width, Rational mass_scale, DunklParam deformation)
      : a(std::move(width)), m0(std::move(mass_scale)), mu(std::move(deformation)) {
    if (a <= 0) throw std::domain_error("width a must be positive, got " + qes::to_string(a));
    if (m0 <= 0) throw std::domain_error("mass scale m0 must be positive, got " + qes::to_string(m0));
  }
};

double mass_profile(const PdmModel& model, double x);
Rational mass_profile_exact(const PdmModel& model, const Rational& x);

// Coefficients of the reduced operator on polynomials of the variable z:
//   (z^2 - z^3) d^2 + [(a2 - a3) z^2 + (a1 + a3) z] d + (a4 z + a5).
// For expressions derived from a PdmModel, a2 = 1 always, and a5 is 0 in the
// even sector and mu/2 in the odd one; instances built symbolically for
// cross-checks may leave all five free.
template <class T>
struct AlphaParams {
  T a1, a2, a3, a4, a5;
  ParitySector sector = ParitySector::even;
};

// Model parameter map at a fixed rational energy.
AlphaParams<Rational> alpha_from_model(const PdmModel& model, const Rational& energy,
                                       ParitySector sector);

// Same map with the energy left symbolic (variable E).
AlphaParams<ParamExpr> alpha_from_model_symbolic_energy(const PdmModel& model,
                                                        ParitySector sector);

// Map with every model parameter symbolic: mu, a, m0 and E stay variables.
AlphaParams<ParamExpr> alpha_model_symbolic(ParitySector sector);

// Five free coefficient symbols, no model relation imposed (a5 = alpha5).
AlphaParams<ParamExpr> alpha_free_symbolic();

// Free symbols a1..a4 with a5 tied to the sector: 0 (even) or mu/2 (odd),
// with mu symbolic.  Used when auditing sector-dependent claims.
AlphaParams<ParamExpr> alpha_sector_symbolic(ParitySector sector);

// Closed-form energy of the n-th reduced level:
//   E_n = (2 / (m0 a^2)) (n^2 - n (2 + mu) - (1 + 2 mu)/4).
Rational energy_level(const PdmModel& model, int n);

// The same expression over symbolic mu, a, m0.
ParamExpr energy_level_symbolic(int n);

}  // namespace qes
