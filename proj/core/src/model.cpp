#include "qes/model.hpp"

#include <stdexcept>

namespace qes {

double mass_profile(const PdmModel& model, double x) {
  const double a2 = to_double(model.a) * to_double(model.a);
  return a2 * to_double(model.m0) / (a2 + x * x);
}

Rational mass_profile_exact(const PdmModel& model, const Rational& x) {
  const Rational a2 = model.a * model.a;
  return a2 * model.m0 / (a2 + x * x);
}

namespace {

Rational sector_a5(const Rational& mu, ParitySector sector) {
  // (mu/4)(1 - s): zero in the even sector, mu/2 in the odd one.
  return mu * Rational(1 - sector_sign(sector)) / 4;
}

}  // namespace

AlphaParams<Rational> alpha_from_model(const PdmModel& model, const Rational& energy,
                                       ParitySector sector) {
  const Rational a2 = model.a * model.a;
  AlphaParams<Rational> alpha;
  alpha.a1 = -(model.m0 + 1 / a2) / 2;
  alpha.a2 = 1;
  alpha.a3 = -model.mu.mu();
  alpha.a4 = (1 + 2 * model.mu.mu()) / 4 + energy * model.m0 * a2 / 2;
  alpha.a5 = sector_a5(model.mu.mu(), sector);
  alpha.sector = sector;
  return alpha;
}

AlphaParams<ParamExpr> alpha_from_model_symbolic_energy(const PdmModel& model,
                                                        ParitySector sector) {
  const AlphaParams<Rational> base = alpha_from_model(model, Rational(0), sector);
  const ParamExpr energy = ParamExpr::variable(Var::energy);
  AlphaParams<ParamExpr> alpha;
  alpha.a1 = ParamExpr(base.a1);
  alpha.a2 = ParamExpr(base.a2);
  alpha.a3 = ParamExpr(base.a3);
  alpha.a4 = ParamExpr(base.a4) +
             energy * ParamExpr(model.m0 * model.a * model.a / 2);
  alpha.a5 = ParamExpr(base.a5);
  alpha.sector = sector;
  return alpha;
}

AlphaParams<ParamExpr> alpha_model_symbolic(ParitySector sector) {
  const ParamExpr mu = ParamExpr::variable(Var::mu);
  const ParamExpr a = ParamExpr::variable(Var::width_a);
  const ParamExpr m0 = ParamExpr::variable(Var::mass_m0);
  const ParamExpr energy = ParamExpr::variable(Var::energy);
  const ParamExpr one(1);
  const ParamExpr a2 = a * a;

  AlphaParams<ParamExpr> alpha;
  alpha.a1 = -(m0 + one / a2) / ParamExpr(2);
  alpha.a2 = one;
  alpha.a3 = -mu;
  alpha.a4 = (one + ParamExpr(2) * mu) / ParamExpr(4) + energy * m0 * a2 / ParamExpr(2);
  alpha.a5 = mu * ParamExpr(Rational(1 - sector_sign(sector), 4));
  alpha.sector = sector;
  return alpha;
}

AlphaParams<ParamExpr> alpha_free_symbolic() {
  AlphaParams<ParamExpr> alpha;
  alpha.a1 = ParamExpr::variable(Var::alpha1);
  alpha.a2 = ParamExpr::variable(Var::alpha2);
  alpha.a3 = ParamExpr::variable(Var::alpha3);
  alpha.a4 = ParamExpr::variable(Var::alpha4);
  alpha.a5 = ParamExpr::variable(Var::alpha5);
  alpha.sector = ParitySector::even;
  return alpha;
}

AlphaParams<ParamExpr> alpha_sector_symbolic(ParitySector sector) {
  AlphaParams<ParamExpr> alpha = alpha_free_symbolic();
  alpha.a5 = ParamExpr::variable(Var::mu) *
             ParamExpr(Rational(1 - sector_sign(sector), 4));
  alpha.sector = sector;
  return alpha;
}

Rational energy_level(const PdmModel& model, int n) {
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  const Rational& mu = model.mu.mu();
  const Rational nn(n);
  return 2 * (nn * nn - nn * (2 + mu) - (1 + 2 * mu) / 4) /
         (model.m0 * model.a * model.a);
}

ParamExpr energy_level_symbolic(int n) {
  if (n < 0) throw std::invalid_argument("level index must be nonnegative");
  const ParamExpr mu = ParamExpr::variable(Var::mu);
  const ParamExpr a = ParamExpr::variable(Var::width_a);
  const ParamExpr m0 = ParamExpr::variable(Var::mass_m0);
  const ParamExpr nn{Rational(n)};
  const ParamExpr numerator =
      nn * nn - nn * (ParamExpr(2) + mu) -
      (ParamExpr(1) + ParamExpr(2) * mu) / ParamExpr(4);
  return ParamExpr(2) * numerator / (m0 * a * a);
}

}  // namespace qes
