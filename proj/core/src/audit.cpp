#include "qes/audit.hpp"

#include "qes/diff_operator.hpp"
#include "qes/errors.hpp"
#include "qes/grid_eigen.hpp"
#include "qes/matrix.hpp"
#include "qes/wavefunction.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace qes {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::informational: return "informational";
  }
  return "unknown";
}

AuditSummary AuditReport::summary() const {
  AuditSummary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckStatus::pass: ++s.pass; break;
      case CheckStatus::fail: ++s.fail; break;
      case CheckStatus::informational: ++s.informational; break;
    }
  }
  return s;
}

bool AuditReport::known_good_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const AuditCheck& c) {
    return c.status == CheckStatus::fail;
  });
}

template <class T>
Poly<T> symbolic_residual(const AlphaParams<T>& alpha, const std::vector<T>& b) {
  return op_apply(model_z_operator(alpha), Poly<T>(b));
}

template Poly<Rational> symbolic_residual(const AlphaParams<Rational>&,
                                          const std::vector<Rational>&);
template Poly<ParamExpr> symbolic_residual(const AlphaParams<ParamExpr>&,
                                           const std::vector<ParamExpr>&);

ZOperatorComparison rederive_z_operator(ParitySector sector) {
  const ParamExpr a = ParamExpr::variable(Var::width_a);
  const ParamExpr m0 = ParamExpr::variable(Var::mass_m0);
  const ParamExpr mu = ParamExpr::variable(Var::mu);
  const ParamExpr a2 = a * a;
  const ParamExpr s{Rational(sector_sign(sector))};
  const ParamExpr two_mu = ParamExpr(2) * mu;

  // Published x-space equation of motion on the sector (reflection replaced by
  // the sector sign), cleared of denominators by a^2 m0 x^2:
  //   (x^4 + a^2 x^2) psi'' + [(2 + 2mu) x^3 + (1 + 2mu a^2) x] psi'
  //   + [(1 + 2mu) x^2 - a^2 mu (1 - s)] psi = 0.
  DiffOperator2<ParamExpr> cleared;
  cleared.c2 = ParamPoly({ParamExpr(0), ParamExpr(0), a2, ParamExpr(0), ParamExpr(1)});
  cleared.c1 = ParamPoly({ParamExpr(0), ParamExpr(1) + two_mu * a2, ParamExpr(0),
                          ParamExpr(2) + two_mu});
  cleared.c0 = ParamPoly({ParamExpr(0) - a2 * mu * (ParamExpr(1) - s), ParamExpr(0),
                          ParamExpr(1) + two_mu});

  ZOperatorComparison result;
  result.rederived = op_substitute_quadratic_scaled(cleared, a2);
  result.alpha_form = model_z_operator(alpha_model_symbolic(sector));

  // The substituted operator carries an overall factor; its d^2 coefficient is
  // 4 a^2 (z^2 - z^3), so division by 4 a^2 puts it on the reduced form's
  // normalization before comparing.
  const ParamExpr scale = ParamExpr(1) / (ParamExpr(4) * a2);
  result.d2_gap = scale * result.rederived.c2 - result.alpha_form.c2;
  result.d1_gap = scale * result.rederived.c1 - result.alpha_form.c1;
  result.d0_gap = scale * result.rederived.c0 - result.alpha_form.c0;
  return result;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Residual text and status for an exact comparison: zero residual passes;
// a nonzero one is informational when the divergence is a recorded property
// of the published relation, and a failure otherwise.
AuditCheck exact_check(std::string id, std::string location, std::string description,
                       bool zero, std::string residual_text,
                       bool known_divergent = false) {
  AuditCheck c;
  c.id = std::move(id);
  c.paper_location = std::move(location);
  c.description = std::move(description);
  c.status = zero ? CheckStatus::pass
                  : (known_divergent ? CheckStatus::informational : CheckStatus::fail);
  c.residual = zero ? "0" : std::move(residual_text);
  return c;
}

AuditCheck numeric_check(std::string id, std::string location,
                         std::string description, double residual, double tolerance,
                         bool known_divergent = false) {
  AuditCheck c;
  c.id = std::move(id);
  c.paper_location = std::move(location);
  c.description = std::move(description);
  c.status = std::fabs(residual) < tolerance
                 ? CheckStatus::pass
                 : (known_divergent ? CheckStatus::informational : CheckStatus::fail);
  c.residual = format_double(residual);
  c.tolerance = tolerance;
  return c;
}

std::string scalar_text(const Rational& v) { return qes::to_string(v); }
std::string scalar_text(const ParamExpr& v) { return v.to_string(); }

template <class T>
std::string matrix_entry_text(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(m.at(i, j) == T(0))) {
        return "entry(" + std::to_string(i) + "," + std::to_string(j) +
               ") = " + scalar_text(m.at(i, j));
      }
    }
  }
  return "0";
}

template <class T>
std::string operator_gap_text(const DiffOperator2<T>& gap) {
  if (!gap.c2.is_zero()) return "d2: " + gap.c2.to_string("z");
  if (!gap.c1.is_zero()) return "d1: " + gap.c1.to_string("z");
  if (!gap.c0.is_zero()) return "d0: " + gap.c0.to_string("z");
  return "0";
}

ParamExpr sym(Var v) { return ParamExpr::variable(v); }

// --- structural algebra checks (model independent) -------------------------

void check_commutators(std::vector<AuditCheck>& out, int n_alg) {
  const char* ids[3] = {"sl2_commutator_cartan_raising", "sl2_commutator_cartan_lowering",
                        "sl2_commutator_raising_lowering"};
  const char* relations[3] = {"[J0, J+] - J+", "[J0, J-] + J-", "[J+, J-] + 2 J0"};
  std::string residual[3] = {"0", "0", "0"};
  bool zero[3] = {true, true, true};
  for (int n = 0; n <= n_alg; ++n) {
    const QesLevel level(n);
    const auto jp = generator_matrix(Sl2Generator::raising, level);
    const auto j0 = generator_matrix(Sl2Generator::cartan, level);
    const auto jm = generator_matrix(Sl2Generator::lowering, level);
    const Matrix<Rational> gaps[3] = {
        commutator(j0, jp) - jp,
        commutator(j0, jm) + jm,
        commutator(jp, jm) + Rational(2) * j0,
    };
    for (int i = 0; i < 3; ++i) {
      if (zero[i] && !gaps[i].is_zero()) {
        zero[i] = false;
        residual[i] = "n = " + std::to_string(n) + ", " + matrix_entry_text(gaps[i]);
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    out.push_back(exact_check(
        ids[i], "Eq. (2.3)",
        std::string("matrix residual of ") + relations[i] +
            " on the level-n representation, n = 0.." + std::to_string(n_alg),
        zero[i], residual[i]));
  }
}

void check_invariant_subspace(std::vector<AuditCheck>& out, int n_alg) {
  bool zero = true;
  std::string residual = "0";
  for (int n = 0; n <= n_alg && zero; ++n) {
    const QesLevel level(n);
    for (const auto g :
         {Sl2Generator::raising, Sl2Generator::cartan, Sl2Generator::lowering}) {
      const auto op = generator_operator<Rational>(g, level);
      for (int k = 0; k <= n; ++k) {
        const RationalPoly image =
            op_apply(op, RationalPoly::monomial(static_cast<unsigned>(k)));
        if (image.degree() > n) {
          zero = false;
          residual = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                     ": overflow coefficient " +
                     qes::to_string(image.coeff(static_cast<unsigned>(image.degree())));
          break;
        }
      }
      if (!zero) break;
    }
  }
  out.push_back(exact_check(
      "sl2_invariant_subspace", "Eq. (2.3)",
      "each generator maps span{1, z, ..., z^n} into itself, n = 0.." +
          std::to_string(n_alg),
      zero, residual));
}

void check_expansion_formulas(std::vector<AuditCheck>& out, int n_alg) {
  const char* ids[3] = {"qes_expansion_d2", "qes_expansion_d1", "qes_expansion_d0"};
  const char* names[3] = {"P4 (d^2 coefficient)", "P3 (d coefficient)",
                          "P2 (order-zero coefficient)"};
  std::string residual[3] = {"0", "0", "0"};
  bool zero[3] = {true, true, true};
  for (int n = 0; n <= n_alg; ++n) {
    const QesLevel level(n);
    // The combination is linear in its nine coefficients, so checking each
    // unit coefficient vector checks the closed form for every combination.
    for (int slot = 0; slot < 9; ++slot) {
      Sl2Coefficients<Rational> c;
      Rational* fields[9] = {&c.c_pp, &c.c_p0, &c.c_pm, &c.c_0m, &c.c_mm,
                             &c.c_p,  &c.c_0,  &c.c_m,  &c.c_const};
      *fields[slot] = Rational(1);
      const auto composed = build_qes_operator(c, level);
      const auto printed = expanded_qes_operator(c, level);
      const RationalPoly gaps[3] = {composed.c2 - printed.c2, composed.c1 - printed.c1,
                                    composed.c0 - printed.c0};
      for (int i = 0; i < 3; ++i) {
        if (zero[i] && !gaps[i].is_zero()) {
          zero[i] = false;
          residual[i] = "n = " + std::to_string(n) + ", coefficient slot " +
                        std::to_string(slot) + ": " + gaps[i].to_string("z");
        }
      }
    }
  }
  for (int i = 0; i < 3; ++i) {
    out.push_back(exact_check(
        ids[i], "Eq. (3.18)",
        std::string("generator composition reproduces the printed ") + names[i] +
            " for each coefficient slot, n = 0.." + std::to_string(n_alg),
        zero[i], residual[i]));
  }
}

void check_coefficient_matching(std::vector<AuditCheck>& out, int n_alg) {
  bool zero = true;
  std::string residual = "0";
  const ParamExpr a1 = sym(Var::alpha1), a2 = sym(Var::alpha2), a3 = sym(Var::alpha3),
                  a4 = sym(Var::alpha4), a5 = sym(Var::alpha5);
  for (int n = 0; n <= n_alg && zero; ++n) {
    const auto mr = match_model_coefficients(alpha_free_symbolic(), QesLevel(n));
    const ParamExpr np{Rational(n)};
    Sl2Coefficients<ParamExpr> printed;
    printed.c_p0 = ParamExpr(-1);
    printed.c_pm = ParamExpr(1);
    printed.c_0 = np + a1 + a3;
    printed.c_p = a2 - a3 + ParamExpr(1) - ParamExpr(Rational(3 * n, 2));
    printed.c_const = a5 + ParamExpr(Rational(n, 2)) * (np + a1 + a3);
    const ParamExpr printed_constraint =
        (ParamExpr(Rational(-n * n, 2)) - np * printed.c_p) - a4;

    const std::pair<const char*, std::pair<ParamExpr, ParamExpr>> entries[] = {
        {"C++", {mr.coefficients.c_pp, printed.c_pp}},
        {"C+0", {mr.coefficients.c_p0, printed.c_p0}},
        {"C+-", {mr.coefficients.c_pm, printed.c_pm}},
        {"C0-", {mr.coefficients.c_0m, printed.c_0m}},
        {"C--", {mr.coefficients.c_mm, printed.c_mm}},
        {"C+", {mr.coefficients.c_p, printed.c_p}},
        {"C0", {mr.coefficients.c_0, printed.c_0}},
        {"C-", {mr.coefficients.c_m, printed.c_m}},
        {"C", {mr.coefficients.c_const, printed.c_const}},
        {"constraint", {mr.constraint, printed_constraint}},
    };
    for (const auto& [name, pair] : entries) {
      if (!(pair.first == pair.second)) {
        zero = false;
        residual = "n = " + std::to_string(n) + ", " + name + ": " +
                   (pair.first - pair.second).to_string();
        break;
      }
    }
  }
  out.push_back(exact_check(
      "coefficient_matching", "Eq. (3.23)",
      "matching the reduced operator against the generator combination reproduces "
      "every printed coefficient and the closure constraint, n = 0.." +
          std::to_string(n_alg),
      zero, residual));
}

void check_operator_membership(std::vector<AuditCheck>& out, int n_alg) {
  bool zero = true;
  std::string residual = "0";
  for (int n = 0; n <= n_alg && zero; ++n) {
    const auto alpha = alpha_free_symbolic();
    const auto mr = match_model_coefficients(alpha, QesLevel(n));
    const auto combination = build_qes_operator(mr.coefficients, QesLevel(n));
    const auto reduced = model_z_operator(alpha);
    // With free parameters the two operators agree except for the single
    // closure term: the order-zero gap is exactly (constraint) * z.
    const ParamPoly expected_c0_gap = ParamPoly::monomial(1, mr.constraint);
    DiffOperator2<ParamExpr> gap;
    gap.c2 = combination.c2 - reduced.c2;
    gap.c1 = combination.c1 - reduced.c1;
    gap.c0 = combination.c0 - reduced.c0 - expected_c0_gap;
    if (!(gap.c2.is_zero() && gap.c1.is_zero() && gap.c0.is_zero())) {
      zero = false;
      residual = "n = " + std::to_string(n) + ", " + operator_gap_text(gap);
    }
  }
  out.push_back(exact_check(
      "qes_operator_membership", "Eq. (3.24)",
      "the matched generator combination equals the reduced operator up to the "
      "closure term (constraint * z at order zero), n = 0.." +
          std::to_string(n_alg),
      zero, residual));
}

void check_energy_equivalence(std::vector<AuditCheck>& out, int n_alg,
                              ParitySector sector) {
  bool zero = true;
  std::string residual = "0";
  for (int n = 0; n <= n_alg && zero; ++n) {
    const auto mr = match_model_coefficients(alpha_model_symbolic(sector), QesLevel(n));
    const ParamExpr solved = solve_linear(mr.constraint, Var::energy);
    const ParamExpr gap = solved - energy_level_symbolic(n);
    if (!gap.is_zero()) {
      zero = false;
      residual = "n = " + std::to_string(n) + ": " + gap.to_string();
    }
  }
  out.push_back(exact_check(
      "energy_constraint_equivalence", "Eq. (3.25)",
      "solving the closure constraint for E reproduces the closed-form level "
      "formula symbolically in mu, a, m0, n = 0.." +
          std::to_string(n_alg),
      zero, residual));
}

void check_ground_state_energy(std::vector<AuditCheck>& out) {
  // The printed n = 0 special case: E0 = (2/(m0 a^2)) * (-(1 + 2 mu)/4).
  const ParamExpr mu = sym(Var::mu), a = sym(Var::width_a), m0 = sym(Var::mass_m0);
  const ParamExpr printed = ParamExpr(2) / (m0 * a * a) *
                            (ParamExpr(0) - (ParamExpr(1) + ParamExpr(2) * mu) *
                                                ParamExpr(Rational(1, 4)));
  const ParamExpr gap = energy_level_symbolic(0) - printed;
  out.push_back(exact_check("ground_state_energy", "Eq. (3.25a)",
                            "the printed ground-state energy equals the closed-form "
                            "level formula at n = 0",
                            gap.is_zero(), gap.to_string()));
}

// --- n = 1 reduction --------------------------------------------------------

void check_first_level_matrix(std::vector<AuditCheck>& out) {
  const ParamExpr a1 = sym(Var::alpha1), a2 = sym(Var::alpha2), a3 = sym(Var::alpha3),
                  a5 = sym(Var::alpha5);
  AlphaParams<ParamExpr> alpha = alpha_free_symbolic();
  alpha.a4 = alpha.a3 - alpha.a2;  // closure constraint at n = 1
  std::string residual = "0";
  bool zero = true;
  try {
    const auto m = qes_matrix(alpha, QesLevel(1), /*strict=*/true);
    Matrix<ParamExpr> printed(2, 2);
    printed.at(0, 0) = a5;
    printed.at(1, 0) = a3 - a2;
    printed.at(1, 1) = a1 + a3 + a5;
    const Matrix<ParamExpr> gap = m.action - printed;
    if (!gap.is_zero()) {
      zero = false;
      residual = matrix_entry_text(gap);
    }
  } catch (const ConstraintViolatedError& e) {
    zero = false;
    residual = std::string("strict action raised: ") + e.what();
  }
  out.push_back(exact_check("n1_matrix", "Eq. (36)",
                            "with the n = 1 closure constraint substituted, the "
                            "reduced action on span{1, z} equals the printed matrix "
                            "and nothing overflows",
                            zero, residual));
}

void check_first_level_determinant(std::vector<AuditCheck>& out) {
  const ParamExpr a1 = sym(Var::alpha1), a3 = sym(Var::alpha3), a5 = sym(Var::alpha5);
  AlphaParams<ParamExpr> alpha = alpha_free_symbolic();
  alpha.a4 = alpha.a3 - alpha.a2;
  const auto m = qes_matrix(alpha, QesLevel(1));
  const ParamExpr computed = determinant_condition(m.action);
  const ParamExpr printed = ParamExpr(2) * a5 * (a1 + a3) + a5 * a5;
  const ParamExpr gap = computed - printed;
  out.push_back(exact_check(
      "n1_determinant", "Eq. (37)",
      "the printed existence condition against the determinant of the n = 1 "
      "action; the computed determinant is a5*(a1 + a3 + a5) and the printed "
      "expression differs from it",
      gap.is_zero(), gap.to_string(), /*known_divergent=*/true));
}

void check_first_level_ratio(std::vector<AuditCheck>& out) {
  const ParamExpr a1 = sym(Var::alpha1), a2 = sym(Var::alpha2), a3 = sym(Var::alpha3),
                  a5 = sym(Var::alpha5);
  AlphaParams<ParamExpr> alpha = alpha_free_symbolic();
  alpha.a4 = alpha.a3 - alpha.a2;
  const auto m = qes_matrix(alpha, QesLevel(1));
  // Second row of the matrix equation: (a3 - a2) b0 + (a1 + a3 + a5) b1 = 0.
  const ParamExpr computed = (ParamExpr(0) - m.action.at(1, 0)) / m.action.at(1, 1);
  const ParamExpr printed = (a2 - a3) / (a1 + a3 + a5);
  const ParamExpr gap = computed - printed;
  out.push_back(exact_check("n1_coefficient_ratio", "Eq. (38)",
                            "the printed ratio b1/b0 follows from the second row of "
                            "the n = 1 matrix equation",
                            gap.is_zero(), gap.to_string()));
}

void check_first_state_display(std::vector<AuditCheck>& out, ParitySector sector) {
  // The unlabeled first-excited-state display writes the z coefficient as
  // (a2 - a3)/(a1 + a3); the matrix route gives (a2 - a3)/(a1 + a3 + a5).
  // They coincide exactly where a5 = 0, i.e. in the even sector.
  const ParamExpr a1 = sym(Var::alpha1), a2 = sym(Var::alpha2), a3 = sym(Var::alpha3);
  const AlphaParams<ParamExpr> alpha = alpha_sector_symbolic(sector);
  const ParamExpr derived = (a2 - a3) / (a1 + a3 + alpha.a5);
  const ParamExpr display = (a2 - a3) / (a1 + a3);
  const ParamExpr gap = derived - display;
  out.push_back(exact_check(
      "first_state_display", "§3.2, display before Eq. (p6)",
      std::string("the displayed first-excited-state z coefficient drops a5; in the ") +
          sector_name(sector) + " sector the difference is " +
          (gap.is_zero() ? "zero" : "nonzero"),
      gap.is_zero(), gap.to_string(), /*known_divergent=*/true));
}

// --- recursion and per-level state checks -----------------------------------

void check_recursion_numerator(std::vector<AuditCheck>& out, const PdmModel& model,
                               int n_max, ParitySector sector) {
  for (int n = 0; n <= n_max; ++n) {
    const auto alpha = alpha_from_model(model, energy_level(model, n), sector);
    // Printed numerator minus the derived one is the constant
    // (a2 - a3) + a4 at every step; at E = E_n it equals (n-1)(n-1-mu).
    const Rational gap = (alpha.a2 - alpha.a3) + alpha.a4;
    out.push_back(exact_check(
        "recursion_numerator_n" + std::to_string(n), "§3, recursion below Eq. (55n)",
        "published per-step recursion numerator minus the one induced by the "
        "reduced action, evaluated at the closed-form level energy; the "
        "difference vanishes only when the n = 1 closure relation holds",
        gap == 0, qes::to_string(gap), /*known_divergent=*/true));
  }
}

void check_levels(std::vector<AuditCheck>& out, const PdmModel& model, int n_max,
                  ParitySector sector, const GridSpec& grid) {
  for (int n = 0; n <= n_max; ++n) {
    const QesLevel level(n);
    const std::string suffix = "_n" + std::to_string(n);

    // Existence condition first: the determinant of the reduced action at the
    // closed-form energy.  Nonzero means no nontrivial state at this level for
    // these parameters - a parameter condition, not a defect.
    const SolvabilityResult sol = qes_solvability(model, level, sector);
    out.push_back(exact_check(
        "solvability" + suffix, n == 0 ? "§3.1" : "Eq. (36)",
        n == 0 ? "existence condition a5*b0 = 0 for a nontrivial level-0 state"
               : "determinant of the level-" + std::to_string(n) +
                     " reduced action vanishes at the closed-form energy",
        sol.satisfied, qes::to_string(sol.value), /*known_divergent=*/true));

    try {
      const WavefunctionPoly w = coefficient_recursion(model, level, sector);

      out.push_back(exact_check(
          "recursion_termination" + suffix, "§3, recursion below Eq. (55n)",
          "the derived recursion closes: the coefficient past b_n vanishes at "
          "the closed-form energy",
          w.overflow_residual == 0, qes::to_string(w.overflow_residual)));

      // When the existence condition fails (a5 != 0 with b0 = 1) the residual
      // is the obstruction a5*b0 at order zero: expected, hence informational.
      const auto alpha = alpha_from_model(model, w.energy, sector);
      const Poly<Rational> state_gap = symbolic_residual(alpha, w.b);
      out.push_back(exact_check(
          "state_residual" + suffix, "Eq. (3.15)",
          "the reduced operator annihilates the recursion-built level-" +
              std::to_string(n) + " state exactly",
          state_gap.is_zero(), state_gap.to_string("z"),
          /*known_divergent=*/!sol.satisfied));

      // Grid residual of the sampled profile against the position-dependent
      // mass operator, Richardson-extrapolated from steps h and h/2.  A state
      // that solves the original equation of motion leaves only the O(h^2)
      // truncation, so the extrapolated limit collapses; the reduced route
      // drops the energy term from the equation of motion, and for n >= 1 the
      // limit stays finite and is reported, not asserted.
      const double res_h = grid_residual(model, w, grid, 3);
      const GridSpec fine{grid.box_half_width, grid.interior_nodes * 2 + 1};
      const double res_h2 = grid_residual(model, w, fine, 3);
      const double limit = (4.0 * res_h2 - res_h) / 3.0;
      const double tolerance = 0.25 * res_h + 1e-9;
      out.push_back(numeric_check(
          "grid_residual" + suffix, "Eq. (1)",
          "Richardson-extrapolated finite-difference residual of the sampled "
          "level-" +
              std::to_string(n) + " profile against the sector operator",
          limit, tolerance, /*known_divergent=*/true));
    } catch (const SingularDenominatorError& e) {
      AuditCheck c;
      c.id = "recursion_termination" + suffix;
      c.paper_location = "§3, recursion below Eq. (55n)";
      c.description = "the level state is undefined: a recursion denominator vanishes";
      c.status = CheckStatus::informational;
      c.residual = std::string("undefined: ") + e.what();
      out.push_back(c);
    }
  }
}

// --- x-space rederivation ----------------------------------------------------

void check_weighted_ode_form(std::vector<AuditCheck>& out) {
  const ParamExpr a1 = sym(Var::alpha1), a2 = sym(Var::alpha2), a3 = sym(Var::alpha3),
                  a4 = sym(Var::alpha4), a5 = sym(Var::alpha5);
  const ParamPoly z = ParamPoly::monomial(1);
  const ParamPoly one = ParamPoly::constant(ParamExpr(1));
  // The unlabeled z-variable equation, multiplied through by z^2 (1 - z).
  DiffOperator2<ParamExpr> weighted;
  weighted.c2 = z * z * (one - z);
  weighted.c1 = ((a1 + a3) * z) * (one - z) + (a1 + a2) * (z * z);
  weighted.c0 = ((a4 + a5) * z) * (one - z) + (a4 + a5) * (z * z) + a5 * (one - z);
  const auto reduced = model_z_operator(alpha_free_symbolic());
  DiffOperator2<ParamExpr> gap;
  gap.c2 = weighted.c2 - reduced.c2;
  gap.c1 = weighted.c1 - reduced.c1;
  gap.c0 = weighted.c0 - reduced.c0;
  const bool zero = gap.c2.is_zero() && gap.c1.is_zero() && gap.c0.is_zero();
  out.push_back(exact_check("z_ode_weighted_form", "§3, unlabeled ODE after Eq. (4)",
                            "the singular-fraction form of the z-variable equation, "
                            "cleared by z^2 (1 - z), equals the reduced operator",
                            zero, operator_gap_text(gap)));
}

void check_z_rederivation(std::vector<AuditCheck>& out, ParitySector sector) {
  const ZOperatorComparison cmp = rederive_z_operator(sector);
  out.push_back(exact_check(
      "z_operator_d2", "Eq. (4)",
      "second-order coefficient of the x-space equation taken through "
      "x^2 = -a^2 z matches the reduced form after normalization by 4 a^2",
      cmp.d2_gap.is_zero(), cmp.d2_gap.to_string("z")));
  out.push_back(exact_check(
      "z_operator_d1", "Eq. (4)",
      "first-order coefficient gap of the rederived z-variable operator "
      "against the reduced form built from the printed parameter map",
      cmp.d1_gap.is_zero(), cmp.d1_gap.to_string("z"), /*known_divergent=*/true));
  out.push_back(exact_check(
      "z_operator_d0", "Eq. (4)",
      "order-zero coefficient gap of the rederived z-variable operator; the "
      "x-space equation as printed carries no energy term, so the gap retains E",
      cmp.d0_gap.is_zero(), cmp.d0_gap.to_string("z"), /*known_divergent=*/true));
}

void check_action_scale_note(std::vector<AuditCheck>& out) {
  AuditCheck c;
  c.id = "planck_power_convention";
  c.paper_location = "Eq. (1), Eq. (3.25)";
  c.description =
      "the equation of motion carries the action scale squared while the "
      "parameter map and the level formula carry its first power; the library "
      "fixes the scale to 1 so both readings coincide";
  c.status = CheckStatus::pass;
  c.residual = "0";
  out.push_back(c);
}

}  // namespace

AuditReport audit_report(const PdmModel& model, int n_max, ParitySector sector,
                         const GridSpec& grid) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  AuditReport report;
  report.a = model.a;
  report.m0 = model.m0;
  report.mu = model.mu.mu();
  report.sector = sector;
  report.n_max = n_max;
  report.grid = grid;

  const int n_alg = std::max(6, n_max);
  check_commutators(report.checks, n_alg);
  check_invariant_subspace(report.checks, n_alg);
  check_expansion_formulas(report.checks, n_alg);
  check_coefficient_matching(report.checks, n_alg);
  check_operator_membership(report.checks, n_alg);
  check_energy_equivalence(report.checks, std::max(10, n_max), sector);
  check_ground_state_energy(report.checks);
  check_first_level_matrix(report.checks);
  check_first_level_determinant(report.checks);
  check_first_level_ratio(report.checks);
  check_first_state_display(report.checks, sector);
  check_recursion_numerator(report.checks, model, n_max, sector);
  check_levels(report.checks, model, n_max, sector, grid);
  check_weighted_ode_form(report.checks);
  check_z_rederivation(report.checks, sector);
  check_action_scale_note(report.checks);

  std::sort(report.checks.begin(), report.checks.end(),
            [](const AuditCheck& x, const AuditCheck& y) { return x.id < y.id; });
  return report;
}

std::string audit_report_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["params"]["a"] = qes::to_string(report.a);
  j["params"]["grid_L"] = report.grid.box_half_width;
  j["params"]["grid_N"] = report.grid.interior_nodes;
  j["params"]["m0"] = qes::to_string(report.m0);
  j["params"]["mu"] = qes::to_string(report.mu);
  j["params"]["n_max"] = report.n_max;
  j["params"]["sector"] = sector_name(report.sector);

  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["paper_location"] = c.paper_location;
    item["status"] = status_name(c.status);
    item["residual"] = c.residual;
    if (c.tolerance) {
      item["tolerance"] = *c.tolerance;
    } else {
      item["tolerance"] = nullptr;
    }
    j["checks"].push_back(std::move(item));
  }

  const AuditSummary s = report.summary();
  j["summary"]["pass"] = s.pass;
  j["summary"]["fail"] = s.fail;
  j["summary"]["informational"] = s.informational;
  return j.dump(2) + "\n";
}

}  // namespace qes
