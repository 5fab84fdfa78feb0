#pragma once

#include "qes/grid_hamiltonian.hpp"
#include "qes/model.hpp"
#include "qes/poly.hpp"
#include "qes/sl2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qes {

// Outcome of one verification item.
//   pass          - residual is exactly zero (or below the stated tolerance)
//   fail          - a relation that should hold does not
//   informational - a relation known to diverge from its published form, or
//                   a parameter condition that simply does not hold here;
//                   reported with its residual, never hidden
enum class CheckStatus { pass, fail, informational };

const char* status_name(CheckStatus s);

struct AuditCheck {
  std::string id;
  std::string paper_location;  // label of the published relation under test
  std::string description;
  CheckStatus status = CheckStatus::pass;
  std::string residual;                      // exact expression, or %.17g
  std::optional<double> tolerance;           // numeric checks only
};

struct AuditSummary {
  int pass = 0;
  int fail = 0;
  int informational = 0;
};

struct AuditReport {
  Rational a, m0, mu;
  ParitySector sector = ParitySector::even;
  int n_max = 0;
  GridSpec grid{};
  std::vector<AuditCheck> checks;  // sorted by id

  AuditSummary summary() const;
  bool known_good_failed() const;  // any check with status == fail
};

// Reduced operator applied to a candidate polynomial state sum b_k z^k; the
// zero polynomial certifies the state at the energy folded into alpha.
template <class T>
Poly<T> symbolic_residual(const AlphaParams<T>& alpha, const std::vector<T>& b);

// The published x-space equation of motion, cleared to polynomial
// coefficients (multiplied by a^2 m0 x^2, reflection replaced by the sector
// sign), then taken through x^2 = -a^2 z.  `rederived` is that operator;
// `alpha_form` is the reduced model operator with the parameter map
// substituted; the gaps are per-coefficient differences of
// rederived/(4 a^2) against alpha_form.  The d^2 gap vanishes; the lower
// two do not match the published reduced form and carry the differences.
struct ZOperatorComparison {
  DiffOperator2<ParamExpr> rederived;
  DiffOperator2<ParamExpr> alpha_form;
  Poly<ParamExpr> d2_gap, d1_gap, d0_gap;
};
ZOperatorComparison rederive_z_operator(ParitySector sector);

// Runs the whole battery at the given model point: algebra relations,
// closed-form expansions, the n = 1 reduction, recursion routes, state
// residuals, solvability conditions, the x-space rederivation and grid
// residuals.  Deterministic: same inputs give a byte-identical report.
AuditReport audit_report(const PdmModel& model, int n_max,
                         ParitySector sector = ParitySector::even,
                         const GridSpec& grid = {8.0, 240});

// Serialization used by the command-line tool: stable key order, stable
// float formatting, LF line endings.
std::string audit_report_json(const AuditReport& report);

}  // namespace qes
