// Verification battery: expected statuses per check family, determinism of
// the serialized report, and the x-space rederivation gaps.

#include "qes/audit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using qes::AuditCheck;
using qes::AuditReport;
using qes::CheckStatus;
using qes::DunklParam;
using qes::GridSpec;
using qes::ParitySector;
using qes::PdmModel;
using qes::Rational;

namespace {

PdmModel default_model() {
  return PdmModel(Rational(1), Rational(1), DunklParam(Rational(0)));
}

const AuditCheck* find_check(const AuditReport& report, const std::string& id) {
  for (const auto& c : report.checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

TEST(AuditTest, ChecksAreSortedAndUnique) {
  const AuditReport report = audit_report(default_model(), 2);
  ASSERT_FALSE(report.checks.empty());
  for (std::size_t i = 1; i < report.checks.size(); ++i) {
    EXPECT_LT(report.checks[i - 1].id, report.checks[i].id);
  }
}

TEST(AuditTest, KnownGoodRelationsPass) {
  const AuditReport report = audit_report(default_model(), 2);
  const std::vector<std::string> must_pass = {
      "sl2_commutator_cartan_raising",
      "sl2_commutator_cartan_lowering",
      "sl2_commutator_raising_lowering",
      "sl2_invariant_subspace",
      "qes_expansion_d2",
      "qes_expansion_d1",
      "qes_expansion_d0",
      "coefficient_matching",
      "qes_operator_membership",
      "energy_constraint_equivalence",
      "ground_state_energy",
      "n1_matrix",
      "n1_coefficient_ratio",
      "z_ode_weighted_form",
      "z_operator_d2",
      "planck_power_convention",
      "solvability_n0",
      "solvability_n1",
      "solvability_n2",
      "recursion_termination_n0",
      "recursion_termination_n1",
      "state_residual_n0",
      "state_residual_n1",
      "first_state_display",
      "grid_residual_n0",
  };
  for (const auto& id : must_pass) {
    const AuditCheck* c = find_check(report, id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->status, CheckStatus::pass) << id << ": " << c->residual;
  }
  EXPECT_FALSE(report.known_good_failed());
  EXPECT_EQ(report.summary().fail, 0);
}

TEST(AuditTest, DivergentRelationsAreInformationalWithNonzeroResidual) {
  const AuditReport report = audit_report(default_model(), 3);
  const std::vector<std::string> divergent = {
      "n1_determinant",
      "recursion_numerator_n2",
      "recursion_numerator_n3",
      "z_operator_d1",
      "z_operator_d0",
  };
  for (const auto& id : divergent) {
    const AuditCheck* c = find_check(report, id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->status, CheckStatus::informational) << id;
    EXPECT_NE(c->residual, "0") << id;
    EXPECT_FALSE(c->paper_location.empty()) << id;
  }
  // n = 1 is the one level where the published recursion numerator is right.
  const AuditCheck* ok = find_check(report, "recursion_numerator_n1");
  ASSERT_NE(ok, nullptr);
  EXPECT_EQ(ok->status, CheckStatus::pass);
}

TEST(AuditTest, DeformedRecursionNumeratorCanAgree) {
  // The gap (n-1)(n-1-mu) also vanishes at mu = n-1: with mu = 1 the n = 2
  // published numerator is accidentally correct.
  const PdmModel model(Rational(1), Rational(1), DunklParam(Rational(1)));
  const AuditReport report = audit_report(model, 3);
  const AuditCheck* two = find_check(report, "recursion_numerator_n2");
  ASSERT_NE(two, nullptr);
  EXPECT_EQ(two->status, CheckStatus::pass);
  const AuditCheck* three = find_check(report, "recursion_numerator_n3");
  ASSERT_NE(three, nullptr);
  EXPECT_EQ(three->status, CheckStatus::informational);
}

TEST(AuditTest, ExcitedGridResidualsAreInformational) {
  // mu = 1/2 keeps the flux weight smooth at the origin, so the level-0
  // residual is pure truncation and the Richardson limit collapses; the
  // excited profiles satisfy only the reduced equation and keep a finite gap.
  const PdmModel model(Rational(1), Rational(1), DunklParam(Rational(1, 2)));
  const AuditReport report = audit_report(model, 2);
  const AuditCheck* ground = find_check(report, "grid_residual_n0");
  ASSERT_NE(ground, nullptr);
  EXPECT_EQ(ground->status, CheckStatus::pass);
  ASSERT_TRUE(ground->tolerance.has_value());
  for (const auto& id : {"grid_residual_n1", "grid_residual_n2"}) {
    const AuditCheck* c = find_check(report, id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->status, CheckStatus::informational) << id;
    ASSERT_TRUE(c->tolerance.has_value()) << id;
  }
}

TEST(AuditTest, SingularLevelIsSurfacedAsUndefined) {
  // mu = 0, a = m0 = 1 puts a zero in the recursion denominator at k = 2, so
  // every level n >= 2 has no b0-led state: the report carries an
  // informational marker instead of state and grid residual rows.
  const AuditReport report = audit_report(default_model(), 2);
  const AuditCheck* marker = find_check(report, "recursion_termination_n2");
  ASSERT_NE(marker, nullptr);
  EXPECT_EQ(marker->status, CheckStatus::informational);
  EXPECT_NE(marker->residual.find("undefined"), std::string::npos);
  EXPECT_EQ(find_check(report, "state_residual_n2"), nullptr);
  EXPECT_EQ(find_check(report, "grid_residual_n2"), nullptr);
  EXPECT_EQ(report.summary().fail, 0);
}

TEST(AuditTest, OddSectorConditionsAreInformationalNotFailing) {
  const PdmModel model(Rational(1), Rational(1), DunklParam(Rational(1, 2)));
  const AuditReport report =
      audit_report(model, 1, ParitySector::odd, GridSpec{8.0, 160});
  EXPECT_EQ(report.summary().fail, 0);
  EXPECT_FALSE(report.known_good_failed());
  for (const auto& id :
       {"solvability_n0", "solvability_n1", "state_residual_n0",
        "state_residual_n1", "first_state_display"}) {
    const AuditCheck* c = find_check(report, id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->status, CheckStatus::informational) << id;
    EXPECT_NE(c->residual, "0") << id;
  }
}

TEST(AuditTest, SummaryCountsMatchStatuses) {
  const AuditReport report = audit_report(default_model(), 1);
  int pass = 0, fail = 0, info = 0;
  for (const auto& c : report.checks) {
    switch (c.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::informational: ++info; break;
    }
  }
  const auto summary = report.summary();
  EXPECT_EQ(summary.pass, pass);
  EXPECT_EQ(summary.fail, fail);
  EXPECT_EQ(summary.informational, info);
  EXPECT_GT(info, 0);  // divergent published relations are always surfaced
}

TEST(AuditTest, ReportIsByteStable) {
  const PdmModel model(Rational(2), Rational(1), DunklParam(Rational(1, 4)));
  const AuditReport first = audit_report(model, 2, ParitySector::even,
                                         GridSpec{6.0, 120});
  const AuditReport second = audit_report(model, 2, ParitySector::even,
                                          GridSpec{6.0, 120});
  const std::string a = audit_report_json(first);
  const std::string b = audit_report_json(second);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a.back(), '\n');
  EXPECT_EQ(a.find('\r'), std::string::npos);
}

TEST(AuditTest, JsonCarriesPinnedShape) {
  const AuditReport report = audit_report(default_model(), 1);
  const std::string text = audit_report_json(report);
  for (const char* needle :
       {"\"params\"", "\"checks\"", "\"summary\"", "\"paper_location\"",
        "\"residual\"", "\"tolerance\"", "\"a\"", "\"grid_L\"", "\"grid_N\"",
        "\"m0\"", "\"mu\"", "\"n_max\"", "\"sector\""}) {
    EXPECT_NE(text.find(needle), std::string::npos) << needle;
  }
  // The prose description stays out of the machine interface.
  EXPECT_EQ(text.find("\"description\""), std::string::npos);
}

TEST(AuditTest, ParameterSweepNeverFails) {
  for (const Rational& mu : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
    for (const Rational& a : {Rational(1), Rational(2)}) {
      const PdmModel model(a, Rational(1), DunklParam(mu));
      for (const ParitySector sector : {ParitySector::even, ParitySector::odd}) {
        const AuditReport report =
            audit_report(model, 2, sector, GridSpec{8.0, 100});
        EXPECT_EQ(report.summary().fail, 0)
            << "mu=" << mu << " a=" << a
            << " sector=" << (sector == ParitySector::even ? "even" : "odd");
      }
    }
  }
}

TEST(AuditTest, RejectsNegativeLevelCap)
{
  EXPECT_THROW(audit_report(default_model(), -1), std::invalid_argument);
}

TEST(RederiveTest, SecondOrderSymbolMatchesExactly) {
  const auto cmp = qes::rederive_z_operator(ParitySector::even);
  EXPECT_TRUE(cmp.d2_gap.is_zero());
  EXPECT_FALSE(cmp.d1_gap.is_zero());
  EXPECT_FALSE(cmp.d0_gap.is_zero());
}

TEST(RederiveTest, OddSectorKeepsReflectionTerm) {
  const auto cmp = qes::rederive_z_operator(ParitySector::odd);
  EXPECT_TRUE(cmp.d2_gap.is_zero());
  EXPECT_FALSE(cmp.d0_gap.is_zero());
}

}  // namespace
