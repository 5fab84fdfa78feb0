// Microbenchmarks for the solver's hot paths: symbolic determinants, the
// coefficient recursion, the grid eigensolver, expression arithmetic, and the
// full audit battery.

#include "qes/audit.hpp"
#include "qes/grid_eigen.hpp"
#include "qes/model.hpp"
#include "qes/param_expr.hpp"
#include "qes/sl2.hpp"
#include "qes/wavefunction.hpp"

#include <benchmark/benchmark.h>

namespace {

qes::PdmModel reference_model() {
  return qes::PdmModel(qes::Rational(1), qes::Rational(1),
                       qes::DunklParam(qes::Rational(1, 4)));
}

void BM_SymbolicDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto alpha = qes::alpha_sector_symbolic(qes::ParitySector::even);
  for (auto _ : state) {
    const auto m = qes::qes_matrix(alpha, qes::QesLevel(n));
    benchmark::DoNotOptimize(qes::determinant_condition(m.action));
  }
}
BENCHMARK(BM_SymbolicDeterminant)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_CoefficientRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto model = reference_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qes::coefficient_recursion(model, qes::QesLevel(n), qes::ParitySector::even));
  }
}
BENCHMARK(BM_CoefficientRecursion)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_GridEigen(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  const auto model = reference_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qes::grid_eigen(model, qes::ParitySector::even,
                                             qes::GridSpec{8.0, nodes},
                                             qes::MassMode::position_dependent, 3));
  }
}
BENCHMARK(BM_GridEigen)->Arg(128)->Arg(512)->Arg(2048);

void BM_ExpressionProduct(benchmark::State& state) {
  const unsigned power = static_cast<unsigned>(state.range(0));
  const qes::MPoly base = qes::MPoly::variable(qes::Var::alpha1) +
                          qes::MPoly::variable(qes::Var::alpha2) +
                          qes::MPoly::variable(qes::Var::mu) + qes::MPoly(1);
  const qes::MPoly lhs = base.pow(power);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lhs * lhs);
  }
}
BENCHMARK(BM_ExpressionProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_AuditReport(benchmark::State& state) {
  const auto model = reference_model();
  for (auto _ : state) {
    const auto report =
        qes::audit_report(model, 2, qes::ParitySector::even, qes::GridSpec{8.0, 80});
    benchmark::DoNotOptimize(qes::audit_report_json(report));
  }
}
BENCHMARK(BM_AuditReport);

}  // namespace

BENCHMARK_MAIN();
