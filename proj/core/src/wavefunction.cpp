#include "qes/wavefunction.hpp"

#include "qes/errors.hpp"

#include <cmath>
#include <string>

namespace qes {

namespace {

Rational recursion_denominator(const AlphaParams<Rational>& alpha, int k) {
  const Rational kk(k);
  return kk * (kk - 1 + alpha.a1 + alpha.a3) + alpha.a5;
}

std::vector<Rational> run_recursion(const AlphaParams<Rational>& alpha,
                                    QesLevel level, bool printed_numerator) {
  std::vector<Rational> b{Rational(1)};
  b.reserve(static_cast<std::size_t>(level.n) + 1);
  for (int j = 0; j < level.n; ++j) {
    const Rational jj(j);
    const Rational diff = alpha.a2 - alpha.a3;
    // Derived from the z^{j+1} row of the reduced action.  The published
    // numerator simplifies to j(j-1) - (j-1)(a2-a3); it exceeds the derived
    // one by the constant (a2-a3) + a4, which vanishes only when the closure
    // constraint holds with n = 1.
    const Rational numerator =
        printed_numerator
            ? Rational(jj * (jj - 1 - diff + jj / 2) + diff - jj * jj / 2)
            : Rational(jj * (jj - 1) - jj * diff - alpha.a4);
    const Rational denominator = recursion_denominator(alpha, j + 1);
    if (denominator == 0) {
      throw SingularDenominatorError(
          "recursion denominator vanished at k = " + std::to_string(j + 1) +
              "; the level-" + std::to_string(level.n) +
              " state is not defined at these parameters",
          j + 1);
    }
    b.push_back(numerator / denominator * b.back());
  }
  return b;
}

}  // namespace

std::vector<Rational> recursion_coefficients(const AlphaParams<Rational>& alpha,
                                             QesLevel level) {
  return run_recursion(alpha, level, /*printed_numerator=*/false);
}

std::vector<Rational> printed_recursion_coefficients(
    const AlphaParams<Rational>& alpha, QesLevel level) {
  return run_recursion(alpha, level, /*printed_numerator=*/true);
}

WavefunctionPoly coefficient_recursion(const PdmModel& model, QesLevel level,
                                       ParitySector sector) {
  return coefficient_recursion(model, level, sector, energy_level(model, level.n));
}

WavefunctionPoly coefficient_recursion(const PdmModel& model, QesLevel level,
                                       ParitySector sector, const Rational& energy) {
  const AlphaParams<Rational> alpha = alpha_from_model(model, energy, sector);
  WavefunctionPoly w;
  w.b = recursion_coefficients(alpha, level);
  w.printed_b = printed_recursion_coefficients(alpha, level);
  w.n = level.n;
  w.sector = sector;
  w.energy = energy;
  w.a = model.a;
  // z^{n+1} coefficient of the reduced action applied to the state: only the
  // top basis vector overflows, with weight -n(n-1) + n(a2-a3) + a4.
  const Rational nn(level.n);
  w.overflow_residual =
      (-nn * (nn - 1) + nn * (alpha.a2 - alpha.a3) + alpha.a4) * w.b.back();
  return w;
}

RationalPoly stationary_polynomial(const WavefunctionPoly& w) {
  const Rational a2 = w.a * w.a;
  const unsigned offset = w.sector == ParitySector::even ? 0 : 1;
  std::vector<Rational> coeffs(2 * w.b.size() - 1 + offset, Rational(0));
  Rational scale = -1 / a2;  // leading -(1/a^2) of the profile
  for (std::size_t k = 0; k < w.b.size(); ++k) {
    coeffs[2 * k + offset] = scale * w.b[k];
    scale /= a2;  // each power of z contributes x^2 / a^2
  }
  return RationalPoly(std::move(coeffs));
}

std::complex<double> assemble_wavefunction(const WavefunctionPoly& w, double x,
                                           double t) {
  const Poly<double> profile = to_double_poly(stationary_polynomial(w));
  const double amplitude = profile.evaluate(x);
  const double phase = -to_double(w.energy) * t;
  return std::complex<double>(amplitude * std::cos(phase),
                              amplitude * std::sin(phase));
}

SolvabilityResult qes_solvability(const PdmModel& model, QesLevel level,
                                  ParitySector sector) {
  SolvabilityResult result;
  const auto symbolic = qes_matrix(alpha_sector_symbolic(sector), level);
  result.residual = determinant_condition(symbolic.action);

  const AlphaParams<Rational> alpha =
      alpha_from_model(model, energy_level(model, level.n), sector);
  const auto concrete = qes_matrix(alpha, level);
  result.value = determinant_condition(concrete.action);
  result.satisfied = result.value == 0;
  return result;
}

SpectrumResult spectrum(const PdmModel& model, int n_max, ParitySector sector) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  SpectrumResult result;
  result.levels.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const Rational energy = energy_level(model, n);
    const AlphaParams<Rational> alpha = alpha_from_model(model, energy, sector);
    const Rational det = determinant_condition(qes_matrix(alpha, QesLevel(n)).action);
    result.levels.push_back({n, energy, sector, det == 0, det});
  }
  return result;
}

}  // namespace qes
