#include "qes/dunkl.hpp"

#include <cmath>
#include <string>

namespace qes {

GridFunction::GridFunction(int half_count, double step)
    : n_(half_count), h_(step) {
  // The reflection-difference derivative needs three nodes on each side for
  // its one-sided stencils, so require at least 8 nodes total.
  if (n_ < 4) {
    throw InvalidGridError("grid needs at least 8 nodes, got " +
                           std::to_string(2 * n_));
  }
  if (!(h_ > 0)) {
    throw InvalidGridError("grid step must be positive, got " +
                           std::to_string(h_));
  }
  v_.assign(static_cast<std::size_t>(2 * n_), 0.0);
}

GridFunction GridFunction::sample(int half_count, double step,
                                  const std::function<double(double)>& f) {
  GridFunction g(half_count, step);
  for (int j = -half_count; j <= half_count; ++j) {
    if (j == 0) continue;
    g.value(j) = f(g.node(j));
  }
  return g;
}

std::size_t GridFunction::index(int j) const {
  if (j == 0 || j < -n_ || j > n_) {
    throw std::out_of_range("grid index " + std::to_string(j) +
                            " outside [-" + std::to_string(n_) + "," +
                            std::to_string(n_) + "] \\ {0}");
  }
  return static_cast<std::size_t>(j < 0 ? j + n_ : n_ + j - 1);
}

RationalPoly reflection_apply(const RationalPoly& p) { return p.reflect(); }

GridFunction reflection_apply(const GridFunction& f) {
  GridFunction g(f.half_count(), f.step());
  for (int j = 1; j <= f.half_count(); ++j) {
    g.value(j) = f.value(-j);
    g.value(-j) = f.value(j);
  }
  return g;
}

std::pair<RationalPoly, RationalPoly> parity_decompose(const RationalPoly& p) {
  return {p.even_part(), p.odd_part()};
}

std::pair<GridFunction, GridFunction> parity_decompose(const GridFunction& f) {
  GridFunction even(f.half_count(), f.step());
  GridFunction odd(f.half_count(), f.step());
  for (int j = 1; j <= f.half_count(); ++j) {
    const double plus = f.value(j);
    const double minus = f.value(-j);
    even.value(j) = 0.5 * (plus + minus);
    even.value(-j) = even.value(j);
    odd.value(j) = 0.5 * (plus - minus);
    odd.value(-j) = -odd.value(j);
  }
  return {even, odd};
}

RationalPoly dunkl_apply(const RationalPoly& p, const DunklParam& mu) {
  // D x^k = (k + 2 mu [k odd]) x^{k-1}: the derivative plus the reflection
  // difference, which contributes 2 mu x^{k-1} exactly when k is odd.
  std::vector<Rational> out;
  if (p.degree() < 1) return RationalPoly();
  out.assign(static_cast<std::size_t>(p.degree()), Rational(0));
  for (int k = 1; k <= p.degree(); ++k) {
    Rational factor(k);
    if (k % 2 == 1) factor += 2 * mu.mu();
    out[static_cast<std::size_t>(k - 1)] = factor * p.coeff(static_cast<unsigned>(k));
  }
  return RationalPoly(std::move(out));
}

GridDerivative dunkl_apply(const GridFunction& f, const DunklParam& mu) {
  const int n = f.half_count();
  const double h = f.step();
  const double m = mu.mu_double();
  GridDerivative result{GridFunction(n, h), {-n, -1, 1, n}};

  const auto one_sided = [&](int j, int dir) {
    // Second-order three-point stencil pointing away from the excluded node.
    return dir * (-3.0 * f.value(j) + 4.0 * f.value(j + dir) -
                  f.value(j + 2 * dir)) /
           (2.0 * h);
  };

  for (int j = -n; j <= n; ++j) {
    if (j == 0) continue;
    double derivative;
    if (j == 1 || j == -n) {
      derivative = one_sided(j, +1);
    } else if (j == -1 || j == n) {
      derivative = one_sided(j, -1);
    } else {
      derivative = (f.value(j + 1) - f.value(j - 1)) / (2.0 * h);
    }
    const double x = f.node(j);
    result.values.value(j) = derivative + m / x * (f.value(j) - f.value(-j));
  }
  return result;
}

}  // namespace qes
