#pragma once

#include "qes/errors.hpp"
#include "qes/poly.hpp"
#include "qes/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace qes {

// Deformation parameter of the reflection-difference derivative
//   D f(x) = f'(x) + (mu/x) (f(x) - f(-x)).
// The operator (and the weight x^{2 mu} behind its grid form) is usable only
// for mu > -1/2, which the constructor enforces.
class DunklParam {
 public:
  explicit DunklParam(Rational mu) : mu_(std::move(mu)) {
    if (2 * mu_ <= -1) {
      throw std::domain_error("deformation parameter must satisfy mu > -1/2, got " +
                              qes::to_string(mu_));
    }
  }
  const Rational& mu() const { return mu_; }
  double mu_double() const { return to_double(mu_); }

 private:
  Rational mu_;
};

// Reflection eigenvalue label: even functions have s = +1, odd s = -1.
enum class ParitySector : int { even = +1, odd = -1 };

inline int sector_sign(ParitySector s) { return static_cast<int>(s); }
inline const char* sector_name(ParitySector s) {
  return s == ParitySector::even ? "even" : "odd";
}

// Real-valued samples on the symmetric grid x_j = j*h for
// j in {-n,...,-1, 1,...,n}; the origin is excluded because the reflection
// term carries a 1/x factor.  Node count is 2n.
class GridFunction {
 public:
  GridFunction(int half_count, double step);
  static GridFunction sample(int half_count, double step,
                             const std::function<double(double)>& f);

  int half_count() const { return n_; }
  int node_count() const { return 2 * n_; }
  double step() const { return h_; }

  double node(int j) const { return j * h_; }  // j != 0, |j| <= n
  double value(int j) const { return v_[index(j)]; }
  double& value(int j) { return v_[index(j)]; }

  bool same_grid(const GridFunction& other) const {
    return n_ == other.n_ && h_ == other.h_;
  }

 private:
  std::size_t index(int j) const;

  int n_;
  double h_;
  std::vector<double> v_;
};

// f(x) -> f(-x).
RationalPoly reflection_apply(const RationalPoly& p);
GridFunction reflection_apply(const GridFunction& f);

// Splits f into (even, odd) parts, f = even + odd.
std::pair<RationalPoly, RationalPoly> parity_decompose(const RationalPoly& p);
std::pair<GridFunction, GridFunction> parity_decompose(const GridFunction& f);

// Exact action on polynomials: D x^k = (k + 2 mu [k odd]) x^{k-1}.
RationalPoly dunkl_apply(const RationalPoly& p, const DunklParam& mu);

// Grid action: second-order central differences in the interior, one-sided
// three-point stencils at the four nodes adjacent to the origin or the outer
// edge.  Those nodes are listed in low_accuracy_nodes.  The reflection term
// is evaluated exactly from the mirrored sample.
struct GridDerivative {
  GridFunction values;
  std::vector<int> low_accuracy_nodes;
};
GridDerivative dunkl_apply(const GridFunction& f, const DunklParam& mu);

}  // namespace qes
