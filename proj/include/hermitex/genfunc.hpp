#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hermitex/polynomial.hpp"

namespace hermitex {

inline constexpr double kDefaultTBound = 2.0;

/// Partial sum sum_{n=0}^{order} P_n(x) t^n / n! of an exponential
/// generating function. Construction validates order <= cap and |t| <= t_bound.
class SeriesTruncation {
 public:
  SeriesTruncation(unsigned order, double t, double x, double t_bound = kDefaultTBound);

  unsigned order() const noexcept { return order_; }
  double t() const noexcept { return t_; }
  double x() const noexcept { return x_; }

 private:
  unsigned order_;
  double t_;
  double x_;
};

/// An (EGF term family, closed form) pair. terms(N) returns the exact
/// polynomials P_0 .. P_N multiplying t^n / n!; closed_form(x, t) is the
/// series sum.
struct GeneratingFunction {
  std::string name;
  std::function<std::vector<Polynomial<Rational>>(unsigned order)> terms;
  std::function<double(double x, double t)> closed_form;
};

/// sum H_n(x) t^n / n! = exp(2xt - t^2)
const GeneratingFunction& hermite_egf();

/// sum G^{1/2}[H_n](x) t^n / n! = exp(2xt)
const GeneratingFunction& transformed_hermite_egf();

/// Registered pairs, in report order.
std::vector<std::reference_wrapper<const GeneratingFunction>> registered_generating_functions();

/// Compensated partial sum of `gf` in ascending n.
double partial_sum(const GeneratingFunction& gf, const SeriesTruncation& trunc);

double egf_partial(const SeriesTruncation& trunc);
double transformed_egf_partial(const SeriesTruncation& trunc);

struct EgfResidual {
  double egf = 0.0;          ///< |egf_partial - exp(2xt - t^2)|
  double transformed = 0.0;  ///< |transformed_egf_partial - exp(2xt)|
};

EgfResidual egf_residual(const SeriesTruncation& trunc);

}  // namespace hermitex
