#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "hermitex/error.hpp"
#include "hermitex/heat_operator.hpp"
#include "hermitex/hermite.hpp"
#include "hermitex/polynomial.hpp"
#include "hermitex/quadrature.hpp"

namespace hermitex {

/// Parameter u of the Gauss transform G^u; related to the heat operator by
/// u = 2c. The symbolic path accepts any sign, the numeric path needs u > 0.
template <HeatParameter S>
class GaussParameter {
 public:
  explicit GaussParameter(S u) : u_(std::move(u)) {}

  static GaussParameter from_heat(const HeatOperator<S>& op) { return GaussParameter(S(2 * op.c())); }
  HeatOperator<S> to_heat() const { return HeatOperator<S>(S(u_ / 2)); }

  const S& value() const noexcept { return u_; }

 private:
  S u_;
};

GaussParameter(Rational) -> GaussParameter<Rational>;
GaussParameter(double) -> GaussParameter<double>;

/// G^u[p] = W(u/2) p
template <Ring T, HeatParameter S>
  requires HeatCompatible<T, S>
Polynomial<T> gauss_symbolic(const Polynomial<T>& p, const GaussParameter<S>& u) {
  return apply_heat_operator(u.to_heat(), p);
}

namespace detail {
inline double as_double(double v) { return v; }
inline double as_double(const Rational& v) { return to_double(v); }
double checked_kernel_width(double u);
}  // namespace detail

/// (1/sqrt(pi)) sum_i w_i h(x + sqrt(2u) t_i), the Gaussian-kernel integral
/// (1/sqrt(2 pi u)) Int exp(-(y-x)^2/(2u)) h(y) dy after y = x + sqrt(2u) t.
/// Throws DomainError for u <= 0.
template <class F, HeatParameter S>
auto gauss_numeric(F&& h, const GaussParameter<S>& u, double x, const GaussHermiteRule& rule) {
  const double width = detail::checked_kernel_width(detail::as_double(u.value()));
  return integrate([&](double t) { return h(x + width * t); }, rule) / std::sqrt(std::numbers::pi);
}

enum class IdentityId { hermite_to_monomial, monomial_to_modified_hermite, operator_vs_integral };
enum class Mode { exact, numeric };

std::string_view to_string(IdentityId id);
std::string_view to_string(Mode mode);

/// Outcome of one identity check. max_error is 0 for passing exact checks;
/// numeric errors are relative (see NumericOptions).
struct TransformIdentityResult {
  IdentityId identity_id;
  unsigned n = 0;
  Mode mode = Mode::exact;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

inline constexpr double kDefaultNumericTolerance = 1e-10;

/// {-3, -2, -1, -0.5, 0, 0.5, 1, 2, 3}
std::span<const double> default_x_grid();

struct NumericOptions {
  std::vector<double> x_grid{default_x_grid().begin(), default_x_grid().end()};
  double tolerance = kDefaultNumericTolerance;
};

/// G^{1/2}[H_n] = (2x)^n.
///
/// EXACT compares coefficients. NUMERIC evaluates the quadrature at each grid
/// point; the error is scaled by max(1, |expected|, M) with M the absolute
/// integrand mass (1/sqrt(pi)) sum w_i |H_n(node_i)|, since the expected value
/// vanishes at x = 0 while the integrand does not.
TransformIdentityResult verify_hermite_to_monomial(HermiteIndex n, Mode mode,
                                                   const NumericOptions& options = {});

/// G^{1/2}[y^n] = (2i)^-n H_n(ix). NUMERIC error is scaled by max(1, |expected|).
TransformIdentityResult verify_monomial_to_modified_hermite(HermiteIndex n, Mode mode,
                                                            const NumericOptions& options = {});

/// W(c) p evaluated exactly against the quadrature of the Gaussian kernel
/// integral with u = 2c, over `x_grid`. Error scaled by max(1, |value|).
/// Throws DomainError for c <= 0; use hermite_integral_rep for c = -1/4.
TransformIdentityResult verify_operator_vs_integral(const Polynomial<Rational>& p, const Rational& c,
                                                    std::span<const double> x_grid,
                                                    double tolerance = kDefaultNumericTolerance);

}  // namespace hermitex
