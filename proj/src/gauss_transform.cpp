#include "hermitex/gauss_transform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace hermitex {
namespace {

constexpr std::array<double, 9> kDefaultGrid{-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0};

const Rational& half() {
  static const Rational value(1, 2);
  return value;
}

double ipow(double base, unsigned n) {
  double out = 1.0;
  for (unsigned k = 0; k < n; ++k) out *= base;
  return out;
}

// Largest |coefficient difference|, for reporting failed exact comparisons.
double coefficient_gap(const Polynomial<Rational>& a, const Polynomial<Rational>& b) {
  const auto len = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
  Rational worst(0);
  for (std::size_t k = 0; k < len; ++k) {
    Rational diff = abs(a.coefficient(k) - b.coefficient(k));
    if (diff > worst) worst = diff;
  }
  try {
    return to_double(worst);
  } catch (const RangeError&) {
    return HUGE_VAL;
  }
}

TransformIdentityResult compare_exact(IdentityId id, unsigned n, const Polynomial<Rational>& lhs,
                                      const Polynomial<Rational>& rhs) {
  TransformIdentityResult result{id, n, Mode::exact};
  result.passed = lhs == rhs;
  result.max_error = result.passed ? 0.0 : coefficient_gap(lhs, rhs);
  return result;
}

void finish(TransformIdentityResult& result) {
  // NaN never passes.
  result.passed = result.max_error <= result.tolerance;
}

double exact_value(const Polynomial<Rational>& p, double x) {
  return to_double(evaluate(p, from_double(x)));
}

}  // namespace

namespace detail {
double checked_kernel_width(double u) {
  if (!(u > 0.0)) {
    throw DomainError("non-positive transform parameter: numeric path undefined, use symbolic path");
  }
  return std::sqrt(2.0 * u);
}
}  // namespace detail

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::hermite_to_monomial:
      return "HERMITE_TO_MONOMIAL";
    case IdentityId::monomial_to_modified_hermite:
      return "MONOMIAL_TO_MODIFIED_HERMITE";
    case IdentityId::operator_vs_integral:
      return "OPERATOR_VS_INTEGRAL";
  }
  return "UNKNOWN";
}

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "EXACT" : "NUMERIC"; }

std::span<const double> default_x_grid() { return kDefaultGrid; }

TransformIdentityResult verify_hermite_to_monomial(HermiteIndex index, Mode mode,
                                                   const NumericOptions& options) {
  const unsigned n = index.value();
  const GaussParameter u(half());
  if (mode == Mode::exact) {
    const auto lhs = gauss_symbolic(hermite_recurrence(index), u);
    const auto rhs = substitute_scaled(Polynomial<Rational>::monomial(n), Rational(2));
    return compare_exact(IdentityId::hermite_to_monomial, n, lhs, rhs);
  }

  TransformIdentityResult result{IdentityId::hermite_to_monomial, n, Mode::numeric};
  result.tolerance = options.tolerance;
  const auto rule = build_rule(default_rule_order(n));
  for (const double x : options.x_grid) {
    const double got = gauss_numeric([n](double y) { return hermite_value(n, y); }, u, x, rule);
    const double mass = gauss_numeric([n](double y) { return std::abs(hermite_value(n, y)); }, u, x, rule);
    const double expected = ipow(2.0 * x, n);
    const double scale = std::max({1.0, std::abs(expected), mass});
    result.max_error = std::max(result.max_error, std::abs(got - expected) / scale);
    if (std::isnan(got)) result.max_error = got;
  }
  finish(result);
  return result;
}

TransformIdentityResult verify_monomial_to_modified_hermite(HermiteIndex index, Mode mode,
                                                            const NumericOptions& options) {
  const unsigned n = index.value();
  const GaussParameter u(half());
  const auto modified = modified_hermite(index);
  if (mode == Mode::exact) {
    const auto lhs = gauss_symbolic(Polynomial<Rational>::monomial(n), u);
    return compare_exact(IdentityId::monomial_to_modified_hermite, n, lhs, modified);
  }

  TransformIdentityResult result{IdentityId::monomial_to_modified_hermite, n, Mode::numeric};
  result.tolerance = options.tolerance;
  const auto rule = build_rule(default_rule_order(n));
  for (const double x : options.x_grid) {
    const double got = gauss_numeric([n](double y) { return ipow(y, n); }, u, x, rule);
    const double expected = exact_value(modified, x);
    result.max_error =
        std::max(result.max_error, std::abs(got - expected) / std::max(1.0, std::abs(expected)));
    if (std::isnan(got)) result.max_error = got;
  }
  finish(result);
  return result;
}

TransformIdentityResult verify_operator_vs_integral(const Polynomial<Rational>& p, const Rational& c,
                                                    std::span<const double> x_grid, double tolerance) {
  if (sgn(c) <= 0) {
    throw DomainError(
        "operator-vs-integral check needs c > 0; the c < 0 side (c = -1/4) is covered by "
        "hermite_integral_rep");
  }
  const auto degree = static_cast<unsigned>(std::max(p.degree(), 0));
  TransformIdentityResult result{IdentityId::operator_vs_integral, degree, Mode::numeric};
  result.tolerance = tolerance;

  const auto symbolic = apply_heat_operator(HeatOperator(c), p);
  const auto as_float = to_float(p);
  const auto u = GaussParameter<Rational>::from_heat(HeatOperator(c));
  const auto rule = build_rule(default_rule_order(degree));
  for (const double x : x_grid) {
    const double expected = exact_value(symbolic, x);
    const double got = gauss_numeric([&](double y) { return evaluate(as_float, y); }, u, x, rule);
    result.max_error =
        std::max(result.max_error, std::abs(got - expected) / std::max(1.0, std::abs(expected)));
    if (std::isnan(got)) result.max_error = got;
  }
  finish(result);
  return result;
}

}  // namespace hermitex
