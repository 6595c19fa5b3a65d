// hermitex: command-line front end for the heat-operator / Gauss-transform library.

#include <CLI11.hpp>

#include <cmath>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "hermitex/any_polynomial.hpp"
#include "hermitex/error.hpp"
#include "hermitex/gauss_transform.hpp"
#include "hermitex/genfunc.hpp"
#include "hermitex/hermite.hpp"
#include "hermitex/poly_format.hpp"
#include "hermitex/quadrature.hpp"
#include "hermitex/report.hpp"

namespace {

using hermitex::AnyPolynomial;
using nlohmann::json;

json coefficient_strings(const AnyPolynomial& p) {
  json out = json::array();
  std::visit(
      [&](const auto& poly) {
        for (const auto& c : poly.coeffs()) out.push_back(hermitex::format_scalar(c));
      },
      p.storage());
  return out;
}

json polynomial_json(const AnyPolynomial& p) {
  return {{"ring", std::string(hermitex::to_string(p.ring()))},
          {"degree", p.degree()},
          {"coefficients", coefficient_strings(p)},
          {"text", hermitex::format_polynomial(p)}};
}

AnyPolynomial read_exact_polynomial(const std::string& text) {
  return hermitex::parse_polynomial(text, hermitex::detect_exact_ring(text));
}

void emit(bool as_json, const json& machine, const std::string& human) {
  if (as_json) {
    std::cout << hermitex::dump_json(machine) << "\n";
  } else {
    std::cout << human;
  }
}

// Exact value of p at the double x, in p's ring.
hermitex::Scalar exact_value_at(const AnyPolynomial& p, double x) {
  return hermitex::evaluate(p, hermitex::Scalar(hermitex::from_double(x)));
}

hermitex::Complex float_value(const hermitex::Scalar& s) {
  if (const auto* q = std::get_if<hermitex::Rational>(&s)) return {hermitex::to_double(*q), 0.0};
  return hermitex::to_complex(std::get<hermitex::ComplexRational>(s));
}

std::string format_float_value(const hermitex::Complex& z, bool real_ring) {
  return real_ring ? hermitex::format_scalar(z.real()) : hermitex::format_scalar(z);
}

// Quadrature side of the Gauss transform for a float-ring polynomial.
hermitex::Complex quadrature_value(const AnyPolynomial& p, const hermitex::GaussParameter<hermitex::Rational>& u,
                                   double x, const hermitex::GaussHermiteRule& rule) {
  return std::visit(
      [&](const auto& poly) -> hermitex::Complex {
        using T = typename std::decay_t<decltype(poly)>::value_type;
        if constexpr (hermitex::FloatRing<T>) {
          return hermitex::gauss_numeric([&](double y) { return hermitex::evaluate(poly, y); }, u, x, rule);
        } else {
          throw hermitex::NonCoercible("quadrature needs a float-ring polynomial");
        }
      },
      p.storage());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat operator W(c) = exp[c d^2/dx^2], Gauss transforms and Hermite polynomial identities"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable JSON output");

  auto* hermite = app.add_subcommand("hermite", "Print the coefficients of H_n");
  unsigned n = 0;
  hermite->add_option("--n", n, "Order")->required();
  hermite->fallthrough();

  auto* apply_w = app.add_subcommand("apply-w", "Apply W(c) to a polynomial");
  std::string c_text;
  std::string poly_text;
  apply_w->add_option("--c", c_text, "Rational parameter c")->required();
  apply_w->add_option("--poly", poly_text, "Ascending coefficients, e.g. \"-2, 0, 4\"")->required();
  apply_w->fallthrough();

  auto* gauss = app.add_subcommand("gauss", "Gauss transform G^u of a polynomial");
  std::string u_text;
  std::optional<double> x_point;
  bool numeric = false;
  gauss->add_option("--u", u_text, "Rational parameter u")->required();
  gauss->add_option("--poly", poly_text, "Ascending coefficients")->required();
  gauss->add_option("--x", x_point, "Evaluation point");
  gauss->add_flag("--numeric", numeric, "Also evaluate by Gauss-Hermite quadrature (needs --x and u > 0)");
  gauss->fallthrough();

  auto* quad = app.add_subcommand("quad", "Gauss-Hermite nodes and weights for exp(-t^2)");
  std::size_t m = 0;
  quad->add_option("--m", m, "Node count (1..500)")->required();
  quad->fallthrough();

  auto* genfunc = app.add_subcommand("genfunc", "Hermite generating-function partial sums");
  double x_value = 0.0;
  double t_value = 0.0;
  unsigned nmax_series = 40;
  genfunc->add_option("--x", x_value, "Evaluation point")->required();
  genfunc->add_option("--t", t_value, "Series variable")->required();
  genfunc->add_option("--nmax", nmax_series, "Highest retained order");
  genfunc->fallthrough();

  auto* verify = app.add_subcommand("verify", "Run identity suites; exit 0 iff all pass");
  std::string suite_name = "all";
  unsigned nmax = 30;
  std::optional<double> tol;
  verify->add_option("--suite", suite_name, "opdef, eq1, eq3a, eq3b, intrep, egf or all");
  verify->add_option("--nmax", nmax, "Highest order checked");
  verify->add_option("--tol", tol, "Override every numeric tolerance");
  verify->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*hermite) {
      const AnyPolynomial h = hermitex::hermite_recurrence(hermitex::HermiteIndex{n});
      json machine = polynomial_json(h);
      machine["n"] = n;
      emit(as_json, machine, hermitex::format_polynomial(h) + "\n");
    } else if (*apply_w) {
      const hermitex::Rational c = hermitex::parse_rational(c_text);
      const AnyPolynomial result = hermitex::apply_heat_operator(c, read_exact_polynomial(poly_text));
      json machine = polynomial_json(result);
      machine["c"] = c.get_str();
      emit(as_json, machine, hermitex::format_polynomial(result) + "\n");
    } else if (*gauss) {
      const hermitex::Rational u = hermitex::parse_rational(u_text);
      const AnyPolynomial p = read_exact_polynomial(poly_text);
      const hermitex::Rational c = u / 2;
      const AnyPolynomial transformed = hermitex::apply_heat_operator(c, p);
      json machine = polynomial_json(transformed);
      machine["u"] = u.get_str();
      std::string human = hermitex::format_polynomial(transformed) + "\n";
      if (numeric && !x_point) throw hermitex::DomainError("--numeric requires --x");
      if (x_point) {
        const bool real_ring = transformed.ring() == hermitex::CoefficientRing::rational;
        const hermitex::Scalar exact = exact_value_at(transformed, *x_point);
        const hermitex::Complex symbolic = float_value(exact);
        machine["x"] = *x_point;
        machine["value_exact"] = hermitex::format_scalar(exact);
        machine["value"] = format_float_value(symbolic, real_ring);
        human += "value at x = " + hermitex::format_scalar(*x_point) + ": " + hermitex::format_scalar(exact) +
                 " ~ " + format_float_value(symbolic, real_ring) + "\n";
        if (numeric) {
          const auto rule =
              hermitex::build_rule(hermitex::default_rule_order(static_cast<std::size_t>(std::max(p.degree(), 0))));
          const hermitex::Complex quadrature =
              quadrature_value(hermitex::to_float(p), hermitex::GaussParameter(u), *x_point, rule);
          const double gap = std::abs(quadrature - symbolic);
          machine["numeric_value"] = format_float_value(quadrature, real_ring);
          machine["numeric_abs_error"] = gap;
          machine["quadrature_nodes"] = rule.order();
          human += "quadrature (" + std::to_string(rule.order()) + " nodes): " +
                   format_float_value(quadrature, real_ring) + ", |difference| = " + hermitex::format_scalar(gap) +
                   "\n";
        }
      }
      emit(as_json, machine, human);
    } else if (*quad) {
      const auto rule = hermitex::build_rule(m);
      json machine = json::array();
      std::string human;
      for (std::size_t i = 0; i < rule.order(); ++i) {
        machine.push_back({{"node", rule.nodes()[i]}, {"weight", rule.weights()[i]}});
        human += hermitex::format_scalar(rule.nodes()[i]) + " " + hermitex::format_scalar(rule.weights()[i]) + "\n";
      }
      emit(as_json, machine, human);
    } else if (*genfunc) {
      const hermitex::SeriesTruncation trunc(nmax_series, t_value, x_value);
      const double egf = hermitex::egf_partial(trunc);
      const double transformed = hermitex::transformed_egf_partial(trunc);
      const double egf_closed = hermitex::hermite_egf().closed_form(x_value, t_value);
      const double transformed_closed = hermitex::transformed_hermite_egf().closed_form(x_value, t_value);
      const json machine{{"x", x_value},
                         {"t", t_value},
                         {"nmax", nmax_series},
                         {"egf_partial", egf},
                         {"egf_closed_form", egf_closed},
                         {"egf_residual", std::abs(egf - egf_closed)},
                         {"transformed_egf_partial", transformed},
                         {"transformed_egf_closed_form", transformed_closed},
                         {"transformed_egf_residual", std::abs(transformed - transformed_closed)}};
      std::string human;
      for (const char* key : {"egf_partial", "egf_closed_form", "egf_residual", "transformed_egf_partial",
                              "transformed_egf_closed_form", "transformed_egf_residual"}) {
        human += std::string(key) + " " + hermitex::format_scalar(machine[key].get<double>()) + "\n";
      }
      emit(as_json, machine, human);
    } else if (*verify) {
      hermitex::VerifyConfig config;
      config.nmax = nmax;
      config.tol = tol;
      config.suites = hermitex::parse_suites(suite_name);
      const auto report = hermitex::run_suites(config);
      emit(as_json, hermitex::to_json(report), hermitex::to_text(report));
      return report.overall_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "hermitex: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
