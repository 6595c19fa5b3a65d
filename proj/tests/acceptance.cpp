// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermitex/gauss_transform.hpp"
#include "hermitex/genfunc.hpp"
#include "hermitex/heat_operator.hpp"
#include "hermitex/hermite.hpp"
#include "hermitex/quadrature.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"
#include "support/schema_check.hpp"

using namespace hermitex;
using Q = Rational;
using PQ = Polynomial<Rational>;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool condition, const std::string& why) {
    if (!condition && ok) {
      ok = false;
      note = why;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Outcome operator_definition() {
  Outcome out;
  for (unsigned n = 0; n <= 50; ++n) {
    out.require(hermite_via_operator(HermiteIndex{n}) == hermite_recurrence(HermiteIndex{n}),
                "coefficients differ at n = " + std::to_string(n));
  }
  return out;
}

Outcome exact_transform_identities() {
  Outcome out;
  for (unsigned n = 0; n <= 30; ++n) {
    const auto a = verify_hermite_to_monomial(HermiteIndex{n}, Mode::exact);
    const auto b = verify_monomial_to_modified_hermite(HermiteIndex{n}, Mode::exact);
    out.require(a.passed && a.max_error == 0.0, "G^1/2[H_n] != (2x)^n at n = " + std::to_string(n));
    out.require(b.passed && b.max_error == 0.0, "G^1/2[y^n] != (2i)^-n H_n(ix) at n = " + std::to_string(n));
  }
  return out;
}

Outcome operator_vs_integral() {
  Outcome out;
  double worst = 0.0;
  for (const Q& c : {Q(1, 8), Q(1, 4), Q(1, 2)}) {
    for (unsigned d = 0; d <= 12; ++d) {
      const auto r = verify_operator_vs_integral(PQ::monomial(d), c, default_x_grid(), 1e-10);
      worst = std::max(worst, r.max_error);
      out.require(r.passed, "c = " + c.get_str() + ", degree " + std::to_string(d));
    }
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "max scaled error %.2e", worst);
  if (out.ok) out.note = buffer;
  return out;
}

Outcome integral_representation() {
  Outcome out;
  double worst = 0.0;
  double worst_residue = 0.0;
  for (unsigned n = 0; n <= 20; ++n) {
    const auto h = hermite_recurrence(HermiteIndex{n});
    const auto rule = build_rule(n + 2);
    for (const double x : default_x_grid()) {
      const double expected = to_double(evaluate(h, from_double(x)));
      const Complex got = hermite_integral_rep_complex(HermiteIndex{n}, x, rule);
      const double error = std::abs(got.real() - expected) / std::max(1.0, std::abs(expected));
      const double residue = std::abs(got.imag()) / std::max(1.0, std::abs(got.real()));
      worst = std::max(worst, error);
      worst_residue = std::max(worst_residue, residue);
      out.require(error <= 1e-9, "n = " + std::to_string(n) + ", x = " + std::to_string(x));
      out.require(residue <= 1e-10, "imaginary residue at n = " + std::to_string(n));
    }
  }
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "max relative error %.2e, max residue %.2e", worst, worst_residue);
  if (out.ok) out.note = buffer;
  return out;
}

Outcome quadrature_self_validation() {
  Outcome out;
  for (const std::size_t m : {2, 5, 10, 20, 40}) {
    const auto rule = build_rule(m);
    const auto t = rule.nodes();
    const auto w = rule.weights();
    for (std::size_t i = 0; i < m; ++i) {
      out.require(w[i] > 0.0, "non-positive weight, m = " + std::to_string(m));
      out.require(std::abs(t[i] + t[m - 1 - i]) <= 1e-12, "asymmetric nodes, m = " + std::to_string(m));
    }
    for (unsigned j = 0; j <= 2 * m - 1; ++j) {
      const double got = integrate([j](double x) { return std::pow(x, j); }, rule);
      const double closed = testing::gaussian_moment(j);
      out.require(std::abs(got - closed) <= 1e-11 * std::max(1.0, closed),
                  "moment " + std::to_string(j) + ", m = " + std::to_string(m));
    }
  }
  return out;
}

Outcome semigroup_and_inversion() {
  Outcome out;
  testing::RandomPolynomials gen(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen.polynomial(30);
    const HeatOperator<Rational> a(gen.rational());
    const HeatOperator<Rational> b(gen.rational());
    out.require(apply_heat_operator(compose(a, b), p) == apply_heat_operator(a, apply_heat_operator(b, p)),
                "semigroup law, trial " + std::to_string(trial));
    out.require(apply_heat_operator(invert(a), apply_heat_operator(a, p)) == p,
                "inversion, trial " + std::to_string(trial));
  }
  return out;
}

Outcome generating_function_residuals() {
  Outcome out;
  double worst = 0.0;
  for (int i = -4; i <= 4; ++i) {
    for (int j = -4; j <= 4; ++j) {
      const double x = 0.5 * i;
      const double t = 0.25 * j;
      const auto r = egf_residual(SeriesTruncation(40, t, x));
      worst = std::max({worst, r.egf, r.transformed});
      out.require(r.egf <= 1e-8 && r.transformed <= 1e-8,
                  "x = " + std::to_string(x) + ", t = " + std::to_string(t));
    }
  }
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "max residual %.2e", worst);
  if (out.ok) out.note = buffer;
  return out;
}

Outcome cli_contract() {
  Outcome out;
  const auto schema = testing::load_report_schema();

  const auto pass = testing::run_cli("verify --suite all --nmax 30 --json");
  out.require(pass.exit_code == 0, "verify --nmax 30 exited " + std::to_string(pass.exit_code));
  try {
    const auto doc = nlohmann::json::parse(pass.out);
    const auto violation = testing::schema_violation(doc, schema);
    out.require(violation.empty(), "schema: " + violation);
    out.require(doc["overall_pass"] == true, "overall_pass false");
  } catch (const std::exception& e) {
    out.require(false, std::string("unparseable JSON: ") + e.what());
  }

  const auto strict = testing::run_cli("verify --suite all --nmax 30 --tol 1e-30 --json");
  out.require(strict.exit_code != 0, "impossible tolerance still exited 0");
  try {
    const auto doc = nlohmann::json::parse(strict.out);
    out.require(testing::schema_violation(doc, schema).empty(), "strict report violates schema");
    bool numeric_failed = false;
    for (const auto& r : doc["results"]) {
      if (r["mode"] == "EXACT") {
        out.require(r["passed"] == true, "exact record failed under tol 1e-30");
      } else if (r["passed"] == false) {
        numeric_failed = true;
        out.require(r["max_error"].is_number(), "failed record without max_error");
      }
    }
    out.require(numeric_failed, "no numeric record failed under tol 1e-30");
  } catch (const std::exception& e) {
    out.require(false, std::string("unparseable strict JSON: ") + e.what());
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "operator definition equals recurrence, n <= 50", 5.0, operator_definition},
      {"AC2", "exact transform identities, n <= 30", 5.0, exact_transform_identities},
      {"AC3", "W(c) p vs Gaussian-kernel quadrature, c in {1/8,1/4,1/2}, deg <= 12", 5.0, operator_vs_integral},
      {"AC4", "integral representation of H_n, n <= 20", 2.0, integral_representation},
      {"AC5", "Gauss-Hermite moments, symmetry, positivity", 2.0, quadrature_self_validation},
      {"AC6", "semigroup and inversion on 100 random polynomials", 5.0, semigroup_and_inversion},
      {"AC7", "generating-function residuals at N = 40", 2.0, generating_function_residuals},
      {"AC8", "CLI verify exit codes and report schema", 10.0, cli_contract},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome = {false, "runtime over budget"};
    }
    std::printf("[%s] %s %s (%.3f s / %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds, outcome.note.empty() ? "" : ": ", outcome.note.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
