#include "hermitex/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hermitex/error.hpp"
#include "hermitex/gauss_transform.hpp"
#include "hermitex/genfunc.hpp"
#include "hermitex/hermite.hpp"

namespace hermitex {
namespace {

constexpr double kEq1Tolerance = 1e-10;
constexpr double kEq3Tolerance = 1e-10;
constexpr double kIntegralRepTolerance = 1e-9;
constexpr double kIntegralRepResidue = 1e-10;
constexpr double kEgfTolerance = 1e-8;
constexpr unsigned kEgfOrder = 40;
constexpr std::array<double, 5> kEgfX{-2.0, -1.0, 0.0, 1.0, 2.0};
constexpr std::array<double, 5> kEgfT{-1.0, -0.5, 0.0, 0.5, 1.0};

constexpr std::string_view kQuadraturePolicy =
    "transforms: m = ceil((d+1)/2) + 2 nodes for integrand degree d; integral representation: m = n + 2";

SuiteRecord from_identity(Suite suite, const TransformIdentityResult& r, std::string detail = {}) {
  return {std::string(to_string(suite)), std::string(to_string(r.identity_id)), r.n, std::string(to_string(r.mode)),
          r.max_error, r.tolerance, r.passed, std::move(detail)};
}

void run_opdef(unsigned nmax, std::vector<SuiteRecord>& out) {
  for (unsigned n = 0; n <= nmax; ++n) {
    const bool equal = hermite_via_operator(HermiteIndex{n}) == hermite_recurrence(HermiteIndex{n});
    out.push_back({std::string(to_string(Suite::opdef)), "OPERATOR_DEFINITION", n, "EXACT", equal ? 0.0 : HUGE_VAL,
                   0.0, equal, "2^n W(-1/4) x^n vs three-term recurrence"});
  }
}

void run_eq1(unsigned nmax, double tol, std::span<const double> grid, std::vector<SuiteRecord>& out) {
  const std::array<Rational, 3> cs{Rational(1, 8), Rational(1, 4), Rational(1, 2)};
  for (const auto& c : cs) {
    for (unsigned d = 0; d <= nmax; ++d) {
      const auto r = verify_operator_vs_integral(Polynomial<Rational>::monomial(d), c, grid, tol);
      out.push_back(from_identity(Suite::eq1, r, "p = x^" + std::to_string(d) + ", c = " + c.get_str()));
    }
  }
}

template <class Verify>
void run_eq3(Suite suite, unsigned nmax, double tol, std::span<const double> grid, Verify verify,
             std::vector<SuiteRecord>& out) {
  NumericOptions options{{grid.begin(), grid.end()}, tol};
  for (unsigned n = 0; n <= nmax; ++n) {
    out.push_back(from_identity(suite, verify(HermiteIndex{n}, Mode::exact, options)));
    out.push_back(from_identity(suite, verify(HermiteIndex{n}, Mode::numeric, options)));
  }
}

void run_intrep(unsigned nmax, double tol, std::span<const double> grid, std::vector<SuiteRecord>& out) {
  for (unsigned n = 0; n <= nmax; ++n) {
    const HermiteIndex index{n};
    const auto exact = hermite_recurrence(index);
    const auto rule = build_rule(n + 2);
    double worst = 0.0;
    double worst_residue = 0.0;
    for (const double x : grid) {
      const Complex got = hermite_integral_rep_complex(index, x, rule);
      const double expected = to_double(evaluate(exact, from_double(x)));
      const double scale = std::max(1.0, std::abs(expected));
      worst = std::max(worst, std::abs(got.real() - expected) / scale);
      worst_residue = std::max(worst_residue, std::abs(got.imag()) / std::max(1.0, std::abs(got.real())));
      if (std::isnan(got.real()) || std::isnan(got.imag())) worst = std::nan("");
    }
    SuiteRecord record{std::string(to_string(Suite::intrep)), "INTEGRAL_REPRESENTATION", n, "NUMERIC", worst, tol, false, {}};
    const bool residue_ok = worst_residue <= kIntegralRepResidue;
    record.passed = worst <= tol && residue_ok;
    char buffer[96];
    std::snprintf(buffer, sizeof buffer, "imaginary residue %+.3e (limit %.0e)", worst_residue, kIntegralRepResidue);
    record.detail = buffer;
    out.push_back(std::move(record));
  }
}

void run_egf(double tol, std::vector<SuiteRecord>& out) {
  double worst_egf = 0.0;
  double worst_transformed = 0.0;
  for (const double x : kEgfX) {
    for (const double t : kEgfT) {
      const auto residual = egf_residual(SeriesTruncation(kEgfOrder, t, x));
      worst_egf = std::max(worst_egf, residual.egf);
      worst_transformed = std::max(worst_transformed, residual.transformed);
    }
  }
  const std::string detail = "max over x in {-2..2}, t in {-1..1}";
  out.push_back({std::string(to_string(Suite::egf)), "EGF_RESIDUAL", kEgfOrder, "NUMERIC", worst_egf, tol,
                 worst_egf <= tol, detail + ", closed form exp(2xt - t^2)"});
  out.push_back({std::string(to_string(Suite::egf)), "TRANSFORMED_EGF_RESIDUAL", kEgfOrder, "NUMERIC",
                 worst_transformed, tol, worst_transformed <= tol, detail + ", closed form exp(2xt)"});
}

void validate(const VerifyConfig& config) {
  const unsigned cap = order_cap();
  if (config.nmax > cap) {
    throw DomainError("nmax " + std::to_string(config.nmax) + " exceeds the order cap " + std::to_string(cap));
  }
  if (config.tol && !(std::isfinite(*config.tol) && *config.tol > 0.0)) {
    throw DomainError("tolerance must be a positive finite number");
  }
  for (const double x : config.x_grid) {
    if (!std::isfinite(x)) throw DomainError("x grid values must be finite");
  }
  if (config.suites.empty()) throw DomainError("no suites selected");
  const bool needs_egf = std::find(config.suites.begin(), config.suites.end(), Suite::egf) != config.suites.end();
  if (needs_egf && kEgfOrder > cap) {
    throw DomainError("generating-function suite needs order " + std::to_string(kEgfOrder) +
                      " but the order cap is " + std::to_string(cap));
  }
}

std::string format_float(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "+inf" : "-inf");
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%+.16e", v);
  return buffer;
}

void dump_into(const nlohmann::json& value, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(item, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = value.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buffer[40];
      std::snprintf(buffer, sizeof buffer, "%.17g", v);
      out += buffer;
      return;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::opdef:
      return "opdef";
    case Suite::eq1:
      return "eq1";
    case Suite::eq3a:
      return "eq3a";
    case Suite::eq3b:
      return "eq3b";
    case Suite::intrep:
      return "intrep";
    case Suite::egf:
      return "egf";
  }
  return "unknown";
}

std::vector<Suite> all_suites() {
  return {Suite::opdef, Suite::eq1, Suite::eq3a, Suite::eq3b, Suite::intrep, Suite::egf};
}

std::vector<Suite> parse_suites(std::string_view name) {
  if (name == "all") return all_suites();
  for (const Suite s : all_suites()) {
    if (to_string(s) == name) return {s};
  }
  throw DomainError("unknown suite '" + std::string(name) + "' (expected opdef, eq1, eq3a, eq3b, intrep, egf or all)");
}

VerificationReport run_suites(const VerifyConfig& config) {
  validate(config);

  VerificationReport report;
  report.tool_version = std::string(kToolVersion);
  report.nmax = config.nmax;
  report.tol = config.tol;
  report.x_grid = config.x_grid.empty() ? std::vector<double>(default_x_grid().begin(), default_x_grid().end())
                                        : config.x_grid;
  report.quadrature_policy = std::string(kQuadraturePolicy);

  const auto tol_or = [&](double fallback) { return config.tol.value_or(fallback); };
  for (const Suite suite : config.suites) {
    report.suites.emplace_back(to_string(suite));
    switch (suite) {
      case Suite::opdef:
        run_opdef(config.nmax, report.records);
        break;
      case Suite::eq1:
        run_eq1(config.nmax, tol_or(kEq1Tolerance), report.x_grid, report.records);
        break;
      case Suite::eq3a:
        run_eq3(suite, config.nmax, tol_or(kEq3Tolerance), report.x_grid, verify_hermite_to_monomial,
                report.records);
        break;
      case Suite::eq3b:
        run_eq3(suite, config.nmax, tol_or(kEq3Tolerance), report.x_grid, verify_monomial_to_modified_hermite,
                report.records);
        break;
      case Suite::intrep:
        run_intrep(config.nmax, tol_or(kIntegralRepTolerance), report.x_grid, report.records);
        break;
      case Suite::egf:
        run_egf(tol_or(kEgfTolerance), report.records);
        break;
    }
  }
  report.overall_pass = std::all_of(report.records.begin(), report.records.end(),
                                    [](const SuiteRecord& r) { return r.passed; });
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.records) {
    results.push_back({{"suite", r.suite},
                       {"identity_id", r.identity_id},
                       {"n", r.n},
                       {"mode", r.mode},
                       {"max_error", r.max_error},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"detail", r.detail}});
  }
  nlohmann::json config{{"nmax", report.nmax},
                        {"tol", report.tol ? nlohmann::json(*report.tol) : nlohmann::json(nullptr)},
                        {"x_grid", report.x_grid},
                        {"quadrature_policy", report.quadrature_policy},
                        {"suites", report.suites}};
  return {{"tool_version", report.tool_version},
          {"config", std::move(config)},
          {"results", std::move(results)},
          {"overall_pass", report.overall_pass}};
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "hermitex " << report.tool_version << " verification report\n";
  out << "nmax " << report.nmax << ", tol " << (report.tol ? format_float(*report.tol) : std::string("suite defaults"))
      << "\n";
  out << "quadrature: " << report.quadrature_policy << "\n\n";

  char line[256];
  std::snprintf(line, sizeof line, "%-7s %-29s %4s %-7s %-24s %-24s %s\n", "suite", "identity", "n", "mode",
                "max_error", "tolerance", "result");
  out << line;
  for (const auto& r : report.records) {
    std::snprintf(line, sizeof line, "%-7s %-29s %4u %-7s %-24s %-24s %s\n", r.suite.c_str(), r.identity_id.c_str(),
                  r.n, r.mode.c_str(), format_float(r.max_error).c_str(), format_float(r.tolerance).c_str(),
                  r.passed ? "PASS" : "FAIL");
    out << line;
  }
  out << "\noverall: " << (report.overall_pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string dump_json(const nlohmann::json& value, int indent) {
  std::string out;
  dump_into(value, indent, 0, out);
  return out;
}

}  // namespace hermitex
