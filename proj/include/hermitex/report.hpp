#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hermitex {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Suite { opdef, eq1, eq3a, eq3b, intrep, egf };

std::string_view to_string(Suite suite);
/// Accepts a suite name or "all". Throws DomainError for unknown names.
std::vector<Suite> parse_suites(std::string_view name);
std::vector<Suite> all_suites();

struct VerifyConfig {
  unsigned nmax = 30;
  /// Overrides every numeric tolerance when set.
  std::optional<double> tol;
  std::vector<double> x_grid;  ///< empty: default grid
  std::vector<Suite> suites = all_suites();
};

/// One checked identity instance.
struct SuiteRecord {
  std::string suite;
  std::string identity_id;
  unsigned n = 0;
  std::string mode;  ///< "EXACT" or "NUMERIC"
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string tool_version;
  unsigned nmax = 0;
  std::optional<double> tol;
  std::vector<double> x_grid;
  std::string quadrature_policy;
  std::vector<std::string> suites;
  std::vector<SuiteRecord> records;
  bool overall_pass = false;
};

/// Runs the selected suites. Throws DomainError for an invalid config before
/// computing anything.
VerificationReport run_suites(const VerifyConfig& config);

nlohmann::json to_json(const VerificationReport& report);
/// ASCII table, one row per record, errors in signed scientific notation.
std::string to_text(const VerificationReport& report);

/// JSON text with every float printed at 17 significant digits.
std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace hermitex
