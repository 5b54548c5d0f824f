#ifndef WICKSTAR_VERIFY_HPP
#define WICKSTAR_VERIFY_HPP

// The registered identity checks behind `wickstar verify`.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace wickstar {

enum class CheckStatus { pass, fail, flagged };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string reference;  // the identity being checked, in words
  CheckStatus status = CheckStatus::fail;
  double max_residual = 0.0;
  std::size_t samples = 0;
  long runtime_ms = 0;
  std::string detail;
};

struct CheckContext {
  std::uint64_t seed = 42;
  bool exact = true;             // rational arithmetic where the check has an exact form
  std::optional<double> tol;     // overrides the check's own threshold
  bool inject_printed = false;   // punctured product with the constant-weight variant

  double threshold(double fallback) const { return tol.value_or(fallback); }
};

struct CheckSpec {
  std::string name;
  std::function<CheckResult(const CheckContext&, std::mt19937_64&)> run;
};

/// Registered checks, in report order.
const std::vector<CheckSpec>& registered_checks();
std::vector<std::string> check_names();

/// Runs one check with its own generator, seeded from the context seed and the check name.
CheckResult run_check(const CheckSpec& spec, const CheckContext& ctx, bool timing = false);

struct VerifyOptions {
  std::vector<std::string> suites;  // empty: all
  CheckContext ctx;
  bool timing = false;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::string mode;
  std::string version;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Throws std::invalid_argument for unknown suite names.
SuiteReport run_verify(const VerifyOptions& opt);

/// Library version string written into report metadata.
const char* version_string();

}  // namespace wickstar

#endif  // WICKSTAR_VERIFY_HPP
