#pragma once

#include <cstdint>
#include <string>
#include <vector>

/// Property suites behind `holderdeg verify`. Each compares a fast evaluator with a
/// slower independent computation, or checks an identity the objects must satisfy.
namespace holderdeg::verify {

struct Check {
  std::string name;
  bool passed = false;
  double value = 0.0;      // the measured quantity (error, count, slope, ...)
  double threshold = 0.0;  // what it was compared against
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  double wall_time = 0.0;
  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 2024;
  /// Monte Carlo budget of the n = 2 Chern integral.
  long long chern_samples = 4'000'000;
  /// Truncation degree of the t-decay experiment.
  int homlem_L = 32;
};

/// chern, gamma, tracalc, russo, trace-formula, exterior, homlem.
std::vector<std::string> suite_names();

/// Throws ConfigurationError for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

SuiteResult verify_chern(const VerifyOptions& options = {});
SuiteResult verify_gamma(const VerifyOptions& options = {});
SuiteResult verify_tracalc(const VerifyOptions& options = {});
SuiteResult verify_russo(const VerifyOptions& options = {});
SuiteResult verify_trace_formula(const VerifyOptions& options = {});
SuiteResult verify_exterior(const VerifyOptions& options = {});
SuiteResult verify_homlem(const VerifyOptions& options = {});

}  // namespace holderdeg::verify
