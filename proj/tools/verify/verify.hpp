#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace conic::verify {

struct Options {
  std::uint64_t seed = 20240611;
  /// Replaces the q values of the dyadic checks (to exercise the resonance path).
  std::optional<double> q_override;
  /// Run the checks of a suite concurrently.
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string summary;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

struct SuiteReport {
  std::string suite;
  bool passed = false;
  std::vector<CheckResult> checks;  // ordered by name
};

/// symbolic, ube, expansion, dyadic, norms, schauder, all.
const std::vector<std::string>& suite_names();

/// ParameterError for an unknown suite name.
SuiteReport run_suite(const std::string& suite, const Options& options = {});

/// Acceptance criterion 1..10 alone.
CheckResult run_criterion(int criterion, const Options& options = {});

std::string to_json(const SuiteReport& report);

// Individual checks.
CheckResult check_poisson_identity(const Options& options);       // 1
CheckResult check_combinatorics(const Options& options);          // 2
CheckResult check_harmonic_truncation(const Options& options);    // 3
CheckResult check_expansion_extraction(const Options& options);   // 4
CheckResult check_dyadic_constructor(const Options& options);     // 5
CheckResult check_beta_one_oracles(const Options& options);       // 6
CheckResult check_scaling_law(const Options& options);            // 7
CheckResult check_norm_comparability(const Options& options);     // 8
CheckResult check_schauder(const Options& options);              // 9
CheckResult check_negative_controls(const Options& options);      // 10
CheckResult check_ube_cross_bound(const Options& options);
CheckResult check_ube_divergence(const Options& options);
CheckResult check_donaldson_divergence(const Options& options);
CheckResult check_resonance_rejection(const Options& options);

}  // namespace conic::verify
