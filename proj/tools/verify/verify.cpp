#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <thread>

#include "conic/errors.hpp"

namespace conic::verify {

namespace {

using Check = std::function<CheckResult(const Options&)>;

struct NamedCheck {
  std::string name;
  Check run;
};

const std::map<int, NamedCheck>& criteria() {
  static const std::map<int, NamedCheck> table = {
      {1, {"c01-poisson-identity", check_poisson_identity}},
      {2, {"c02-combinatorics", check_combinatorics}},
      {3, {"c03-harmonic-truncation", check_harmonic_truncation}},
      {4, {"c04-expansion-extraction", check_expansion_extraction}},
      {5, {"c05-dyadic-constructor", check_dyadic_constructor}},
      {6, {"c06-beta-one-oracles", check_beta_one_oracles}},
      {7, {"c07-scaling-law", check_scaling_law}},
      {8, {"c08-norm-comparability", check_norm_comparability}},
      {9, {"c09-schauder", check_schauder}},
      {10, {"c10-negative-controls", check_negative_controls}},
  };
  return table;
}

std::vector<NamedCheck> suite_checks(const std::string& suite) {
  auto c = [](int i) { return criteria().at(i); };
  if (suite == "symbolic") return {c(1), c(2), c(3)};
  if (suite == "expansion") return {c(4)};
  if (suite == "dyadic") return {c(5), c(6), c(7)};
  if (suite == "ube") {
    return {{"ube-cross-bound", check_ube_cross_bound}, {"ube-xsin-divergence", check_ube_divergence}};
  }
  if (suite == "norms") {
    return {c(8), c(10)};
  }
  if (suite == "schauder") return {c(9)};
  if (suite == "all") {
    std::vector<NamedCheck> all;
    for (const auto& [i, check] : criteria()) all.push_back(check);
    return all;
  }
  throw ParameterError("unknown suite '" + suite + "'");
}

CheckResult timed(const NamedCheck& check, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = check.run(options);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.name = check.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symbolic", "ube", "expansion", "dyadic", "norms", "schauder", "all"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const Options& options) {
  const auto checks = suite_checks(suite);
  SuiteReport report;
  report.suite = suite;
  const bool concurrent = options.parallel && std::thread::hardware_concurrency() > 1 && checks.size() > 1;
  if (concurrent) {
    std::vector<std::future<CheckResult>> pending;
    for (const auto& check : checks) {
      pending.push_back(std::async(std::launch::async, [&check, &options] { return timed(check, options); }));
    }
    for (auto& p : pending) report.checks.push_back(p.get());
  } else {
    for (const auto& check : checks) report.checks.push_back(timed(check, options));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  report.passed = std::all_of(report.checks.begin(), report.checks.end(), [](const CheckResult& r) { return r.passed; });
  return report;
}

CheckResult run_criterion(int criterion, const Options& options) {
  const auto it = criteria().find(criterion);
  if (it == criteria().end()) throw ParameterError("criteria are numbered 1..10");
  return timed(it->second, options);
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["seconds"] = c.seconds;
    item["summary"] = c.summary;
    item["details"] = c.details;
    checks.push_back(std::move(item));
  }
  return j.dump(2);
}

}  // namespace conic::verify
