// One line per acceptance criterion. --expect-fail N keeps a known failure
// from failing the run; the line itself still says FAIL, and an expected
// failure that starts passing is reported as an error.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <vector>

#include <CLI11.hpp>

#include "verify.hpp"

int main(int argc, char** argv) {
  CLI::App app("acceptance criteria 1-10");
  std::vector<int> expect_fail;
  std::vector<int> only;
  bool serial = false;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail")->check(CLI::Range(1, 10));
  app.add_option("--only", only, "run just these criteria")->check(CLI::Range(1, 10));
  app.add_flag("--serial", serial, "run the checks inside a criterion one after another");
  CLI11_PARSE(app, argc, argv);

  conic::verify::Options options;
  options.parallel = !serial;

  int unexpected = 0;
  for (int c = 1; c <= 10; ++c) {
    if (!only.empty() && std::find(only.begin(), only.end(), c) == only.end()) continue;
    conic::verify::CheckResult r;
    try {
      r = conic::verify::run_criterion(c, options);
    } catch (const std::exception& e) {
      r.passed = false;
      r.summary = std::string("error: ") + e.what();
    }
    const bool expected = std::find(expect_fail.begin(), expect_fail.end(), c) != expect_fail.end();
    const char* note = "";
    if (r.passed && expected) {
      note = " (expected to fail)";
      ++unexpected;
    } else if (!r.passed && expected) {
      note = " (known)";
    } else if (!r.passed) {
      ++unexpected;
    }
    std::printf("[%s] criterion %d: %s [%.1fs]%s\n", r.passed ? "PASS" : "FAIL", c, r.summary.c_str(), r.seconds, note);
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
