#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ntc {

// One acceptance check. `details` is deterministic (counts and frozen
// values only); `elapsed_ms` is wall time for test logs and never enters a
// serialized report.
struct CheckResult {
  int number = 0;
  std::string id;
  bool pass = false;
  std::string details;
  double elapsed_ms = 0.0;
};

struct VerifyOptions {
  std::filesystem::path fixture_dir = "fixtures";
  long long sweep_max = 30;  // 2..100; the family sweeps run up to this bound
};

// Runs the twelve acceptance checks against the bundled fixture corpus.
// Never throws for a failing check (the failure lands in CheckResult);
// throws only for unusable options (e.g. missing fixture directory).
std::vector<CheckResult> run_acceptance_checks(const VerifyOptions& options);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace ntc
