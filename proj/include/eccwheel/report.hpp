#pragma once

// Closed-form versus oracle verification for a single n, and sweeps over
// ranges of n.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eccwheel::report {

enum class Status { pass, fail, skip };

const char* status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::skip;
  std::string expected;
  std::string actual;
  std::string note;
  double wall_ms = 0.0;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;
  // Oracle-only values, filled when the closed forms do not apply (n = 4).
  std::vector<std::pair<std::string, std::string>> oracle_values;

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::fail) == 0; }
};

struct VerifyOptions {
  // Absolute tolerance for the floating-point spectral checks.
  double tol = 1e-8;
};

// Every name that can appear in a report, in report order.
const std::vector<std::string>& check_names();

// Requires n >= 4. For n = 4 every check is skipped and oracle values are
// reported instead.
VerificationReport verify(int n, const VerifyOptions& options = {});

struct SweepSummary {
  int n_min = 0;
  int n_max = 0;
  std::size_t reports = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double max_wall_ms = 0.0;
  // (n, check name) of the first failure in n order, if any.
  bool has_failure = false;
  int first_failure_n = 0;
  std::string first_failure_check;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  SweepSummary summary;
};

// Runs verify for every n in [n_min, n_max] on up to `jobs` threads; the
// reports come back ordered by n whatever the thread count.
SweepResult sweep(int n_min, int n_max, unsigned jobs, const VerifyOptions& options = {});

}  // namespace eccwheel::report
