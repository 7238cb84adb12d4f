#pragma once

// Self-contained verification suites: each suite recomputes a family of
// invariants from scratch and checks them against pinned data or closed
// forms. The CLI `verify` subcommand and the acceptance runner both drive
// these; nothing here depends on the test harness.

#include <string>
#include <vector>

namespace panhandle {

/// One verification check. `id` is stable across runs and formats;
/// `detail` carries the mismatch description on failure and a short
/// summary of what was covered on success.
struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// A named suite of checks. `criterion` numbers the suites 1..10 in their
/// canonical order; `seconds` is the wall time of the whole suite.
struct SuiteResult {
  std::string suite;
  int criterion = 0;
  std::string label;
  std::vector<CheckResult> checks;
  bool pass = true;
  double seconds = 0.0;
};

/// Suite names in canonical order.
std::vector<std::string> verify_suite_names();

/// Run one suite by name, or every suite for "all". Unknown names throw
/// Error. With parallel = true an "all" run fans the suites out across
/// threads; results always come back in canonical order.
std::vector<SuiteResult> run_verify_suites(const std::string& name,
                                           bool parallel = false);

/// The shipped CSV bytes of pinned coefficient table k (1..5). The tables
/// suite compares freshly computed cables against these byte-for-byte.
const std::string& pinned_table_csv(int k);

}  // namespace panhandle
