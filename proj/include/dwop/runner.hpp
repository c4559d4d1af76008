#ifndef DWOP_RUNNER_HPP
#define DWOP_RUNNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwop/types.hpp"

namespace dwop {

/// Names of the runnable suites, in execution order for "all".
const std::vector<std::string>& suite_names();

struct TrialConfig {
  std::string suite = "all";
  int dim_lo = 1;
  int dim_hi = 8;
  int trials = 1000;
  std::uint64_t seed = 0;
  TolerancePolicy tol;
  bool report_abstract_form = false;
  std::string out_path;  // report destination; empty = no file
  std::string dump_dir;  // failure-instance directory; empty = no dumps

  void validate() const;
};

struct SuiteResult {
  std::string suite;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::string verdicts;  // one char per trial: P, F, or S
  double worst_gap_min_eig = 0;        // most negative normalized gap seen
  double worst_identity_residual = 0;  // largest normalized identity residual
};

struct SuiteReport {
  TrialConfig config;
  std::vector<SuiteResult> suites;
  double wall_time_ms = 0;

  int total_failed() const;
};

/// Runs the configured suite deterministically. Failures are dumped to
/// config.dump_dir when set; the report is written to config.out_path when set.
SuiteReport run_suite(const TrialConfig& config);

/// Stable-ordered (sorted-key) JSON form of a report. wall_time_ms is the
/// only field that varies between identical runs.
nlohmann::json report_to_json(const SuiteReport& report);

void write_report(const SuiteReport& report, const std::string& path);

}  // namespace dwop

#endif  // DWOP_RUNNER_HPP
