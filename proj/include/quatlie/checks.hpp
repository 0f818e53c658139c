#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "quatlie/liecore.hpp"

namespace quatlie {

/// Configuration of a verification run. Defaults reproduce the standard
/// desk-scale certification: rank 2, 100 trials, seed 42, tolerance 1e-9.
struct RunConfig {
  std::vector<int> ranks = {2};     // values of n, each >= 2
  int trials = 100;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  std::vector<std::string> suites;  // empty = every suite, in catalog order
};

/// Outcome of one certified identity: the measured defect (or quantity), the
/// threshold it is compared against, and the direction of the comparison --
/// "le" for residual bounds, "ge" for lower bounds such as the detection
/// margin of a deliberately corrupted input.
struct CheckRecord {
  std::string suite;
  std::string name;
  std::string anchor;  // the identity being certified, in plain text
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double measured = 0.0;
  double threshold = 0.0;
  std::string comparison = "le";
  bool pass = false;
  double wall_ms = 0.0;  // shown in human reports only, never serialized
};

/// The six verification suites, in canonical execution order.
const std::vector<std::string>& suite_names();

/// Runs one suite at one rank with the configured trials/seed/tolerance.
/// Throws std::invalid_argument for an unknown suite name or a rank below 2.
std::vector<CheckRecord> run_suite(const std::string& suite, int n,
                                   const RunConfig& config);

/// Runs the configured suites at every configured rank, in catalog order.
std::vector<CheckRecord> run_checks(const RunConfig& config);

bool all_pass(const std::vector<CheckRecord>& records);

/// Aligned pass/fail table with per-check timings and a summary line.
void write_human_report(const std::vector<CheckRecord>& records, std::ostream& os);

/// One JSON object per line with a fixed key order; byte-identical across
/// runs that share a configuration and seed.
void write_machine_report(const std::vector<CheckRecord>& records, std::ostream& os);

}  // namespace quatlie
