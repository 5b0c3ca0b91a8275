#pragma once

// Per-suite verification reports and their text / JSON renderings.

#include <string>
#include <vector>

namespace qmv {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Canonical difference or other evidence; only set for failures.
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::string shape;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

enum class ReportFormat { text, json };

/// Timings are left out unless requested so that default output is
/// byte-identical across runs.
std::string render(const SuiteReport& report, ReportFormat format, bool timings = false);
std::string render(const std::vector<SuiteReport>& reports, ReportFormat format, bool timings = false);

}  // namespace qmv
