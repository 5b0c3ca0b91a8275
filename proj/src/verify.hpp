#pragma once

// Named verification suites over O_q(M_{m,n}) and its localization.

#include "algebra.hpp"
#include "report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qmv {

struct SuiteParams {
  std::optional<int> m;
  std::optional<int> n;
  /// Minor size; suites that take one run every admissible size when unset.
  std::optional<int> t;
  std::uint64_t seed = 1;
};

/// Registered suite names, in catalog order.
const std::vector<std::string>& suite_names();

/// Shape a suite runs on: a missing dimension copies the other one, and
/// both default to 3. Throws ShapeError when a square suite gets m != n.
Shape suite_shape(const std::string& name, const SuiteParams& params);

/// Throws UnsupportedError for unknown suites or parameters a suite cannot
/// use (for instance t out of range).
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

}  // namespace qmv
