#pragma once

// Exact linear solving over Q(q) by fraction-free (Bareiss) elimination on
// Laurent-polynomial matrices, plus a rational counterpart used to
// cross-check verdicts at specialized q.

#include "algebra.hpp"
#include "localize.hpp"
#include "scalar.hpp"

#include <vector>

namespace qmv {

enum class SolveStatus { unique, none, underdetermined };

const char* to_string(SolveStatus status);

struct SolveResult {
  SolveStatus status = SolveStatus::none;
  int rank = 0;
  /// A solution when one exists; free unknowns are set to zero.
  std::vector<ScalarFraction> solution;
};

using LaurentMatrix = std::vector<std::vector<Laurent>>;

/// Solves matrix * x = rhs. matrix is rows x unknowns.
SolveResult solve_linear(const LaurentMatrix& matrix, const std::vector<Laurent>& rhs, std::size_t unknowns);

/// Same system with q specialized to q0 and solved over Q.
SolveStatus solve_specialized(const LaurentMatrix& matrix, const std::vector<Laurent>& rhs, std::size_t unknowns,
                              const Rational& q0);

/// Coordinates of a family of elements and a target in the ordered basis:
/// one row per monomial in the union of their supports.
struct CoordinateSystem {
  LaurentMatrix matrix;
  std::vector<Laurent> rhs;
  std::size_t unknowns = 0;
};
CoordinateSystem coordinates(const std::vector<Element>& columns, const Element& target);
/// Localized version: all values are brought over a common X_1n power.
CoordinateSystem coordinates(const std::vector<Localized>& columns, const Localized& target);

/// Solves sum_i c_i columns[i] = target for c_i in Q(q).
SolveResult solve_combination(const std::vector<Element>& columns, const Element& target);
SolveResult solve_combination(const std::vector<Localized>& columns, const Localized& target);

}  // namespace qmv
