#pragma once

// Graded membership problems: is a homogeneous target a combination
// sum_s fixed_s * u_s (or u_s * fixed_s) with unknown cofactors u_s taken
// from the matching graded component, possibly avoiding some generators?
// Also the ingredients c = d x + e of the determinant obstruction.

#include "algebra.hpp"
#include "linsolve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmv {

struct CofactorSlot {
  std::string name;
  Element fixed;
  /// fixed * u when true, u * fixed otherwise.
  bool unknown_on_right = true;
  /// Generators the cofactor u may not contain.
  std::vector<Generator> excluded;
};

struct MembershipProblem {
  Shape shape;
  Bidegree degree;
  Element target;
  std::vector<CofactorSlot> slots;
};

/// Bidegree left for the cofactor of a slot, or nullopt when negative
/// somewhere (the slot then contributes nothing).
std::optional<Bidegree> cofactor_degree(const MembershipProblem& problem, const CofactorSlot& slot);
/// Monomials the cofactor of a slot ranges over.
std::vector<Monomial> cofactor_basis(const MembershipProblem& problem, const CofactorSlot& slot);

struct MembershipResult {
  SolveStatus status = SolveStatus::none;
  int unknowns = 0;
  int rank = 0;
  /// Per slot, when a solution exists: the cofactor if its coefficients
  /// are Laurent polynomials, and its text in any case.
  std::vector<std::optional<Element>> cofactors;
  std::vector<std::string> cofactor_text;

  bool solvable() const { return status != SolveStatus::none; }
};

/// Throws std::invalid_argument when the target or a fixed factor is not
/// homogeneous of a compatible bidegree.
MembershipResult solve_membership(const MembershipProblem& problem);
/// The same system solved over Q with q = q0.
SolveStatus solve_membership_at(const MembershipProblem& problem, const Rational& q0);

struct JordanIngredients {
  Shape shape;
  Element c;  // det_q
  Element d;  // A(nn)
  Element x;  // X_nn
  Element e;  // first n-1 summands of the column-n expansion of det_q
};

/// Throws UnsupportedError for n < 3 (the obstruction does not exist for
/// n = 2) and ShapeError beyond the supported size.
JordanIngredients jordan_ingredients(int n);

/// e in d*alpha + beta*X_1n with alpha, beta avoiding X_nn, in the
/// all-ones component.
MembershipProblem jordan_membership(const JordanIngredients& parts);

}  // namespace qmv
