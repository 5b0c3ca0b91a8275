#include "membership.hpp"

#include "exponent_laws.hpp"
#include "minors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmv {

namespace {

struct Assembled {
  CoordinateSystem system;
  std::vector<std::size_t> slot_begin;
  std::vector<std::vector<Monomial>> bases;
};

Assembled assemble(const MembershipProblem& problem) {
  const auto target_degree = bidegree_of(problem.target);
  if (!problem.target.is_zero() && (!target_degree || *target_degree != problem.degree))
    throw std::invalid_argument("membership target is not homogeneous of bidegree " + problem.degree.to_string());
  Assembled out;
  std::vector<Element> columns;
  for (const auto& slot : problem.slots) {
    out.slot_begin.push_back(columns.size());
    out.bases.push_back(cofactor_basis(problem, slot));
    for (const auto& mono : out.bases.back()) {
      const Element u = Element::from_monomial(problem.shape, mono);
      columns.push_back(slot.unknown_on_right ? multiply(slot.fixed, u) : multiply(u, slot.fixed));
    }
  }
  out.slot_begin.push_back(columns.size());
  out.system = coordinates(columns, problem.target);
  return out;
}

}  // namespace

std::optional<Bidegree> cofactor_degree(const MembershipProblem& problem, const CofactorSlot& slot) {
  const auto fixed = bidegree_of(slot.fixed);
  if (!fixed) throw std::invalid_argument("cofactor slot '" + slot.name + "' has an inhomogeneous factor");
  if (fixed->rows.size() != problem.degree.rows.size() || fixed->cols.size() != problem.degree.cols.size())
    throw ShapeError("cofactor slot '" + slot.name + "' has the wrong shape");
  Bidegree rest = problem.degree;
  for (std::size_t i = 0; i < rest.rows.size(); ++i) rest.rows[i] -= fixed->rows[i];
  for (std::size_t j = 0; j < rest.cols.size(); ++j) rest.cols[j] -= fixed->cols[j];
  auto negative = [](int v) { return v < 0; };
  if (std::any_of(rest.rows.begin(), rest.rows.end(), negative) ||
      std::any_of(rest.cols.begin(), rest.cols.end(), negative))
    return std::nullopt;
  return rest;
}

std::vector<Monomial> cofactor_basis(const MembershipProblem& problem, const CofactorSlot& slot) {
  const auto degree = cofactor_degree(problem, slot);
  if (!degree) return {};
  std::vector<Monomial> basis;
  for (const auto& mono : component_basis(problem.shape, *degree)) {
    bool allowed = true;
    for (const auto& g : slot.excluded)
      if (mono.exponent(generator_index(problem.shape, g.row, g.col)) > 0) allowed = false;
    if (allowed) basis.push_back(mono);
  }
  return basis;
}

MembershipResult solve_membership(const MembershipProblem& problem) {
  const Assembled a = assemble(problem);
  const SolveResult solved = solve_linear(a.system.matrix, a.system.rhs, a.system.unknowns);
  MembershipResult result;
  result.status = solved.status;
  result.unknowns = static_cast<int>(a.system.unknowns);
  result.rank = solved.rank;
  if (!result.solvable()) return result;
  for (std::size_t s = 0; s < problem.slots.size(); ++s) {
    Element cofactor(problem.shape);
    bool laurent = true;
    std::string text;
    for (std::size_t k = a.slot_begin[s]; k < a.slot_begin[s + 1]; ++k) {
      const ScalarFraction& c = solved.solution[k];
      if (c.is_zero()) continue;
      const Monomial& mono = a.bases[s][k - a.slot_begin[s]];
      if (!text.empty()) text += " + ";
      text += "(" + c.to_string() + ")*" + monomial_to_string(problem.shape, mono);
      if (auto poly = c.as_laurent())
        cofactor.add_term(mono, *poly);
      else
        laurent = false;
    }
    result.cofactors.push_back(laurent ? std::optional<Element>(cofactor) : std::nullopt);
    result.cofactor_text.push_back(laurent ? to_string(cofactor) : text);
  }
  return result;
}

SolveStatus solve_membership_at(const MembershipProblem& problem, const Rational& q0) {
  const Assembled a = assemble(problem);
  return solve_specialized(a.system.matrix, a.system.rhs, a.system.unknowns, q0);
}

JordanIngredients jordan_ingredients(int n) {
  if (n < 3)
    throw UnsupportedError("the determinant obstruction needs n >= 3");
  const Shape shape(n, n);
  JordanIngredients parts{shape, qdet_perm(shape), complement_minor(shape, n, n), gen(shape, n, n), Element(shape)};
  for (int i = 1; i < n; ++i)
    parts.e += Laurent::minus_q_power(laws::col_laplace(i, n)) *
               multiply(complement_minor(shape, i, n), gen(shape, i, n));
  return parts;
}

MembershipProblem jordan_membership(const JordanIngredients& parts) {
  const int n = parts.shape.n;
  const std::vector<int> ones(static_cast<std::size_t>(n), 1);
  const std::vector<Generator> outside_t = {{n, n}};
  MembershipProblem problem{parts.shape, Bidegree{ones, ones}, parts.e, {}};
  problem.slots.push_back({"alpha", parts.d, true, outside_t});
  problem.slots.push_back({"beta", gen(parts.shape, 1, n), false, outside_t});
  return problem;
}

}  // namespace qmv
