#include "linsolve.hpp"

#include <map>
#include <stdexcept>

namespace qmv {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::unique: return "unique";
    case SolveStatus::none: return "none";
    case SolveStatus::underdetermined: return "underdetermined";
  }
  return "?";
}

SolveResult solve_linear(const LaurentMatrix& matrix, const std::vector<Laurent>& rhs, std::size_t unknowns) {
  const std::size_t rows = matrix.size();
  if (rhs.size() != rows) throw std::invalid_argument("solve_linear: rhs length mismatch");

  // Augmented matrix, reduced in place to fraction-free echelon form.
  LaurentMatrix m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (matrix[i].size() != unknowns) throw std::invalid_argument("solve_linear: ragged matrix");
    m[i] = matrix[i];
    m[i].push_back(rhs[i]);
  }

  std::vector<std::size_t> pivot_cols;
  Laurent previous(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j <= unknowns; ++j) {
        Laurent value = m[row][col] * m[i][j] - m[i][col] * m[row][j];
        auto quotient = value.exact_div(previous);
        if (!quotient) throw std::logic_error("Bareiss step produced an inexact division");
        m[i][j] = std::move(*quotient);
      }
      m[i][col] = Laurent{};
    }
    previous = m[row][col];
    pivot_cols.push_back(col);
    ++row;
  }

  SolveResult result;
  result.rank = static_cast<int>(pivot_cols.size());
  for (std::size_t i = row; i < rows; ++i) {
    if (!m[i][unknowns].is_zero()) {
      result.status = SolveStatus::none;
      return result;
    }
  }
  result.status = pivot_cols.size() == unknowns ? SolveStatus::unique : SolveStatus::underdetermined;
  result.solution.assign(unknowns, ScalarFraction());
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const std::size_t pc = pivot_cols[k];
    ScalarFraction acc(m[k][unknowns]);
    for (std::size_t j = pc + 1; j < unknowns; ++j)
      if (!m[k][j].is_zero() && !result.solution[j].is_zero()) acc = acc - ScalarFraction(m[k][j]) * result.solution[j];
    result.solution[pc] = acc / ScalarFraction(m[k][pc]);
  }
  return result;
}

SolveStatus solve_specialized(const LaurentMatrix& matrix, const std::vector<Laurent>& rhs, std::size_t unknowns,
                              const Rational& q0) {
  const std::size_t rows = matrix.size();
  std::vector<std::vector<Rational>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& v : matrix[i]) m[i].push_back(v.eval(q0));
    m[i].push_back(rhs[i].eval(q0));
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      const Rational factor = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= unknowns; ++j) m[i][j] -= factor * m[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (m[i][unknowns] != 0) return SolveStatus::none;
  return row == unknowns ? SolveStatus::unique : SolveStatus::underdetermined;
}

CoordinateSystem coordinates(const std::vector<Element>& columns, const Element& target) {
  std::map<Monomial, std::size_t> row_of;
  auto note = [&](const Element& e) {
    for (const auto& [mono, c] : e.terms()) row_of.try_emplace(mono, 0);
  };
  for (const auto& c : columns) note(c);
  note(target);
  std::size_t next = 0;
  for (auto& [mono, idx] : row_of) idx = next++;

  CoordinateSystem sys;
  sys.matrix.assign(row_of.size(), std::vector<Laurent>(columns.size()));
  sys.rhs.assign(row_of.size(), Laurent{});
  sys.unknowns = columns.size();
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].shape() != target.shape()) throw ShapeError("coordinates: shape mismatch");
    for (const auto& [mono, c] : columns[j].terms()) sys.matrix[row_of[mono]][j] = c;
  }
  for (const auto& [mono, c] : target.terms()) sys.rhs[row_of[mono]] = c;
  return sys;
}

CoordinateSystem coordinates(const std::vector<Localized>& columns, const Localized& target) {
  int k = target.denominator_power();
  for (const auto& c : columns) k = std::max(k, c.denominator_power());
  std::vector<Element> lifted;
  lifted.reserve(columns.size());
  for (const auto& c : columns) lifted.push_back(c.numerator_over(k));
  return coordinates(lifted, target.numerator_over(k));
}

SolveResult solve_combination(const std::vector<Element>& columns, const Element& target) {
  auto sys = coordinates(columns, target);
  return solve_linear(sys.matrix, sys.rhs, sys.unknowns);
}

SolveResult solve_combination(const std::vector<Localized>& columns, const Localized& target) {
  auto sys = coordinates(columns, target);
  return solve_linear(sys.matrix, sys.rhs, sys.unknowns);
}

}  // namespace qmv
