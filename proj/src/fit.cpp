#include "fit.hpp"

#include "exponent_laws.hpp"
#include "minors.hpp"

#include <map>

namespace qmv {

namespace {

std::string set_label(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

int count_between(const IndexSet& set, int lo, int hi) {
  int count = 0;
  for (int v : set)
    if (v > lo && v < hi) ++count;
  return count;
}

class MinorCache {
 public:
  explicit MinorCache(Shape shape) : shape_(shape) {}
  const Element& plain(const MinorSpec& spec) {
    auto it = plain_.find(spec);
    if (it == plain_.end()) it = plain_.emplace(spec, minor(shape_, spec)).first;
    return it->second;
  }
  const Localized& primed(const MinorSpec& spec) {
    auto it = primed_.find(spec);
    if (it == primed_.end()) it = primed_.emplace(spec, x_prime_minor(shape_, spec)).first;
    return it->second;
  }

 private:
  Shape shape_;
  std::map<MinorSpec, Element> plain_;
  std::map<MinorSpec, Localized> primed_;
};

Localized loc(const Element& e) { return Localized(e); }

std::vector<ExpansionInstance> row_laplace_instances(const Shape& shape) {
  if (!shape.square()) throw ShapeError("row-laplace needs a square shape");
  const int n = shape.n;
  const Element det = qdet_perm(shape);
  std::vector<ExpansionInstance> out;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      ExpansionInstance inst{"i=" + std::to_string(i) + ",k=" + std::to_string(k), {}, Localized(shape)};
      for (int j = 1; j <= n; ++j)
        inst.terms.push_back({"j=" + std::to_string(j),
                              loc(multiply(gen(shape, k, j), complement_minor(shape, i, j))),
                              laws::row_laplace(i, j)});
      if (i == k) inst.target = loc(det);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<ExpansionInstance> col_laplace_instances(const Shape& shape) {
  if (!shape.square()) throw ShapeError("col-laplace needs a square shape");
  const int n = shape.n;
  const Element det = qdet_perm(shape);
  std::vector<ExpansionInstance> out;
  for (int j = 1; j <= n; ++j) {
    for (int l = 1; l <= n; ++l) {
      ExpansionInstance inst{"j=" + std::to_string(j) + ",l=" + std::to_string(l), {}, Localized(shape)};
      for (int i = 1; i <= n; ++i)
        inst.terms.push_back({"i=" + std::to_string(i),
                              loc(multiply(complement_minor(shape, i, j), gen(shape, i, l))),
                              laws::col_laplace(i, j)});
      if (j == l) inst.target = loc(det);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

// 1 in I, n not in J: sum_{c in J+n} (-q)^e [I | C \ c] X_1c = 0.
std::vector<ExpansionInstance> lemma23_case1(const Shape& shape, int t) {
  MinorCache minors(shape);
  std::vector<ExpansionInstance> out;
  for (const auto& rest : subsets(2, shape.m, t - 1)) {
    const IndexSet rows = with_index(rest, 1);
    for (const auto& cols : subsets(1, shape.n - 1, t)) {
      const IndexSet wide = with_index(cols, shape.n);
      ExpansionInstance inst{"I=" + set_label(rows) + ",J=" + set_label(cols), {}, Localized(shape)};
      for (int c : wide)
        inst.terms.push_back({"j=" + std::to_string(c),
                              loc(multiply(minors.plain({rows, without_index(wide, c)}), gen(shape, 1, c))),
                              laws::right_row_expansion(1, position_of(wide, c))});
      out.push_back(std::move(inst));
    }
  }
  return out;
}

// 1 not in I, n in J: sum_{r in I+1} (-q)^e [R \ r | J] X_rn = 0.
std::vector<ExpansionInstance> lemma23_case2(const Shape& shape, int t) {
  MinorCache minors(shape);
  std::vector<ExpansionInstance> out;
  for (const auto& rows : subsets(2, shape.m, t)) {
    const IndexSet tall = with_index(rows, 1);
    for (const auto& rest : subsets(1, shape.n - 1, t - 1)) {
      const IndexSet cols = with_index(rest, shape.n);
      ExpansionInstance inst{"I=" + set_label(rows) + ",J=" + set_label(cols), {}, Localized(shape)};
      for (int r : tall)
        inst.terms.push_back({"i=" + std::to_string(r),
                              loc(multiply(minors.plain({without_index(tall, r), cols}), gen(shape, r, shape.n))),
                              laws::right_col_expansion(position_of(tall, r), t)});
      out.push_back(std::move(inst));
    }
  }
  return out;
}

// 1 not in I, n not in J: expansions of [I+1 | J+n] along row 1 (eq-1) or
// along row max I (eq-2), generators on the right.
std::vector<ExpansionInstance> lemma23_eq(const Shape& shape, int t, bool last_row) {
  MinorCache minors(shape);
  std::vector<ExpansionInstance> out;
  for (const auto& rows : subsets(2, shape.m, t)) {
    const IndexSet tall = with_index(rows, 1);
    const int s = last_row ? rows.back() : 1;
    for (const auto& cols : subsets(1, shape.n - 1, t)) {
      const IndexSet wide = with_index(cols, shape.n);
      ExpansionInstance inst{"I=" + set_label(rows) + ",J=" + set_label(cols), {}, loc(minors.plain({tall, wide}))};
      for (int c : wide)
        inst.terms.push_back({"j=" + std::to_string(c),
                              loc(multiply(minors.plain({without_index(tall, s), without_index(wide, c)}), gen(shape, s, c))),
                              laws::right_row_expansion(position_of(tall, s), position_of(wide, c))});
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<ExpansionInstance> thm25_first_row(const Shape& shape, int t) {
  MinorCache minors(shape);
  const Laurent scale = Laurent::q_power(1) * (Laurent::q_power(1) - Laurent::q_power(-1));
  std::vector<ExpansionInstance> out;
  for (const auto& rows : subsets(2, shape.m, t - 1)) {
    for (const auto& cols : subsets(1, shape.n - 1, t - 1)) {
      const Localized& m = minors.primed({rows, cols});
      for (int l = 1; l <= shape.n - 1; ++l) {
        if (contains(cols, l) || cols.front() > l) continue;
        const Localized x(gen(shape, 1, l));
        ExpansionInstance inst{"I'=" + set_label(rows) + ",J'=" + set_label(cols) + ",l=" + std::to_string(l), {},
                               x * m - m * x};
        for (int j : cols) {
          if (j >= l) continue;
          const IndexSet swapped = with_index(without_index(cols, j), l);
          inst.terms.push_back({"j=" + std::to_string(j),
                                scale * (Localized(gen(shape, 1, j)) * minors.primed({rows, swapped})),
                                laws::thm25_first_row(count_between(cols, j, l))});
        }
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

std::vector<ExpansionInstance> thm25_last_col(const Shape& shape, int t) {
  MinorCache minors(shape);
  const Laurent scale = Laurent::q_power(-1) * (Laurent::q_power(-1) - Laurent::q_power(1));
  std::vector<ExpansionInstance> out;
  for (const auto& rows : subsets(2, shape.m, t - 1)) {
    for (const auto& cols : subsets(1, shape.n - 1, t - 1)) {
      const Localized& m = minors.primed({rows, cols});
      for (int k = 2; k <= shape.m; ++k) {
        if (contains(rows, k) || rows.back() < k) continue;
        const Localized x(gen(shape, k, shape.n));
        ExpansionInstance inst{"I'=" + set_label(rows) + ",J'=" + set_label(cols) + ",k=" + std::to_string(k), {},
                               x * m - m * x};
        for (int j : rows) {
          if (j <= k) continue;
          const IndexSet swapped = with_index(without_index(rows, j), k);
          inst.terms.push_back({"j=" + std::to_string(j),
                                scale * (Localized(gen(shape, j, shape.n)) * minors.primed({swapped, cols})),
                                laws::thm25_last_col(count_between(rows, k, j))});
        }
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

void require_minor_size(const std::string& family, const Shape& shape, int t, int lo, int row_slack, int col_slack) {
  if (t < lo || t + row_slack > shape.m || t + col_slack > shape.n)
    throw UnsupportedError(family + " has no instances for t=" + std::to_string(t) + " in " + shape.to_string());
}

}  // namespace

bool ExponentFit::matches_law() const {
  if (status != SolveStatus::unique || !residual_zero) return false;
  for (const auto& entry : table)
    if (!entry.exponent || *entry.exponent != entry.law_exponent) return false;
  return true;
}

const std::vector<std::string>& fit_families() {
  static const std::vector<std::string> names = {
      "row-laplace",   "col-laplace",   "lemma23-case1", "lemma23-case2",
      "lemma23-eq1",   "lemma23-eq2",   "thm25-2prime",  "thm25-4prime",
  };
  return names;
}

FitSize smallest_fit_size(const std::string& family) {
  if (family == "row-laplace" || family == "col-laplace") return {Shape(2, 2), 0};
  if (family.rfind("lemma23", 0) == 0 || family.rfind("thm25", 0) == 0) return {Shape(3, 3), 2};
  throw UnsupportedError("unknown exponent family '" + family + "'");
}

std::vector<ExpansionInstance> expansion_instances(const std::string& family, const Shape& shape, int t) {
  if (family == "row-laplace") return row_laplace_instances(shape);
  if (family == "col-laplace") return col_laplace_instances(shape);
  if (family == "lemma23-case1") {
    require_minor_size(family, shape, t, 1, 0, 1);
    return lemma23_case1(shape, t);
  }
  if (family == "lemma23-case2") {
    require_minor_size(family, shape, t, 1, 1, 0);
    return lemma23_case2(shape, t);
  }
  if (family == "lemma23-eq1" || family == "lemma23-eq2") {
    require_minor_size(family, shape, t, 1, 1, 1);
    return lemma23_eq(shape, t, family == "lemma23-eq2");
  }
  if (family == "thm25-2prime") {
    require_minor_size(family, shape, t, 2, 0, 0);
    return thm25_first_row(shape, t);
  }
  if (family == "thm25-4prime") {
    require_minor_size(family, shape, t, 2, 0, 0);
    return thm25_last_col(shape, t);
  }
  throw UnsupportedError("unknown exponent family '" + family + "'");
}

ExponentFit fit_instance(const std::string& family, const ExpansionInstance& instance) {
  ExponentFit fit;
  fit.family = family;
  fit.size = instance.label;
  const std::size_t count = instance.terms.size();
  if (count == 0) {
    fit.status = instance.target.is_zero() ? SolveStatus::unique : SolveStatus::none;
    fit.residual_zero = instance.target.is_zero();
    return fit;
  }

  std::vector<ScalarFraction> coeffs(count);
  const bool homogeneous = instance.target.is_zero();
  std::vector<Localized> columns;
  Localized target = instance.target;
  std::size_t first_unknown = 0;
  if (homogeneous) {
    coeffs[0] = Laurent::minus_q_power(instance.terms[0].law_exponent);
    target = -(coeffs[0].num() * instance.terms[0].value);
    first_unknown = 1;
  }
  for (std::size_t i = first_unknown; i < count; ++i) columns.push_back(instance.terms[i].value);
  const SolveResult solved = solve_combination(columns, target);
  fit.status = solved.status;
  if (solved.status != SolveStatus::none)
    for (std::size_t i = first_unknown; i < count; ++i) coeffs[i] = solved.solution[i - first_unknown];

  Localized residual = -instance.target;
  bool laurent = solved.status != SolveStatus::none;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& term = instance.terms[i];
    FittedTerm entry{instance.label, term.label, std::nullopt, term.law_exponent};
    if (solved.status != SolveStatus::none) entry.exponent = coeffs[i].as_minus_q_power();
    fit.table.push_back(entry);
    if (!laurent) continue;
    auto as_poly = coeffs[i].as_laurent();
    if (!as_poly) {
      laurent = false;
      continue;
    }
    residual += *as_poly * term.value;
  }
  fit.residual_zero = laurent && residual.is_zero();
  return fit;
}

ExponentFit fit_exponents(const std::string& family, const Shape& shape, int t) {
  ExponentFit fit;
  fit.family = family;
  fit.size = shape.to_string() + (t > 0 ? ",t=" + std::to_string(t) : "");
  fit.status = SolveStatus::unique;
  fit.residual_zero = true;
  for (const auto& instance : expansion_instances(family, shape, t)) {
    ExponentFit one = fit_instance(family, instance);
    if (one.status != SolveStatus::unique && fit.status == SolveStatus::unique) fit.status = one.status;
    if (one.status == SolveStatus::none) fit.status = SolveStatus::none;
    fit.residual_zero = fit.residual_zero && one.residual_zero;
    fit.table.insert(fit.table.end(), one.table.begin(), one.table.end());
  }
  return fit;
}

ExponentFit fit_exponents(const std::string& family) {
  const FitSize size = smallest_fit_size(family);
  return fit_exponents(family, size.shape, size.t);
}

Localized law_residual(const ExpansionInstance& instance) {
  Localized residual = -instance.target;
  for (const auto& term : instance.terms) residual += Laurent::minus_q_power(term.law_exponent) * term.value;
  return residual;
}

}  // namespace qmv
