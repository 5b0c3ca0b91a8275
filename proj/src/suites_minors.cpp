// Determinant and minor suites: centrality, semi-centrality, Laplace
// expansions and the frozen exponent laws behind them.

#include "exponent_table.hpp"
#include "suite_support.hpp"

namespace qmv::detail {

void suite_centrality(Checker& ck, const Shape& shape, const SuiteParams&) {
  const Element det = qdet_perm(shape);
  const std::string d = "Dq@" + std::to_string(shape.n);
  for (int i = 1; i <= shape.n; ++i)
    for (int j = 1; j <= shape.n; ++j)
      ck.same(d + "*" + gen_label("X", i, j) + " = " + gen_label("X", i, j) + "*" + d, multiply(det, gen(shape, i, j)),
              multiply(gen(shape, i, j), det));
}

void suite_semicentrality(Checker& ck, const Shape& shape, const SuiteParams& params) {
  for (int t : sizes_for(params, 1, std::min(shape.m, shape.n), "semicentrality"))
    for (const auto& spec : all_minors(shape, t)) {
      const Element mi = minor(shape, spec);
      for (int i : spec.rows)
        for (int j : spec.cols) {
          const Element x = gen(shape, i, j);
          ck.same(minor_label("M", spec) + "*" + gen_label("X", i, j) + " = " + gen_label("X", i, j) + "*" +
                      minor_label("M", spec),
                  multiply(mi, x), multiply(x, mi));
        }
    }
}

void suite_laplace(Checker& ck, const Shape& shape, const SuiteParams&) {
  const int n = shape.n;
  if (n < 2) throw UnsupportedError("suite laplace needs n >= 2");
  const Element det = qdet_perm(shape);
  const Element zero(shape);
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      ck.same("row i=" + std::to_string(i) + " k=" + std::to_string(k) + ": sum_j (-q)^(j-i)*X[k,j]*A(ij) = " +
                  (i == k ? "Dq@" + std::to_string(n) : "0"),
              laplace_expand_row(shape, i, k), i == k ? det : zero);
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l)
      ck.same("column j=" + std::to_string(j) + " l=" + std::to_string(l) + ": sum_i (-q)^e*A(ij)*X[i,l] = " +
                  (j == l ? "Dq@" + std::to_string(n) : "0"),
              laplace_expand_col(shape, j, l), j == l ? det : zero);

  // The frozen row table must carry the two instances quoted for the
  // expansion along row 1 and the alien relation of row 2 against row 1.
  for (const auto& [instance, offset] : {std::pair<const char*, int>{"i=1,k=1", 1}, {"i=2,k=1", 2}}) {
    std::vector<std::string> problems;
    const auto entries = frozen_entries("row-laplace", instance);
    if (entries.empty()) problems.push_back(std::string("no frozen entries for ") + instance);
    for (const auto* entry : entries) {
      const int j = std::stoi(std::string(entry->term).substr(2));
      if (entry->exponent != j - offset)
        problems.push_back(std::string(entry->term) + " has exponent " + std::to_string(entry->exponent));
    }
    ck.no_problems(std::string("frozen row-laplace ") + instance + " is (-q)^(j-" + std::to_string(offset) + ")",
                   problems);
  }
  for (const char* family : {"row-laplace", "col-laplace"})
    ck.no_problems("frozen exponents v" + std::to_string(kExponentTableVersion) + " reproduce a fresh " +
                       std::string(family) + " fit",
                   fit_regression(family));
}

}  // namespace qmv::detail
