// Minor-size reduction through the localization at X_1n: the determinant
// of X', minors of X' against minors of X, the rewriting of arbitrary
// minors into minors through the corner, and the relations between minors
// of X' and the generators of row 1 and column n.

#include "exponent_laws.hpp"
#include "exponent_table.hpp"
#include "fit.hpp"
#include "suite_support.hpp"

#include <map>

namespace qmv::detail {

namespace {

IndexSet span(int lo, int hi) {
  IndexSet out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

class Minors {
 public:
  explicit Minors(Shape shape) : shape_(shape) {}
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

// [I|J] = sum_k [S_k] * cofactor_k with every S_k through row 1 and column n.
using Combination = std::vector<std::pair<MinorSpec, Localized>>;

Combination rewrite(const Shape& shape, const MinorSpec& spec) {
  const int n = shape.n;
  const int t = spec.size();
  const Localized inv = Localized::inverse_corner_power(shape, 1);
  auto X = [&](int i, int j) { return Localized(gen(shape, i, j)); };
  const bool has_first = contains(spec.rows, 1);
  const bool has_last = contains(spec.cols, n);
  Combination out;
  if (has_first && has_last) {
    out.emplace_back(spec, Localized(Element(shape, Laurent(1))));
  } else if (has_first) {
    const IndexSet wide = with_index(spec.cols, n);
    const int e_last = laws::right_row_expansion(1, position_of(wide, n));
    for (int c : spec.cols) {
      const int e = laws::right_row_expansion(1, position_of(wide, c));
      out.emplace_back(MinorSpec{spec.rows, without_index(wide, c)}, -mq_pow(e - e_last) * (X(1, c) * inv));
    }
  } else if (has_last) {
    const IndexSet tall = with_index(spec.rows, 1);
    const int e_first = laws::right_col_expansion(1, t);
    for (int r : spec.rows) {
      const int e = laws::right_col_expansion(position_of(tall, r), t);
      out.emplace_back(MinorSpec{without_index(tall, r), spec.cols}, -mq_pow(e - e_first) * (X(r, n) * inv));
    }
  } else {
    // Expand [I+1 | J+n] along row 1 and solve for the term [I|J] X_1n; the
    // other terms miss row 1 but contain column n.
    const IndexSet tall = with_index(spec.rows, 1);
    const IndexSet wide = with_index(spec.cols, n);
    const int a_last = laws::right_row_expansion(1, position_of(wide, n));
    out.emplace_back(MinorSpec{tall, wide}, mq_pow(-a_last) * inv);
    for (int c : spec.cols) {
      const int a = laws::right_row_expansion(1, position_of(wide, c));
      const Localized tail = -mq_pow(a - a_last) * (X(1, c) * inv);
      for (auto& [s, cof] : rewrite(shape, {spec.rows, without_index(wide, c)})) out.emplace_back(s, cof * tail);
    }
  }
  return out;
}

std::string combination_text(const Combination& combo) {
  std::string out;
  for (const auto& [s, cof] : combo) out += (out.empty() ? "" : " + ") + minor_label("M", s) + "*(" + to_string(cof) + ")";
  return out;
}

void regression(Checker& ck, const std::vector<std::string>& families) {
  for (const auto& family : families)
    ck.no_problems("frozen exponents v" + std::to_string(kExponentTableVersion) + " reproduce a fresh " + family +
                       " fit",
                   fit_regression(family));
}

}  // namespace

void suite_thm21(Checker& ck, const Shape& shape, const SuiteParams&) {
  const int n = shape.n;
  if (n < 2) throw UnsupportedError("suite thm21 needs n >= 2");
  const Localized corner(gen(shape, 1, n));
  const MinorSpec all{span(2, n), span(1, n - 1)};
  const Localized det_prime = x_prime_minor(shape, all);
  const Localized scaled(mq_pow(1 - n) * qdet_perm(shape));
  const std::string det_label = minor_label("Mp", all);
  const std::string rhs = "(-q)^" + std::to_string(1 - n) + "*Dq@" + std::to_string(n);
  ck.same(det_label + "*X[1," + std::to_string(n) + "] = " + rhs, det_prime * corner, scaled);
  ck.same("X[1," + std::to_string(n) + "]*" + det_label + " = " + rhs, corner * det_prime, scaled);
  ck.same(det_label + " by permutation sum = by reduction", det_prime, x_prime_minor_via_reduction(shape, all));

  if (n >= 3) {
    Localized expansion(shape);
    for (int j = 1; j < n; ++j) {
      const MinorSpec rest{span(3, n), without_index(span(1, n - 1), j)};
      expansion += mq_pow(laws::row_laplace(1, j)) * (x_prime(shape, 2, j) * x_prime_minor(shape, rest));
    }
    ck.same(det_label + " = sum_j (-q)^(j-1)*Xp[2,j]*A'(2j)", det_prime, expansion);
  }
  Element alien(shape);
  for (int j = 1; j <= n; ++j)
    alien += mq_pow(laws::row_laplace(2, j)) * multiply(gen(shape, 1, j), complement_minor(shape, 2, j));
  ck.same("sum_j (-q)^(j-2)*X[1,j]*A(2j) = 0", alien, Element(shape));
}

void suite_cor22(Checker& ck, const Shape& shape, const SuiteParams& params) {
  const int m = shape.m, n = shape.n;
  if (std::min(m, n) < 2) return;
  Minors minors(shape);
  const Localized inv = Localized::inverse_corner_power(shape, 1);
  for (int p : sizes_for(params, 2, std::min(m, n), "cor22")) {
    for (const auto& rest_rows : subsets(2, m, p - 1))
      for (const auto& rest_cols : subsets(1, n - 1, p - 1)) {
        const MinorSpec full{with_index(rest_rows, 1), with_index(rest_cols, n)};
        const MinorSpec reduced{rest_rows, rest_cols};
        const Localized& lhs = minors.primed(reduced);
        const Localized plain(mq_pow(1 - p) * minors.plain(full));
        const std::string head = minor_label("Mp", reduced) + " = (-q)^" + std::to_string(1 - p) + "*";
        ck.same(head + minor_label("M", full) + "*inv1n", lhs, plain * inv);
        ck.same(head + "inv1n*" + minor_label("M", full), lhs, inv * plain);
      }
  }
}

void suite_lemma23(Checker& ck, const Shape& shape, const SuiteParams& params) {
  const int m = shape.m, n = shape.n;
  Minors minors(shape);
  const Localized corner(gen(shape, 1, n));
  for (int t : sizes_for(params, 1, std::min(m, n), "lemma23")) {
    const std::string ts = "t=" + std::to_string(t) + " ";
    for (const char* family : {"lemma23-case1", "lemma23-case2", "lemma23-eq1", "lemma23-eq2"}) {
      std::vector<ExpansionInstance> instances;
      try {
        instances = expansion_instances(family, shape, t);
      } catch (const UnsupportedError&) {
        continue;
      }
      for (const auto& inst : instances) {
        const Localized residual = law_residual(inst);
        ck.expect(ts + family + " " + inst.label, residual.is_zero(), "residual " + to_string(residual));
      }
    }

    for (const auto& spec : all_minors(shape, t)) {
      const Combination combo = rewrite(shape, spec);
      Localized total(shape);
      bool through_corner = true;
      for (const auto& [s, cof] : combo) {
        through_corner = through_corner && contains(s.rows, 1) && contains(s.cols, n);
        total += Localized(minors.plain(s)) * cof;
      }
      const Localized diff = total - Localized(minors.plain(spec));
      ck.expect(ts + minor_label("M", spec) + " = " + combination_text(combo), through_corner && diff.is_zero(),
                through_corner ? "lhs - rhs = " + to_string(diff) : "a term misses row 1 or column n");
    }

    if (t < 2) continue;
    for (const auto& rest_rows : subsets(2, m, t - 1))
      for (const auto& rest_cols : subsets(1, n - 1, t - 1)) {
        const MinorSpec full{with_index(rest_rows, 1), with_index(rest_cols, n)};
        const MinorSpec reduced{rest_rows, rest_cols};
        const std::string k = std::to_string(t - 1);
        ck.same(ts + minor_label("M", full) + " = (-q)^" + k + "*" + minor_label("Mp", reduced) + "*X[1," +
                    std::to_string(n) + "]",
                Localized(minors.plain(full)), mq_pow(t - 1) * (minors.primed(reduced) * corner));
        ck.same(ts + minor_label("Mp", reduced) + " = (-q)^-" + k + "*" + minor_label("M", full) + "*inv1n",
                minors.primed(reduced),
                mq_pow(1 - t) * (Localized(minors.plain(full)) * Localized::inverse_corner_power(shape, 1)));
      }
  }
  regression(ck, {"lemma23-case1", "lemma23-case2", "lemma23-eq1", "lemma23-eq2"});
}

void suite_thm25(Checker& ck, const Shape& shape, const SuiteParams& params) {
  const int m = shape.m, n = shape.n;
  if (std::min(m, n) < 2) return;
  Minors minors(shape);
  const Laurent q = q_pow(1);
  const Laurent first_scale = q * (q - q_pow(-1));
  const Laurent last_scale = q_pow(-1) * (q_pow(-1) - q);
  auto X = [&](int i, int j) { return Localized(gen(shape, i, j)); };
  auto count_between = [](const IndexSet& set, int lo, int hi) {
    int count = 0;
    for (int v : set)
      if (v > lo && v < hi) ++count;
    return count;
  };
  for (int t : sizes_for(params, 2, std::min(m, n), "thm25")) {
    for (const auto& rows : subsets(2, m, t - 1))
      for (const auto& cols : subsets(1, n - 1, t - 1)) {
        const MinorSpec spec{rows, cols};
        const Localized& mp = minors.primed(spec);
        const std::string ml = minor_label("Mp", spec);
        ck.same(gen_label("X", 1, n) + "*" + ml + " = " + ml + "*" + gen_label("X", 1, n), X(1, n) * mp, mp * X(1, n));
        for (int l = 1; l < n; ++l) {
          const std::string xl = gen_label("X", 1, l);
          if (contains(cols, l)) {
            ck.same("1') " + xl + "*" + ml + " = q^-1*" + ml + "*" + xl, X(1, l) * mp, q_pow(-1) * (mp * X(1, l)));
            continue;
          }
          Localized correction(shape);
          for (int j : cols)
            if (j < l)
              correction += mq_pow(laws::thm25_first_row(count_between(cols, j, l))) *
                            (X(1, j) * minors.primed({rows, with_index(without_index(cols, j), l)}));
          ck.same("2') " + xl + "*" + ml + " - " + ml + "*" + xl + " = q*(q - q^-1)*sum_{j<l}", X(1, l) * mp - mp * X(1, l),
                  first_scale * correction);
        }
        for (int k = 2; k <= m; ++k) {
          const std::string xk = gen_label("X", k, n);
          if (contains(rows, k)) {
            ck.same("3') " + xk + "*" + ml + " = q*" + ml + "*" + xk, X(k, n) * mp, q * (mp * X(k, n)));
            continue;
          }
          Localized correction(shape);
          for (int j : rows)
            if (j > k)
              correction += mq_pow(laws::thm25_last_col(count_between(rows, k, j))) *
                            (X(j, n) * minors.primed({with_index(without_index(rows, j), k), cols}));
          ck.same("4') " + xk + "*" + ml + " - " + ml + "*" + xk + " = q^-1*(q^-1 - q)*sum_{j>k}",
                  X(k, n) * mp - mp * X(k, n), last_scale * correction);
        }
      }
  }
  regression(ck, {"thm25-2prime", "thm25-4prime"});
}

}  // namespace qmv::detail
