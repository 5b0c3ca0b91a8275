// Relation suites: the defining relations, the appendix identities, and
// the relations of the matrix X' and of the generators around it.

#include "suite_support.hpp"

#include <functional>
#include <map>

namespace qmv::detail {

namespace {

using EntryFn = std::function<Localized(int, int)>;

// The four relation schemes among the entries E(i,j), i in rows, j in cols.
void quantum_matrix_relations(Checker& ck, const IndexSet& rows, const IndexSet& cols, const EntryFn& entry,
                              const std::string& symbol) {
  const Laurent q = q_pow(1);
  auto label = [&](int i, int j) { return gen_label(symbol, i, j); };
  for (int i : rows)
    for (int j : cols)
      for (int l : cols) {
        if (l <= j) continue;
        ck.same(label(i, j) + "*" + label(i, l) + " = q*" + label(i, l) + "*" + label(i, j),
                entry(i, j) * entry(i, l), q * (entry(i, l) * entry(i, j)));
      }
  for (int j : cols)
    for (int i : rows)
      for (int k : rows) {
        if (k <= i) continue;
        ck.same(label(i, j) + "*" + label(k, j) + " = q*" + label(k, j) + "*" + label(i, j),
                entry(i, j) * entry(k, j), q * (entry(k, j) * entry(i, j)));
      }
  for (int i : rows)
    for (int k : rows) {
      if (k <= i) continue;
      for (int j : cols)
        for (int l : cols) {
          if (l <= j) continue;
          const Localized a = entry(i, j), b = entry(i, l), c = entry(k, j), d = entry(k, l);
          ck.same(label(i, l) + "*" + label(k, j) + " = " + label(k, j) + "*" + label(i, l), b * c, c * b);
          ck.same(label(i, j) + "*" + label(k, l) + " - " + label(k, l) + "*" + label(i, j) + " = (q - q^-1)*" +
                      label(i, l) + "*" + label(k, j),
                  a * d - d * a, (q - q_pow(-1)) * (b * c));
        }
    }
}

IndexSet span(int lo, int hi) {
  IndexSet out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

class XPrimeCache {
 public:
  explicit XPrimeCache(Shape shape) : shape_(shape) {}
  const Localized& operator()(int i, int j) {
    auto it = cache_.find({i, j});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(i, j), x_prime(shape_, i, j)).first;
    return it->second;
  }

 private:
  Shape shape_;
  std::map<std::pair<int, int>, Localized> cache_;
};

}  // namespace

void suite_eq1_relations(Checker& ck, const Shape& shape, const SuiteParams&) {
  quantum_matrix_relations(ck, span(1, shape.m), span(1, shape.n),
                           [&](int i, int j) { return Localized(gen(shape, i, j)); }, "X");
}

void suite_appendix(Checker& ck, const Shape& shape, const SuiteParams&) {
  const Laurent q = q_pow(1);
  // 2x2 identity on every 2x2 submatrix.
  for (const auto& rows : subsets(1, shape.m, 2))
    for (const auto& cols : subsets(1, shape.n, 2)) {
      const Element a = gen(shape, rows[0], cols[0]), b = gen(shape, rows[0], cols[1]);
      const Element c = gen(shape, rows[1], cols[0]), d = gen(shape, rows[1], cols[1]);
      ck.same("2x2 " + minor_label("M", {rows, cols}) + ": ad - q^2*da = (1 - q^2)*(ad - q*bc)",
              a * d - q_pow(2) * (d * a), (Laurent(1) - q_pow(2)) * (a * d - q * (b * c)));
    }
  // 3x3 identities on every 3x3 submatrix, indices relabeled to 1..3.
  for (const auto& rows : subsets(1, shape.m, 3))
    for (const auto& cols : subsets(1, shape.n, 3)) {
      auto X = [&](int i, int j) { return gen(shape, rows[i - 1], cols[j - 1]); };
      // [i,1|j,l]: rows {1,i}, columns {j,l}.
      auto M = [&](int i, int j, int l) {
        return minor(shape, {{rows[0], rows[i - 1]}, {cols[j - 1], cols[l - 1]}});
      };
      const std::string where = "3x3 " + minor_label("M", {rows, cols}) + " ";
      for (int i = 2; i <= 3; ++i) {
        const std::string s = std::to_string(i);
        ck.same(where + "1.1 i=" + s, X(1, 1) * M(i, 1, 3), M(i, 1, 3) * X(1, 1));
        ck.same(where + "1.2 i=" + s, X(1, 1) * M(i, 2, 3), q * (M(i, 2, 3) * X(1, 1)));
        ck.same(where + "1.3 i=" + s, X(1, 2) * M(i, 1, 3) - q * (M(i, 1, 3) * X(1, 2)),
                (q_pow(-1) - q) * (X(1, 1) * M(i, 2, 3)));
        ck.same(where + "1.4 i=" + s, X(1, 2) * M(i, 2, 3), M(i, 2, 3) * X(1, 2));
      }
      for (int j = 1; j <= 2; ++j) {
        const std::string s = std::to_string(j);
        ck.same(where + "2.1 j=" + s, X(3, 3) * M(3, j, 3), M(3, j, 3) * X(3, 3));
        ck.same(where + "2.2 j=" + s, X(3, 3) * M(2, j, 3), q_pow(-1) * (M(2, j, 3) * X(3, 3)));
        ck.same(where + "2.3 j=" + s, X(2, 3) * M(3, j, 3) - q_pow(-1) * (M(3, j, 3) * X(2, 3)),
                (q - q_pow(-1)) * (X(3, 3) * M(2, j, 3)));
        ck.same(where + "2.4 j=" + s, X(2, 3) * M(2, j, 3), M(2, j, 3) * X(2, 3));
      }
    }
}

void suite_lemma111(Checker& ck, const Shape& shape, const SuiteParams&) {
  if (shape.m < 2 || shape.n < 2) return;
  XPrimeCache xp(shape);
  const Localized corner(gen(shape, 1, shape.n));
  for (int i = 2; i <= shape.m; ++i)
    for (int j = 1; j < shape.n; ++j) {
      ck.same(gen_label("Xp", i, j) + " = -q^-1*[{1," + std::to_string(i) + "}|{" + std::to_string(j) + "," +
                  std::to_string(shape.n) + "}]*inv1n",
              xp(i, j), x_prime_from_minor(shape, i, j));
      ck.same(gen_label("Xp", i, j) + " commutes with " + gen_label("X", 1, shape.n), xp(i, j) * corner,
              corner * xp(i, j));
    }
  quantum_matrix_relations(ck, span(2, shape.m), span(1, shape.n - 1), std::ref(xp), "Xp");
}

void suite_prop112(Checker& ck, const Shape& shape, const SuiteParams&) {
  if (shape.m < 2 || shape.n < 2) return;
  const int m = shape.m, n = shape.n;
  const Laurent q = q_pow(1);
  XPrimeCache xp(shape);
  auto X = [&](int i, int j) { return Localized(gen(shape, i, j)); };
  auto x = [](int i, int j) { return gen_label("X", i, j); };
  auto p = [](int i, int j) { return gen_label("Xp", i, j); };

  for (int j = 1; j < n; ++j)
    for (int i = 2; i <= m; ++i)
      ck.same("1) " + x(1, j) + "*" + x(i, n) + " - q^2*" + x(i, n) + "*" + x(1, j) + " = q*(q^2 - 1)*" + p(i, j) +
                  "*" + x(1, n),
              X(1, j) * X(i, n) - q_pow(2) * (X(i, n) * X(1, j)), (q * (q_pow(2) - Laurent(1))) * (xp(i, j) * X(1, n)));

  for (int j = 1; j < n; ++j)
    for (int k = 2; k <= m; ++k)
      for (int l = 1; l < n; ++l) {
        const std::string lhs = x(1, j) + "*" + p(k, l);
        if (l < j)
          ck.same("2.1) " + lhs + " - " + p(k, l) + "*" + x(1, j) + " = (q^-1 - q)*" + x(1, l) + "*" + p(k, j),
                  X(1, j) * xp(k, l) - xp(k, l) * X(1, j), (q_pow(-1) - q) * (X(1, l) * xp(k, j)));
        else if (l == j)
          ck.same("2.1) " + lhs + " = q^-1*" + p(k, l) + "*" + x(1, j), X(1, j) * xp(k, l),
                  q_pow(-1) * (xp(k, l) * X(1, j)));
        else
          ck.same("2.1) " + lhs + " = " + p(k, l) + "*" + x(1, j), X(1, j) * xp(k, l), xp(k, l) * X(1, j));
      }

  for (int i = 2; i <= m; ++i)
    for (int l = 1; l < n; ++l)
      for (int k = 2; k <= m; ++k) {
        const std::string lhs = x(i, n) + "*" + p(k, l);
        if (k < i)
          ck.same("2.2) " + lhs + " = " + p(k, l) + "*" + x(i, n), X(i, n) * xp(k, l), xp(k, l) * X(i, n));
        else if (k == i)
          ck.same("2.2) " + lhs + " = q*" + p(k, l) + "*" + x(i, n), X(i, n) * xp(k, l), q * (xp(k, l) * X(i, n)));
        else
          ck.same("2.2) " + lhs + " - " + p(k, l) + "*" + x(i, n) + " = (q - q^-1)*" + x(k, n) + "*" + p(i, l),
                  X(i, n) * xp(k, l) - xp(k, l) * X(i, n), (q - q_pow(-1)) * (X(k, n) * xp(i, l)));
      }

  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      ck.same("3) " + x(1, k) + "*" + x(1, l) + " = q*" + x(1, l) + "*" + x(1, k), X(1, k) * X(1, l),
              q * (X(1, l) * X(1, k)));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      ck.same("3) " + x(i, n) + "*" + x(j, n) + " = q*" + x(j, n) + "*" + x(i, n), X(i, n) * X(j, n),
              q * (X(j, n) * X(i, n)));
}

}  // namespace qmv::detail
