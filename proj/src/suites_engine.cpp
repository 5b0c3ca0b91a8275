// Engine health and grading suites, plus the determinant obstruction.

#include "membership.hpp"
#include "suite_support.hpp"

#include <numeric>

namespace qmv::detail {

namespace {

using Poly = std::map<std::vector<int>, Rational>;

Poly commutative_product(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      std::vector<int> key(ka.size());
      for (std::size_t i = 0; i < ka.size(); ++i) key[i] = ka[i] + kb[i];
      out[key] += va * vb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Leibniz formula over commuting variables.
Poly commutative_determinant(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Poly out;
  do {
    std::vector<int> key(static_cast<std::size_t>(n * n), 0);
    for (int r = 0; r < n; ++r) key[static_cast<std::size_t>(r * n + perm[static_cast<std::size_t>(r)])] = 1;
    out[key] += inversion_count(perm) % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Bidegree add(Bidegree a, const Bidegree& b) {
  for (std::size_t i = 0; i < a.rows.size(); ++i) a.rows[i] += b.rows[i];
  for (std::size_t j = 0; j < a.cols.size(); ++j) a.cols[j] += b.cols[j];
  return a;
}

// A random element whose terms share one bidegree.
Element random_homogeneous(Rng& rng, const Shape& shape, int max_degree) {
  const Monomial seed = random_monomial(rng, shape, max_degree);
  const auto basis = component_basis(shape, monomial_bidegree(shape, seed));
  Element out(shape);
  for (const auto& mono : basis)
    if (rng.between(0, 2) == 0 || mono == seed) out.add_term(mono, random_scalar(rng));
  return out;
}

// One straightening step on generators h > g (row-major): the replacement
// words with their coefficients.
std::vector<std::pair<Laurent, std::vector<int>>> swap_rule(const Shape& shape, int h, int g) {
  const Generator a = generator_at(shape, h), b = generator_at(shape, g);
  if (a.row == b.row || a.col == b.col) return {{Laurent::q_power(-1), {g, h}}};
  if (a.col < b.col) return {{Laurent(1), {g, h}}};
  return {{Laurent(1), {g, h}},
          {-(Laurent::q_power(1) - Laurent::q_power(-1)),
           {generator_index(shape, b.row, a.col), generator_index(shape, a.row, b.col)}}};
}

Element word_product(const Shape& shape, const std::vector<int>& word) {
  Element out(shape, Laurent(1));
  for (int idx : word) {
    const Generator g = generator_at(shape, idx);
    out = multiply(out, gen(shape, g.row, g.col));
  }
  return out;
}

}  // namespace

void suite_pbw_count(Checker& ck, const Shape& shape, const SuiteParams&) {
  const long long mn = shape.generator_count();
  for (int d = 0; d <= 4; ++d) {
    long long binom = 1;
    for (int k = 1; k <= d; ++k) binom = binom * (mn + k - 1) / k;
    const long long count = monomial_count(shape, d);
    ck.expect("ordered monomials of degree " + std::to_string(d) + " = C(" + std::to_string(mn + d - 1) + "," +
                  std::to_string(d) + ")",
              count == binom, "counted " + std::to_string(count) + ", expected " + std::to_string(binom));
  }
}

void suite_grading(Checker& ck, const Shape& shape, const SuiteParams& params) {
  for (int t = 1; t <= std::min(shape.m, shape.n); ++t)
    for (const auto& spec : all_minors(shape, t)) {
      Bidegree want{std::vector<int>(static_cast<std::size_t>(shape.m), 0),
                    std::vector<int>(static_cast<std::size_t>(shape.n), 0)};
      for (int r : spec.rows) want.rows[static_cast<std::size_t>(r - 1)] = 1;
      for (int c : spec.cols) want.cols[static_cast<std::size_t>(c - 1)] = 1;
      const auto got = bidegree_of(minor(shape, spec));
      ck.expect("bidegree of " + minor_label("M", spec) + " is " + want.to_string(), got && *got == want,
                got ? "got " + got->to_string() : "inhomogeneous");
    }
  Rng rng(params.seed);
  int bad = 0;
  std::string witness;
  for (int trial = 0; trial < 100; ++trial) {
    const Element a = random_homogeneous(rng, shape, 3), b = random_homogeneous(rng, shape, 3);
    const auto da = bidegree_of(a), db = bidegree_of(b), dab = bidegree_of(a * b);
    if (!da || !db || !dab || *dab != add(*da, *db)) {
      if (bad++ == 0) witness = to_string(a) + " times " + to_string(b);
    }
  }
  ck.expect("products of 100 random homogeneous pairs are homogeneous of the summed bidegree", bad == 0, witness);
  if (shape.m >= 2 && shape.n >= 2)
    ck.expect("X[1,1] + X[2,2] is inhomogeneous", !bidegree_of(gen(shape, 1, 1) + gen(shape, 2, 2)));
  ck.expect("the zero element has no bidegree", !bidegree_of(Element(shape)));
}

void suite_jordan_obstruction(Checker& ck, const Shape& shape, const SuiteParams&) {
  const int n = shape.n;
  bool rejected = false;
  try {
    jordan_ingredients(2);
  } catch (const UnsupportedError&) {
    rejected = true;
  }
  ck.expect("n=2 is rejected", rejected, "jordan_ingredients(2) returned");

  const JordanIngredients parts = jordan_ingredients(n);
  const std::string ns = std::to_string(n);
  ck.same("c = d*x + e with c = Dq@" + ns + ", d = A(" + ns + "," + ns + ")@" + ns + ", x = X[" + ns + "," + ns + "]",
          parts.c, parts.d * parts.x + parts.e);
  ck.same("c = d*x + e after X[1," + ns + "] -> 0", kill_corner(parts.c),
          kill_corner(kill_corner(parts.d) * kill_corner(parts.x) + kill_corner(parts.e)));

  const std::vector<int> ones(static_cast<std::size_t>(n), 1);
  const Bidegree all_ones{ones, ones};
  for (int i = 1; i < n; ++i) {
    const auto summand_degree = bidegree_of(multiply(complement_minor(parts.shape, i, n), gen(parts.shape, i, n)));
    ck.expect("summand i=" + std::to_string(i) + " of e has bidegree " + all_ones.to_string(),
              summand_degree && *summand_degree == all_ones);
  }
  const auto c_degree = bidegree_of(parts.c);
  ck.expect("c has bidegree " + all_ones.to_string(), c_degree && *c_degree == all_ones);
  const std::vector<Generator> corner_nn = {{n, n}};
  ck.expect("d and e avoid X[" + ns + "," + ns + "]",
            kill_generators(parts.d, corner_nn) == parts.d && kill_generators(parts.e, corner_nn) == parts.e);

  const MembershipProblem problem = jordan_membership(parts);
  const CofactorSlot& alpha = problem.slots[0];
  CofactorSlot alpha_free = alpha;
  alpha_free.excluded.clear();
  const auto free_basis = cofactor_basis(problem, alpha_free);
  Monomial x_nn;
  x_nn.add(generator_index(parts.shape, n, n));
  ck.expect("without the restriction alpha ranges over X[" + ns + "," + ns + "] only",
            free_basis.size() == 1 && free_basis[0] == x_nn);
  ck.expect("inside the subalgebra avoiding X[" + ns + "," + ns + "] alpha is forced to 0",
            cofactor_basis(problem, alpha).empty());

  const MembershipResult verdict = solve_membership(problem);
  ck.expect("e = d*alpha + beta*X[1," + ns + "] has no solution (" + std::to_string(verdict.unknowns) + " unknowns)",
            verdict.status == SolveStatus::none,
            std::string("status ") + to_string(verdict.status) + ", cofactors " +
                (verdict.cofactor_text.empty() ? "" : verdict.cofactor_text[0] + " ; " + verdict.cofactor_text[1]));
  for (const Rational& q0 : {Rational(2), Rational(3), Rational(-1, 2), Rational(5, 3)}) {
    const SolveStatus at = solve_membership_at(problem, q0);
    ck.expect("same verdict at q = " + q0.str(), at == SolveStatus::none, std::string("status ") + to_string(at));
  }

  // Control: a target that is visibly beta*X_1n is found, with alpha = 0.
  const auto beta_basis = cofactor_basis(problem, problem.slots[1]);
  if (!beta_basis.empty()) {
    MembershipProblem control = problem;
    const Element beta0 = Element::from_monomial(parts.shape, beta_basis.front());
    control.target = multiply(beta0, gen(parts.shape, 1, n));
    const MembershipResult found = solve_membership(control);
    const bool ok = found.solvable() && found.cofactors[0] && found.cofactors[0]->is_zero() && found.cofactors[1] &&
                    *found.cofactors[1] == beta0;
    ck.expect("control target " + monomial_to_string(parts.shape, beta_basis.front()) + "*X[1," + ns +
                  "] is solved with alpha = 0",
              ok, std::string("status ") + to_string(found.status));
  }
}

void suite_engine(Checker& ck, const Shape& shape, const SuiteParams& params) {
  Rng rng(params.seed);
  auto report = [&](const std::string& name, int bad, const std::string& witness) { ck.expect(name, bad == 0, witness); };

  {
    int bad = 0;
    std::string witness;
    for (int trial = 0; trial < 1000; ++trial) {
      const Element a = random_element(rng, shape, 3), b = random_element(rng, shape, 3),
                    c = random_element(rng, shape, 3);
      if ((a * b) * c != a * (b * c) && bad++ == 0) witness = to_string(a) + " | " + to_string(b) + " | " + to_string(c);
    }
    report("associativity on 1000 random triples of degree <= 3", bad, witness);
  }
  {
    int bad = 0;
    std::string witness;
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial mono = random_monomial(rng, shape, 5);
      std::vector<int> word;
      for (int i = 0; i < shape.generator_count(); ++i)
        for (int e = 0; e < mono.exponent(i); ++e) word.push_back(i);
      const Element normal = Element::from_monomial(shape, mono, random_scalar(rng));
      const Element again = multiply(normal, Element(shape, Laurent(1)));
      if ((word_product(shape, word) != Element::from_monomial(shape, mono) || again != normal) && bad++ == 0)
        witness = monomial_to_string(shape, mono);
    }
    report("normal forms are fixed by re-normalization", bad, witness);
  }
  {
    int bad = 0;
    std::string witness;
    for (int trial = 0; trial < 300 && shape.generator_count() > 1; ++trial) {
      std::vector<int> word(static_cast<std::size_t>(rng.between(2, 6)));
      for (auto& w : word) w = rng.between(0, shape.generator_count() - 1);
      std::vector<std::size_t> descents;
      for (std::size_t p = 0; p + 1 < word.size(); ++p)
        if (word[p] > word[p + 1]) descents.push_back(p);
      if (descents.empty()) continue;
      const std::size_t p = descents[rng.next() % descents.size()];
      Element rewritten(shape);
      bool decreasing = true;
      const auto rule = swap_rule(shape, word[p], word[p + 1]);
      for (std::size_t r = 0; r < rule.size(); ++r) {
        std::vector<int> next = word;
        next[p] = rule[r].second[0];
        next[p + 1] = rule[r].second[1];
        // The swapped word loses exactly one inversion; every replacement
        // word is lexicographically smaller, which bounds the rewriting.
        if (r == 0) decreasing = decreasing && word_inversions(next) == word_inversions(word) - 1;
        decreasing = decreasing && next < word;
        rewritten += rule[r].first * word_product(shape, next);
      }
      if ((!decreasing || rewritten != word_product(shape, word)) && bad++ == 0) {
        for (int w : word) witness += monomial_to_string(shape, Monomial().with(w)) + " ";
      }
    }
    report("each rewrite step lowers the word order and preserves the product", bad, witness);
  }
  for (int n = 1; n <= 4; ++n) {
    const Poly got = specialize(qdet_perm(Shape(n, n)), Rational(1));
    ck.expect("Dq@" + std::to_string(n) + " at q=1 is the commutative determinant", got == commutative_determinant(n));
  }
  {
    int bad = 0;
    std::string witness;
    for (int trial = 0; trial < 100; ++trial) {
      const Element a = random_homogeneous(rng, shape, 3), b = random_homogeneous(rng, shape, 3);
      const Poly lhs = specialize(a * b, Rational(1));
      if (lhs != commutative_product(specialize(a, Rational(1)), specialize(b, Rational(1))) && bad++ == 0)
        witness = to_string(a) + " | " + to_string(b);
    }
    report("q=1 specialization of 100 homogeneous products is commutative", bad, witness);
  }
  {
    const Element corner = gen(shape, 1, shape.n);
    int bad = 0;
    std::string witness;
    for (int trial = 0; trial < 500; ++trial) {
      const Element a = random_element(rng, shape, 3);
      if (multiply(a, corner) != multiply(corner, tau(a)) && bad++ == 0) witness = to_string(a);
    }
    report("a*X[1,n] = X[1,n]*tau(a) on 500 random elements", bad, witness);
    bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const Element f = random_element(rng, shape, 3);
      const int k = rng.between(0, 3);
      const bool shift_ok = times_corner_power(f, 1) == multiply(f, corner);
      if ((!shift_ok || Localized(multiply(f, corner), k + 1) != Localized(f, k)) && bad++ == 0) witness = to_string(f);
    }
    report("(f*X[1,n], k+1) and (f, k) have the same canonical form", bad, witness);
  }
  {
    const Element corner = gen(shape, 1, shape.n);
    int bad = 0;
    std::string witness;
    for (int trial = 0; trial < 200; ++trial) {
      const Element a = random_element(rng, shape, 3), b = random_element(rng, shape, 3);
      const bool mult = kill_corner(a * b) == kill_corner(kill_corner(a) * kill_corner(b));
      const bool ideal = kill_corner(a * corner * b).is_zero();
      if ((!mult || !ideal) && bad++ == 0) witness = to_string(a) + " | " + to_string(b);
    }
    report("killing X[1,n] is multiplicative and kills a*X[1,n]*b", bad, witness);
  }
}

}  // namespace qmv::detail
