#include "algebra.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace qmv;

namespace {
const Laurent q = Laurent::q_power(1);
const Laurent qi = Laurent::q_power(-1);

Element mono(const Shape& s, std::initializer_list<std::pair<int, int>> gens, Laurent c = 1) {
  Monomial m;
  for (auto [r, col] : gens) m.add(generator_index(s, r, col));
  return Element::from_monomial(s, m, c);
}

Element random_element(oracle::Rng& rng, const Shape& s, int max_degree) {
  Element out(s);
  const int terms = rng.between(1, 3);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = rng.between(0, max_degree);
    for (int k = 0; k < d; ++k) m.add(rng.between(0, s.generator_count() - 1));
    out.add_term(m, Laurent(rng.between(1, 3), rng.between(-2, 2)));
  }
  return out;
}
}  // namespace

TEST_CASE("shapes and generators") {
  CHECK_THROWS_AS(Shape(0, 2), ShapeError);
  CHECK_THROWS_AS(Shape(2, 6), ShapeError);
  const Shape s22(2, 2), s33(3, 3), s23(2, 3);
  CHECK(to_string(gen(s22, 1, 1)) == "X[1,1]");
  CHECK(to_string(gen(s33, 3, 3)) == "X[3,3]");
  CHECK_THROWS_AS(gen(s23, 3, 1), IndexError);
  CHECK_THROWS_AS(gen(s23, 1, 0), IndexError);
  CHECK(generator_index(s23, 2, 1) == 3);
  CHECK(generator_at(s23, 5).row == 2);
  CHECK(generator_at(s23, 5).col == 3);
}

TEST_CASE("multiplication examples") {
  const Shape s(2, 2);
  CHECK(multiply(gen(s, 1, 2), gen(s, 1, 1)) == mono(s, {{1, 1}, {1, 2}}, qi));
  CHECK(multiply(gen(s, 2, 1), gen(s, 1, 2)) == mono(s, {{1, 2}, {2, 1}}));
  CHECK(multiply(gen(s, 2, 2), gen(s, 1, 1)) ==
        mono(s, {{1, 1}, {2, 2}}) - (q - qi) * mono(s, {{1, 2}, {2, 1}}));
  CHECK(to_string(multiply(gen(s, 2, 2), gen(s, 1, 1))) == "X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]");
  CHECK(multiply(gen(s, 2, 1), gen(s, 1, 1)) == mono(s, {{1, 1}, {2, 1}}, qi));
  CHECK_THROWS_AS(multiply(gen(s, 1, 1), gen(Shape(2, 3), 1, 1)), ShapeError);
}

TEST_CASE("commutator examples") {
  const Shape s(2, 2);
  CHECK(commutator(gen(s, 1, 1), gen(s, 2, 2)) == (q - qi) * mono(s, {{1, 2}, {2, 1}}));
  CHECK(commutator(gen(s, 1, 2), gen(s, 2, 1)).is_zero());
  oracle::Rng rng(3);
  const Element a = random_element(rng, Shape(3, 3), 3);
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("products agree with the word-rewriting oracle") {
  oracle::Rng rng(19);
  for (const Shape s : {Shape(2, 2), Shape(2, 3), Shape(3, 3), Shape(3, 2), Shape(1, 4)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const Element a = random_element(rng, s, 3), b = random_element(rng, s, 3);
      CHECK(multiply(a, b) == oracle::product(a, b));
    }
  }
  // A long word, reversed order.
  const Shape s(3, 3);
  std::vector<int> w;
  for (int g = 8; g >= 0; --g) w.push_back(g);
  Element engine(s, Laurent(1));
  for (int g : w) engine = multiply(engine, gen(s, g / 3 + 1, g % 3 + 1));
  CHECK(engine == oracle::word(s, w));
}

TEST_CASE("associativity on random triples") {
  oracle::Rng rng(23);
  const Shape s(3, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const Element a = random_element(rng, s, 3), b = random_element(rng, s, 3), c = random_element(rng, s, 3);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("identity and scalars") {
  const Shape s(2, 3);
  const Element one(s, Laurent(1));
  oracle::Rng rng(5);
  const Element a = random_element(rng, s, 3);
  CHECK(multiply(one, a) == a);
  CHECK(multiply(a, one) == a);
  CHECK(multiply(Element(s), a).is_zero());
  CHECK(power(gen(s, 1, 1), 0) == one);
  CHECK(power(gen(s, 2, 1) + gen(s, 1, 1), 2) ==
        multiply(gen(s, 2, 1) + gen(s, 1, 1), gen(s, 2, 1) + gen(s, 1, 1)));
}

TEST_CASE("bidegrees") {
  const Shape s2(2, 2), s3(3, 3);
  auto d = bidegree_of(mono(s2, {{1, 2}, {2, 1}}));
  REQUIRE(d);
  CHECK(d->to_string() == "(1,1;1,1)");
  CHECK_FALSE(bidegree_of(gen(s2, 1, 1) + gen(s2, 2, 2)).has_value());
  CHECK_FALSE(bidegree_of(Element(s2)).has_value());
  Element det = mono(s3, {{1, 1}, {2, 2}, {3, 3}});
  CHECK(bidegree_of(det)->to_string() == "(1,1,1;1,1,1)");
}

TEST_CASE("component bases") {
  const Shape s(2, 2);
  auto b = component_basis(s, Bidegree{{1, 1}, {1, 1}});
  REQUIRE(b.size() == 2);
  CHECK(monomial_to_string(s, b[0]) == "X[1,1]*X[2,2]");
  CHECK(monomial_to_string(s, b[1]) == "X[1,2]*X[2,1]");
  auto one = component_basis(s, Bidegree{{1, 0}, {1, 0}});
  REQUIRE(one.size() == 1);
  CHECK(monomial_to_string(s, one[0]) == "X[1,1]");
  auto unit = component_basis(s, Bidegree{{0, 0}, {0, 0}});
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].is_identity());
  CHECK(component_basis(s, Bidegree{{2, 0}, {1, 0}}).empty());
}

TEST_CASE("component bases match brute-force enumeration") {
  for (const Shape s : {Shape(2, 2), Shape(2, 3), Shape(3, 3)}) {
    for (int d = 0; d <= 3; ++d) {
      std::map<std::string, std::vector<Monomial>> by_degree;
      for (const auto& m : oracle::all_monomials(s, d)) by_degree[monomial_bidegree(s, m).to_string()].push_back(m);
      for (auto& [label, monos] : by_degree) {
        std::sort(monos.begin(), monos.end());
        const Bidegree deg = monomial_bidegree(s, monos.front());
        CHECK(component_basis(s, deg) == monos);
      }
    }
  }
}

TEST_CASE("monomial counts") {
  CHECK(monomial_count(Shape(2, 2), 2) == 10);
  CHECK(monomial_count(Shape(4, 5), 0) == 1);
  CHECK(monomial_count(Shape(3, 3), 1) == 9);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 4; ++d) CHECK(monomial_count(Shape(m, n), d) == oracle::binomial(m * n + d - 1, d));
}

TEST_CASE("killing generators") {
  const Shape s(2, 2);
  const Element a = mono(s, {{1, 1}, {2, 2}}) + mono(s, {{1, 2}, {2, 1}}, q);
  CHECK(kill_generators(a, {{1, 2}}) == mono(s, {{1, 1}, {2, 2}}));
  CHECK(kill_generators(a, {}) == a);
}

TEST_CASE("specialization at q = 1") {
  const Shape s(2, 2);
  const Element a = multiply(gen(s, 2, 2), gen(s, 1, 1));
  const auto v = specialize(a, 1);
  REQUIRE(v.size() == 1);
  CHECK(v.begin()->second == 1);
  CHECK(v.begin()->first == std::vector<int>{1, 0, 0, 1});
}

TEST_CASE("word inversions") {
  CHECK(word_inversions({}) == 0);
  CHECK(word_inversions({0, 1, 2}) == 0);
  CHECK(word_inversions({2, 1, 0}) == 3);
  CHECK(word_inversions({1, 1, 0}) == 2);
}

TEST_CASE("monomial exponent overflow is rejected") {
  Monomial m;
  m.add(0, 255);
  CHECK_THROWS(m.add(0, 1));
}

TEST_CASE("printing") {
  const Shape s(2, 2);
  CHECK(to_string(Element(s)) == "0");
  CHECK(to_string(Element(s, q - qi)) == "q - q^-1");
  CHECK(to_string(mono(s, {{1, 1}, {1, 1}}, Laurent(-2))) == "-2*X[1,1]^2");
  CHECK(to_string(Element(s, Laurent(1)) + gen(s, 1, 1)) == "1 + X[1,1]");
  CHECK(to_string(mono(s, {{2, 1}}, qi - q)) == "-(q - q^-1)*X[2,1]");
}
