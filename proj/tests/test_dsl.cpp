#include "dsl.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace qmv;

namespace {
const Laurent q = Laurent::q_power(1);
const Laurent qi = Laurent::q_power(-1);

Localized ev(const std::string& src, const Shape& s) { return dsl::evaluate(src, s); }

std::size_t error_position(const std::string& src, const Shape& s) {
  try {
    dsl::evaluate(src, s);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

Localized random_localized(oracle::Rng& rng, const Shape& s) {
  Element num(s);
  for (int t = rng.between(1, 4); t > 0; --t) {
    Monomial m;
    for (int k = rng.between(0, 3); k > 0; --k) m.add(rng.between(0, s.generator_count() - 1));
    num.add_term(m, oracle::random_laurent(rng));
  }
  return Localized(num, rng.between(0, 2));
}
}  // namespace

TEST_CASE("parse examples") {
  const Shape s(2, 2);
  CHECK(ev("X[2,2]*X[1,1]", s).numerator() == multiply(gen(s, 2, 2), gen(s, 1, 1)));
  CHECK(to_string(ev("X[2,2]*X[1,1]", s)) == "X[1,1]*X[2,2] - (q - q^-1)*X[1,2]*X[2,1]");
  CHECK(ev("Dq@2", s) == Localized(qdet_perm(s)));
  CHECK(ev("M[{1,2}|{1,2}]", s) == Localized(qdet_perm(s)));
  CHECK(ev("A(1,1)@2", s) == Localized(gen(s, 2, 2)));
  CHECK(ev("q^-2 * q^2", s) == Localized(Element(s, Laurent(1))));
  CHECK(ev("-X[1,1] + X[1,1]", s).is_zero());
  CHECK(ev("3*X[1,1] - 2*X[1,1]", s) == Localized(gen(s, 1, 1)));
  CHECK(ev("(X[1,1] + X[2,2])^2", s).numerator() == power(gen(s, 1, 1) + gen(s, 2, 2), 2));
  CHECK(ev("inv1n * X[1,2]", s) == Localized(Element(s, Laurent(1))));
  CHECK(ev("X[1,2] * inv1n", s) == Localized(Element(s, Laurent(1))));
  CHECK(ev("inv1n^-1", s) == Localized(gen(s, 1, 2)));
  CHECK(ev("Xp[2,1]", s) == x_prime(s, 2, 1));
  CHECK(ev("Mp[{2}|{1}]", s) == x_prime(s, 2, 1));
  CHECK(ev("  X[1,1]\t*  X[1,2] ", s) == Localized(multiply(gen(s, 1, 1), gen(s, 1, 2))));
  const Shape s33(3, 3);
  CHECK(ev("Dq@3 * X[2,2] - X[2,2] * Dq@3", s33).is_zero());
  CHECK(ev("Mp[{2,3}|{1,2}]", s33) == x_prime_minor(s33, {{2, 3}, {1, 2}}));
}

TEST_CASE("parse errors carry positions") {
  const Shape s(3, 3);
  CHECK(error_position("X[5,1]", s) == 2);
  CHECK(error_position("X[1,1] +", s) == 8);
  CHECK(error_position("X[1,1]^-1", s) == 6);
  CHECK(error_position("Y", s) == 0);
  CHECK(error_position("(X[1,1]", s) == 7);
  CHECK(error_position("X[1,1] X[2,2]", s) == 7);
  CHECK(error_position("M[{2,1}|{1,2}]", s) != std::string::npos);
  CHECK(error_position("M[{1,2}|{1}]", s) != std::string::npos);
  CHECK(error_position("Xp[1,1]", s) != std::string::npos);
  CHECK(error_position("Xp[2,3]", s) != std::string::npos);
  CHECK(error_position("A(1,1)@1", s) != std::string::npos);
  CHECK(error_position("A(3,1)@2", s) != std::string::npos);
  CHECK(error_position("Dq@4", s) != std::string::npos);
  CHECK(error_position("Dq@0", s) != std::string::npos);
  CHECK(error_position("X[1,1]^65", s) != std::string::npos);
  CHECK(error_position("", s) == 0);
  CHECK(error_position("X[1,1] * inv1n", Shape(1, 1)) == std::string::npos);
}

TEST_CASE("canonical strings parse back to the same value") {
  oracle::Rng rng(29);
  for (const Shape s : {Shape(2, 2), Shape(2, 3), Shape(3, 3), Shape(1, 3)}) {
    for (int trial = 0; trial < 80; ++trial) {
      const Localized value = random_localized(rng, s);
      CAPTURE(to_string(value));
      CHECK(ev(to_string(value), s) == value);
    }
  }
}

TEST_CASE("source rendering round-trips") {
  const Shape s(3, 3);
  for (const char* src : {"X[2,2]*X[1,1]", "-(q - q^-1)^3*X[1,3]", "Mp[{2,3}|{1,2}] + A(1,2)@3*inv1n^2",
                          "Dq@2 - M[{1,3}|{2,3}]*Xp[3,1]", "q^-4*(1 + X[1,1])^2", "-X[1,1] - (-2)"}) {
    CAPTURE(src);
    auto ast = dsl::parse(src, s);
    const std::string rendered = dsl::to_source(*ast);
    CHECK(ev(rendered, s) == dsl::evaluate(*ast, s));
    CHECK(dsl::to_source(*dsl::parse(rendered, s)) == rendered);
  }
}
