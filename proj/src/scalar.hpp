#pragma once

// Exact arithmetic in Z[q, q^-1] and its fraction field.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored sparsely as (exponent, coefficient) pairs sorted by exponent.
/// No stored coefficient is zero; the zero element has no terms.
class Laurent {
 public:
  using Term = std::pair<int, BigInt>;

  Laurent() = default;
  Laurent(long long constant);  // NOLINT(google-explicit-constructor)
  Laurent(BigInt coeff, int exponent);

  static Laurent q_power(int exponent) { return Laurent(BigInt(1), exponent); }
  /// (-q)^k for any integer k.
  static Laurent minus_q_power(int k);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  int min_exponent() const;
  int max_exponent() const;
  const BigInt& coefficient_at_max() const { return terms_.back().second; }
  /// True when the value is c*q^e for a single term.
  bool is_monomial() const { return terms_.size() == 1; }

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  /// Multiplies by q^k.
  Laurent shifted(int k) const;
  /// Substitutes q -> 1/q.
  Laurent bar() const;

  /// Value at q = q0. Throws std::domain_error for q0 == 0.
  Rational eval(const Rational& q0) const;

  /// Exact quotient when divisor divides this in Z[q, q^-1]; nullopt otherwise.
  std::optional<Laurent> exact_div(const Laurent& divisor) const;

  /// Rendered with decreasing q-exponents, e.g. "q^3 + 2 - q^-1".
  std::string to_string() const;

  std::size_t hash() const;

 private:
  explicit Laurent(std::vector<Term> terms) : terms_(std::move(terms)) {}
  std::vector<Term> terms_;
};

Laurent scalar_add(const Laurent& a, const Laurent& b);
Laurent scalar_mul(const Laurent& a, const Laurent& b);
Rational scalar_eval(const Laurent& a, const Rational& q0);

/// Element of Q(q) as an unreduced quotient of Laurent polynomials.
/// Equality is decided by cross-multiplication.
class ScalarFraction {
 public:
  ScalarFraction() : num_(), den_(1) {}
  ScalarFraction(Laurent num) : num_(std::move(num)), den_(1) {}  // NOLINT
  ScalarFraction(Laurent num, Laurent den);

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b);
  friend ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b);
  friend ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b);
  friend ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b);
  ScalarFraction operator-() const { return {-num_, den_}; }
  friend bool operator==(const ScalarFraction& a, const ScalarFraction& b);

  /// The Laurent polynomial this fraction equals, if any.
  std::optional<Laurent> as_laurent() const;
  /// k such that this equals (-q)^k, if any.
  std::optional<int> as_minus_q_power() const;

  std::string to_string() const;

 private:
  Laurent num_;
  Laurent den_;
};

}  // namespace qmv
