#pragma once

// The localization k_q[X]_{X_1n} at the normal generator X_1n, the derived
// matrix X' and its minors.

#include "algebra.hpp"
#include "minors.hpp"

#include <string>
#include <vector>

namespace qmv {

/// numerator * X_1n^{-k}.
///
/// Canonical form: k == 0, or some numerator term avoids X_1n. Because
/// right multiplication by X_1n shifts the X_1n-exponent of every ordered
/// monomial by exactly one (up to a power of q), canonical forms are unique
/// and equality is structural.
class Localized {
 public:
  explicit Localized(Shape shape = {}) : numerator_(shape) {}
  Localized(Element numerator, int denominator_power = 0);  // NOLINT(google-explicit-constructor)

  /// X_1n^{-k}.
  static Localized inverse_corner_power(const Shape& shape, int k);

  const Shape& shape() const { return numerator_.shape(); }
  const Element& numerator() const { return numerator_; }
  int denominator_power() const { return power_; }
  bool is_zero() const { return numerator_.is_zero(); }

  /// Numerator of this value written over X_1n^{-k}; requires k >= power.
  Element numerator_over(int k) const;

  Localized operator-() const { return {-numerator_, power_}; }
  Localized& operator+=(const Localized& other);
  Localized& operator-=(const Localized& other) { return *this += -other; }
  friend Localized operator+(Localized a, const Localized& b) { return a += b; }
  friend Localized operator-(Localized a, const Localized& b) { return a -= b; }
  friend Localized operator*(const Localized& a, const Localized& b);
  friend Localized operator*(const Laurent& s, const Localized& a) { return {s * a.numerator_, a.power_}; }
  friend bool operator==(const Localized& a, const Localized& b) = default;

 private:
  void canonicalize();

  Element numerator_;
  int power_ = 0;
};

/// The conjugation automorphism of X_1n: a X_1n = X_1n tau(a).
/// tau scales X_1j (j < n) by q, X_in (i > 1) by q^-1 and fixes the rest.
Element tau(const Element& a, int times = 1);
/// a * X_1n^k via the uniform exponent shift (no straightening needed).
Element times_corner_power(const Element& a, int k);
/// f with f * X_1n = a, when every term of a contains X_1n.
std::optional<Element> divide_by_corner(const Element& a);

Localized loc_multiply(const Localized& a, const Localized& b);
Localized loc_power(const Localized& a, int exponent);

/// X'_ij = X_ij - q^-1 X_1j X_in X_1n^{-1}. Also computes the second form
/// -q^-1 [i,1|j,n] X_1n^{-1} and throws std::logic_error if they differ.
Localized x_prime(const Shape& shape, int row, int col);
/// The same entry via the 2x2 minor form only.
Localized x_prime_from_minor(const Shape& shape, int row, int col);

/// Quantum minor of X' by the permutation sum over localized entries.
/// Rows must lie in 2..m and columns in 1..n-1.
Localized x_prime_minor(const Shape& shape, const MinorSpec& spec);
/// Same minor via [I'|J']' = (-q)^{1-p} [I|J] X_1n^{-1}.
Localized x_prime_minor_via_reduction(const Shape& shape, const MinorSpec& spec);

/// Terms killed when the two-sided ideal generated by X_1n is factored out.
Element kill_corner(const Element& a);

std::string to_string(const Localized& a);

}  // namespace qmv
