#pragma once

// Elements of the quantum matrix algebra O_q(M_{m,n}) in the ordered (PBW)
// monomial basis, with products straightened by the defining relations.

#include "errors.hpp"
#include "scalar.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmv {

inline constexpr int kMaxDim = 5;
inline constexpr int kMaxGenerators = kMaxDim * kMaxDim;

struct Shape {
  int m = 1;
  int n = 1;

  Shape() = default;
  Shape(int rows, int cols);

  int generator_count() const { return m * n; }
  bool square() const { return m == n; }
  std::string to_string() const;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// 1-based generator X_{row,col}.
struct Generator {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Ordered monomial: exponents indexed by the row-major position of X_ij.
/// A monomial denotes the product of its generators in row-major order.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  int exponent(int index) const { return exps_[static_cast<std::size_t>(index)]; }
  int degree() const { return degree_; }
  bool is_identity() const { return degree_ == 0; }
  /// Row-major index of the last generator present; -1 for the identity.
  int last_index() const;

  void add(int index, int count = 1);
  void remove(int index, int count = 1);
  Monomial with(int index, int count = 1) const {
    Monomial out(*this);
    out.add(index, count);
    return out;
  }

  std::size_t hash() const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Canonical term order: lower degree first; within a degree, larger
  /// exponents on earlier generators first.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return b.exps_ < a.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxGenerators> exps_{};
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& mono) const { return mono.hash(); }
};

struct Bidegree {
  std::vector<int> rows;
  std::vector<int> cols;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  std::string to_string() const;
};

/// Finite Laurent-linear combination of ordered monomials over a fixed shape.
class Element {
 public:
  using Terms = std::map<Monomial, Laurent>;

  explicit Element(Shape shape = {}) : shape_(shape) {}
  Element(Shape shape, Laurent scalar);

  static Element generator(Shape shape, int row, int col);
  static Element from_monomial(Shape shape, const Monomial& mono, Laurent coeff = 1);

  const Shape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the given monomial (zero when absent).
  Laurent coefficient(const Monomial& mono) const;

  void add_term(const Monomial& mono, const Laurent& coeff);

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Laurent& s, const Element& a);
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) = default;

  /// Applies f to every coefficient; zero results are dropped.
  template <class F>
  Element map_coefficients(F&& f) const {
    Element out(shape_);
    for (const auto& [mono, c] : terms_) out.add_term(mono, f(mono, c));
    return out;
  }

 private:
  Shape shape_;
  Terms terms_;
};

int generator_index(const Shape& shape, int row, int col);
Generator generator_at(const Shape& shape, int index);

/// X_{ij}; throws IndexError when out of range.
Element gen(const Shape& shape, int row, int col);
/// Ordered-basis normal form of a*b. Throws ShapeError on mismatch.
Element multiply(const Element& a, const Element& b);
/// Normal form of the product of two ordered monomials.
Element multiply_monomials(const Shape& shape, const Monomial& left, const Monomial& right);
Element commutator(const Element& a, const Element& b);
Element power(const Element& a, int exponent);

Bidegree monomial_bidegree(const Shape& shape, const Monomial& mono);
/// Common bidegree of all terms, or nullopt when inhomogeneous.
/// The zero element has no bidegree.
std::optional<Bidegree> bidegree_of(const Element& a);
/// All ordered monomials of exactly the given bidegree, in canonical order.
std::vector<Monomial> component_basis(const Shape& shape, const Bidegree& degree);
/// Number of ordered monomials of total degree d, by enumeration.
long long monomial_count(const Shape& shape, int degree);

/// Number of inversions of the generator word behind a sequence of
/// row-major indices. A swap removes exactly one; the correction word of
/// the diagonal rule can have more, but is lexicographically smaller.
int word_inversions(const std::vector<int>& word);

/// Coefficient at q = q0 of each term, keyed by exponent vector. Used to
/// compare against commutative polynomial computations.
std::map<std::vector<int>, Rational> specialize(const Element& a, const Rational& q0);

/// Sets every generator outside the kept set to zero: terms containing a
/// killed generator vanish.
Element kill_generators(const Element& a, const std::vector<Generator>& killed);

std::string to_string(const Element& a);
std::string monomial_to_string(const Shape& shape, const Monomial& mono);

}  // namespace qmv
