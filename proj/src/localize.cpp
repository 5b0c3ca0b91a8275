#include "localize.hpp"

#include <stdexcept>

namespace qmv {

namespace {

int corner_index(const Shape& shape) { return generator_index(shape, 1, shape.n); }

// Net q-weight of tau on a monomial: +1 per X_1j (j < n), -1 per X_in (i > 1).
int tau_weight(const Shape& shape, const Monomial& mono) {
  int weight = 0;
  for (int j = 1; j < shape.n; ++j) weight += mono.exponent(generator_index(shape, 1, j));
  for (int i = 2; i <= shape.m; ++i) weight -= mono.exponent(generator_index(shape, i, shape.n));
  return weight;
}

// Number of X_in (i > 1) factors; each is passed by X_1n with a factor q^-1.
int last_column_weight(const Shape& shape, const Monomial& mono) {
  int weight = 0;
  for (int i = 2; i <= shape.m; ++i) weight += mono.exponent(generator_index(shape, i, shape.n));
  return weight;
}

}  // namespace

Localized::Localized(Element numerator, int denominator_power)
    : numerator_(std::move(numerator)), power_(denominator_power) {
  if (power_ < 0) {
    numerator_ = times_corner_power(numerator_, -power_);
    power_ = 0;
  }
  canonicalize();
}

Localized Localized::inverse_corner_power(const Shape& shape, int k) { return {Element(shape, Laurent(1)), k}; }

Element Localized::numerator_over(int k) const {
  if (k < power_) throw std::logic_error("numerator_over: target power below current power");
  return times_corner_power(numerator_, k - power_);
}

void Localized::canonicalize() {
  if (numerator_.is_zero()) {
    power_ = 0;
    return;
  }
  while (power_ > 0) {
    auto reduced = divide_by_corner(numerator_);
    if (!reduced) break;
    numerator_ = std::move(*reduced);
    --power_;
  }
}

Localized& Localized::operator+=(const Localized& other) {
  const int k = std::max(power_, other.power_);
  numerator_ = numerator_over(k) + other.numerator_over(k);
  power_ = k;
  canonicalize();
  return *this;
}

Localized operator*(const Localized& a, const Localized& b) {
  // f X^{-k} g X^{-l} = f tau^k(g) X^{-(k+l)}
  return {multiply(a.numerator_, tau(b.numerator_, a.power_)), a.power_ + b.power_};
}

Element tau(const Element& a, int times) {
  if (times == 0) return a;
  return a.map_coefficients([&](const Monomial& mono, const Laurent& c) {
    return c.shifted(times * tau_weight(a.shape(), mono));
  });
}

Element times_corner_power(const Element& a, int k) {
  if (k < 0) throw std::domain_error("negative corner power");
  if (k == 0) return a;
  const Shape& shape = a.shape();
  const int corner = corner_index(shape);
  Element out(shape);
  for (const auto& [mono, c] : a.terms())
    out.add_term(mono.with(corner, k), c.shifted(-k * last_column_weight(shape, mono)));
  return out;
}

std::optional<Element> divide_by_corner(const Element& a) {
  const Shape& shape = a.shape();
  const int corner = corner_index(shape);
  Element out(shape);
  for (const auto& [mono, c] : a.terms()) {
    if (mono.exponent(corner) == 0) return std::nullopt;
    Monomial reduced = mono;
    reduced.remove(corner);
    out.add_term(reduced, c.shifted(last_column_weight(shape, reduced)));
  }
  return out;
}

Localized loc_multiply(const Localized& a, const Localized& b) { return a * b; }

Localized loc_power(const Localized& a, int exponent) {
  if (exponent < 0) throw std::domain_error("negative power of a localized element");
  Localized out(Element(a.shape(), Laurent(1)));
  for (int i = 0; i < exponent; ++i) out = out * a;
  return out;
}

namespace {

void require_prime_index(const Shape& shape, int row, int col) {
  if (shape.m < 2 || shape.n < 2 || row < 2 || row > shape.m || col < 1 || col > shape.n - 1)
    throw IndexError("X'[" + std::to_string(row) + "," + std::to_string(col) + "] needs 2 <= i <= m, 1 <= j <= n-1 in " +
                     shape.to_string());
}

}  // namespace

Localized x_prime_from_minor(const Shape& shape, int row, int col) {
  require_prime_index(shape, row, col);
  const Element corner_minor = minor(shape, {{1, row}, {col, shape.n}});
  return {Laurent::q_power(-1) * -corner_minor, 1};
}

Localized x_prime(const Shape& shape, int row, int col) {
  require_prime_index(shape, row, col);
  const Element numerator = multiply(gen(shape, row, col), gen(shape, 1, shape.n)) -
                            Laurent::q_power(-1) * multiply(gen(shape, 1, col), gen(shape, row, shape.n));
  Localized direct(numerator, 1);
  if (direct != x_prime_from_minor(shape, row, col))
    throw std::logic_error("the two forms of X'[" + std::to_string(row) + "," + std::to_string(col) + "] disagree");
  return direct;
}

namespace {

void require_prime_minor(const Shape& shape, const MinorSpec& spec) {
  spec.validate(shape);
  if (spec.rows.front() < 2 || spec.cols.back() > shape.n - 1)
    throw IndexError("minor of X' " + spec.to_string() + " needs rows in 2..m and columns in 1..n-1");
}

}  // namespace

Localized x_prime_minor(const Shape& shape, const MinorSpec& spec) {
  require_prime_minor(shape, spec);
  std::vector<std::vector<Localized>> block;
  for (int r : spec.rows) {
    auto& row = block.emplace_back();
    for (int c : spec.cols) row.push_back(x_prime(shape, r, c));
  }
  return quantum_determinant(block, Localized(shape));
}

Localized x_prime_minor_via_reduction(const Shape& shape, const MinorSpec& spec) {
  require_prime_minor(shape, spec);
  const MinorSpec full{with_index(spec.rows, 1), with_index(spec.cols, shape.n)};
  return {Laurent::minus_q_power(1 - full.size()) * minor(shape, full), 1};
}

Element kill_corner(const Element& a) { return kill_generators(a, {Generator{1, a.shape().n}}); }

std::string to_string(const Localized& a) {
  if (a.denominator_power() == 0) return to_string(a.numerator());
  std::string out = "(" + to_string(a.numerator()) + ")*inv1n";
  if (a.denominator_power() > 1) out += "^" + std::to_string(a.denominator_power());
  return out;
}

}  // namespace qmv
