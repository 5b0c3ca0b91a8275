#include "algebra.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <unordered_map>

namespace qmv {

Shape::Shape(int rows, int cols) : m(rows), n(cols) {
  if (rows < 1 || cols < 1 || rows > kMaxDim || cols > kMaxDim)
    throw ShapeError("shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                     " outside 1..5 x 1..5");
}

std::string Shape::to_string() const { return std::to_string(m) + "x" + std::to_string(n); }

int Monomial::last_index() const {
  for (int i = kMaxGenerators - 1; i >= 0; --i)
    if (exps_[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

void Monomial::add(int index, int count) {
  auto& slot = exps_[static_cast<std::size_t>(index)];
  if (slot + count > 255) throw std::overflow_error("monomial exponent exceeds 255");
  slot = static_cast<std::uint8_t>(slot + count);
  degree_ += count;
}

void Monomial::remove(int index, int count) {
  auto& slot = exps_[static_cast<std::size_t>(index)];
  if (slot < count) throw std::logic_error("removing absent generator from monomial");
  slot = static_cast<std::uint8_t>(slot - count);
  degree_ -= count;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Bidegree::to_string() const {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  return "(" + join(rows) + ";" + join(cols) + ")";
}

int generator_index(const Shape& shape, int row, int col) {
  if (row < 1 || row > shape.m || col < 1 || col > shape.n)
    throw IndexError("generator X[" + std::to_string(row) + "," + std::to_string(col) +
                     "] outside shape " + shape.to_string());
  return (row - 1) * shape.n + (col - 1);
}

Generator generator_at(const Shape& shape, int index) {
  return {index / shape.n + 1, index % shape.n + 1};
}

Element::Element(Shape shape, Laurent scalar) : shape_(shape) {
  if (!scalar.is_zero()) terms_.emplace(Monomial{}, std::move(scalar));
}

Element Element::generator(Shape shape, int row, int col) {
  Monomial mono;
  mono.add(generator_index(shape, row, col));
  return from_monomial(shape, mono);
}

Element Element::from_monomial(Shape shape, const Monomial& mono, Laurent coeff) {
  Element out(shape);
  out.add_term(mono, coeff);
  return out;
}

Laurent Element::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Laurent{} : it->second;
}

void Element::add_term(const Monomial& mono, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element out(shape_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mono, -c);
  return out;
}

Element& Element::operator+=(const Element& other) {
  if (other.shape_ != shape_) throw ShapeError("adding elements of shapes " + shape_.to_string() +
                                               " and " + other.shape_.to_string());
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element operator*(const Laurent& s, const Element& a) {
  Element out(a.shape_);
  if (s.is_zero()) return out;
  for (const auto& [mono, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), mono, s * c);
  return out;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

namespace {

using TermList = std::vector<std::pair<Monomial, Laurent>>;
using Accumulator = std::unordered_map<Monomial, Laurent, MonomialHash>;

void accumulate(Accumulator& acc, const Monomial& mono, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(mono, coeff);
  if (!inserted) it->second += coeff;
}

// Memoized right multiplication of an ordered monomial by one generator.
class Straightener {
 public:
  explicit Straightener(Shape shape) : shape_(shape) {}

  const TermList& times_generator(const Monomial& mono, int g) {
    Key key{mono, g};
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TermList computed = compute(mono, g);
    return cache_.emplace(std::move(key), std::move(computed)).first->second;
  }

 private:
  struct Key {
    Monomial mono;
    int gen;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return k.mono.hash() * 31 + static_cast<std::size_t>(k.gen); }
  };

  TermList compute(const Monomial& mono, int g) {
    const int h = mono.last_index();
    if (h <= g) return {{mono.with(g), Laurent(1)}};

    // mono = rest * x_h with x_h > x_g, so mono * x_g = rest * (x_h x_g).
    Monomial rest = mono;
    rest.remove(h);
    const Generator hg = generator_at(shape_, h);
    const Generator gg = generator_at(shape_, g);

    Laurent swap_coeff(1);
    bool diagonal = false;
    if (hg.row == gg.row || hg.col == gg.col) {
      swap_coeff = Laurent::q_power(-1);
    } else if (hg.col > gg.col) {
      diagonal = true;
    }

    Accumulator acc;
    for (const auto& [m, c] : times_generator(rest, g)) accumulate(acc, m.with(h), swap_coeff * c);
    if (diagonal) {
      // x_h x_g = x_g x_h - (q - q^-1) X[g.row, h.col] X[h.row, g.col]
      static const Laurent correction = Laurent::q_power(-1) - Laurent::q_power(1);
      const int first = generator_index(shape_, gg.row, hg.col);
      const int second = generator_index(shape_, hg.row, gg.col);
      for (const auto& [m1, c1] : times_generator(rest, first)) {
        const Laurent scaled = correction * c1;
        for (const auto& [m2, c2] : times_generator(m1, second)) accumulate(acc, m2, scaled * c2);
      }
    }
    TermList out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!c.is_zero()) out.emplace_back(m, std::move(c));
    return out;
  }

  Shape shape_;
  std::unordered_map<Key, TermList, KeyHash> cache_;
};

Straightener& straightener_for(const Shape& shape) {
  thread_local std::map<Shape, std::unique_ptr<Straightener>> engines;
  auto& slot = engines[shape];
  if (!slot) slot = std::make_unique<Straightener>(shape);
  return *slot;
}

int first_index(const Monomial& mono, int count) {
  for (int i = 0; i < count; ++i)
    if (mono.exponent(i) != 0) return i;
  return count;
}

void multiply_into(Accumulator& out, const Shape& shape, const Monomial& left, const Monomial& right,
                   const Laurent& coeff) {
  const int count = shape.generator_count();
  if (first_index(right, count) >= left.last_index()) {
    Monomial joined = left;
    for (int i = 0; i < count; ++i)
      if (right.exponent(i) != 0) joined.add(i, right.exponent(i));
    accumulate(out, joined, coeff);
    return;
  }
  Straightener& engine = straightener_for(shape);
  Accumulator current;
  current.emplace(left, coeff);
  for (int g = 0; g < count; ++g) {
    for (int rep = 0; rep < right.exponent(g); ++rep) {
      Accumulator next;
      for (const auto& [mono, c] : current) {
        if (c.is_zero()) continue;
        for (const auto& [m, d] : engine.times_generator(mono, g)) accumulate(next, m, c * d);
      }
      current = std::move(next);
    }
  }
  for (const auto& [mono, c] : current) accumulate(out, mono, c);
}

Element from_accumulator(const Shape& shape, Accumulator&& acc) {
  Element out(shape);
  for (auto& [mono, c] : acc)
    if (!c.is_zero()) out.add_term(mono, c);
  return out;
}

void require_same_shape(const Element& a, const Element& b, const char* op) {
  if (a.shape() != b.shape())
    throw ShapeError(std::string(op) + " of elements with shapes " + a.shape().to_string() + " and " +
                     b.shape().to_string());
}

}  // namespace

Element gen(const Shape& shape, int row, int col) { return Element::generator(shape, row, col); }

Element multiply_monomials(const Shape& shape, const Monomial& left, const Monomial& right) {
  Accumulator acc;
  multiply_into(acc, shape, left, right, Laurent(1));
  return from_accumulator(shape, std::move(acc));
}

Element multiply(const Element& a, const Element& b) {
  require_same_shape(a, b, "product");
  Accumulator acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) multiply_into(acc, a.shape(), ma, mb, ca * cb);
  return from_accumulator(a.shape(), std::move(acc));
}

Element commutator(const Element& a, const Element& b) {
  require_same_shape(a, b, "commutator");
  return multiply(a, b) - multiply(b, a);
}

Element power(const Element& a, int exponent) {
  if (exponent < 0) throw std::domain_error("negative power of an algebra element");
  Element out(a.shape(), Laurent(1));
  for (int i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

Bidegree monomial_bidegree(const Shape& shape, const Monomial& mono) {
  Bidegree d{std::vector<int>(static_cast<std::size_t>(shape.m)), std::vector<int>(static_cast<std::size_t>(shape.n))};
  for (int i = 0; i < shape.generator_count(); ++i) {
    const int e = mono.exponent(i);
    if (e == 0) continue;
    const Generator g = generator_at(shape, i);
    d.rows[static_cast<std::size_t>(g.row - 1)] += e;
    d.cols[static_cast<std::size_t>(g.col - 1)] += e;
  }
  return d;
}

std::optional<Bidegree> bidegree_of(const Element& a) {
  std::optional<Bidegree> common;
  for (const auto& [mono, c] : a.terms()) {
    Bidegree d = monomial_bidegree(a.shape(), mono);
    if (!common) {
      common = std::move(d);
    } else if (*common != d) {
      return std::nullopt;
    }
  }
  return common;
}

std::vector<Monomial> component_basis(const Shape& shape, const Bidegree& degree) {
  if (static_cast<int>(degree.rows.size()) != shape.m || static_cast<int>(degree.cols.size()) != shape.n)
    throw ShapeError("bidegree length does not match shape " + shape.to_string());
  for (int v : degree.rows)
    if (v < 0) throw std::domain_error("negative bidegree entry");
  for (int v : degree.cols)
    if (v < 0) throw std::domain_error("negative bidegree entry");

  std::vector<Monomial> out;
  std::vector<int> row_left = degree.rows;
  std::vector<int> col_left = degree.cols;
  Monomial current;
  // Fill exponents cell by cell in row-major order; the last cell of each
  // row takes whatever the row still needs.
  std::function<void(int)> fill = [&](int index) {
    if (index == shape.generator_count()) {
      for (int c : col_left)
        if (c != 0) return;
      out.push_back(current);
      return;
    }
    const Generator g = generator_at(shape, index);
    auto& r = row_left[static_cast<std::size_t>(g.row - 1)];
    auto& c = col_left[static_cast<std::size_t>(g.col - 1)];
    const int lo = (g.col == shape.n) ? r : 0;
    const int hi = std::min(r, c);
    for (int e = lo; e <= hi; ++e) {
      if (e) current.add(index, e);
      r -= e;
      c -= e;
      fill(index + 1);
      r += e;
      c += e;
      if (e) current.remove(index, e);
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

long long monomial_count(const Shape& shape, int degree) {
  if (degree < 0) throw std::domain_error("negative total degree");
  // Enumerate exponent vectors generator by generator.
  std::function<long long(int, int)> count = [&](int index, int left) -> long long {
    if (index == shape.generator_count() - 1) return 1;
    long long total = 0;
    for (int e = 0; e <= left; ++e) total += count(index + 1, left - e);
    return total;
  };
  return count(0, degree);
}

int word_inversions(const std::vector<int>& word) {
  int inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inversions;
  return inversions;
}

std::map<std::vector<int>, Rational> specialize(const Element& a, const Rational& q0) {
  std::map<std::vector<int>, Rational> out;
  for (const auto& [mono, c] : a.terms()) {
    std::vector<int> key(static_cast<std::size_t>(a.shape().generator_count()));
    for (int i = 0; i < a.shape().generator_count(); ++i) key[static_cast<std::size_t>(i)] = mono.exponent(i);
    Rational v = c.eval(q0);
    if (v != 0) out[key] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Element kill_generators(const Element& a, const std::vector<Generator>& killed) {
  std::vector<int> indices;
  for (const auto& g : killed) indices.push_back(generator_index(a.shape(), g.row, g.col));
  Element out(a.shape());
  for (const auto& [mono, c] : a.terms()) {
    bool survives = std::none_of(indices.begin(), indices.end(), [&](int i) { return mono.exponent(i) != 0; });
    if (survives) out.add_term(mono, c);
  }
  return out;
}

std::string monomial_to_string(const Shape& shape, const Monomial& mono) {
  std::string out;
  for (int i = 0; i < shape.generator_count(); ++i) {
    const int e = mono.exponent(i);
    if (e == 0) continue;
    const Generator g = generator_at(shape, i);
    if (!out.empty()) out += "*";
    out += "X[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  if (a.size() == 1 && a.terms().begin()->first.is_identity()) return a.terms().begin()->second.to_string();
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : a.terms()) {
    bool negative = false;
    std::string coeff_text;
    if (c.is_monomial()) {
      const auto& [e, v] = c.terms()[0];
      negative = v < 0;
      const Laurent magnitude(negative ? BigInt(-v) : v, e);
      if (!magnitude.is_one()) coeff_text = magnitude.to_string();
    } else {
      negative = c.coefficient_at_max() < 0;
      coeff_text = "(" + (negative ? -c : c).to_string() + ")";
    }
    std::string term;
    if (mono.is_identity()) {
      term = coeff_text.empty() ? "1" : coeff_text;
    } else {
      term = coeff_text.empty() ? monomial_to_string(a.shape(), mono)
                                : coeff_text + "*" + monomial_to_string(a.shape(), mono);
    }
    if (first) {
      out += negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

}  // namespace qmv
