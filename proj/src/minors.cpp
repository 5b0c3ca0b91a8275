#include "minors.hpp"

#include "exponent_laws.hpp"

namespace qmv {

namespace {

std::string set_to_string(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

IndexSet full_range(int n) {
  IndexSet out(static_cast<std::size_t>(n));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

void require_square(const Shape& shape, const char* what) {
  if (!shape.square()) throw ShapeError(std::string(what) + " needs a square shape, got " + shape.to_string());
}

void require_index(int value, int hi, const char* what) {
  if (value < 1 || value > hi)
    throw IndexError(std::string(what) + " " + std::to_string(value) + " outside 1.." + std::to_string(hi));
}

}  // namespace

void MinorSpec::validate(const Shape& shape) const {
  if (rows.empty() || rows.size() != cols.size())
    throw IndexError("minor " + to_string() + " needs |I| = |J| >= 1");
  auto check = [&](const IndexSet& set, int hi, const char* what) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > hi)
        throw IndexError(std::string(what) + " index " + std::to_string(set[i]) + " of minor " + to_string() +
                         " outside shape " + shape.to_string());
      if (i > 0 && set[i - 1] >= set[i])
        throw IndexError(std::string(what) + " set of minor " + to_string() + " is not strictly increasing");
    }
  };
  check(rows, shape.m, "row");
  check(cols, shape.n, "column");
}

std::string MinorSpec::to_string() const { return "[" + set_to_string(rows) + "|" + set_to_string(cols) + "]"; }

int inversion_count(const std::vector<int>& perm) {
  int count = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++count;
  return count;
}

Element minor(const Shape& shape, const MinorSpec& spec) {
  spec.validate(shape);
  // The submatrix on rows I and columns J is itself a quantum matrix.
  std::vector<std::vector<Element>> block;
  for (int r : spec.rows) {
    auto& row = block.emplace_back();
    for (int c : spec.cols) row.push_back(gen(shape, r, c));
  }
  return quantum_determinant(block, Element(shape));
}

Element qdet_perm(const Shape& shape) {
  require_square(shape, "quantum determinant");
  return minor(shape, {full_range(shape.n), full_range(shape.n)});
}

Element complement_minor(const Shape& shape, int row, int col) {
  require_square(shape, "complement minor");
  require_index(row, shape.n, "deleted row");
  require_index(col, shape.n, "deleted column");
  if (shape.n == 1) throw IndexError("complement minor of a 1x1 shape is empty");
  return minor(shape, {without_index(full_range(shape.n), row), without_index(full_range(shape.n), col)});
}

Element leading_determinant(const Shape& shape, int size) {
  if (size < 1 || size > std::min(shape.m, shape.n))
    throw IndexError("leading block of size " + std::to_string(size) + " outside shape " + shape.to_string());
  return minor(shape, {full_range(size), full_range(size)});
}

Element laplace_expand_row(const Shape& shape, int expansion_row, int coefficient_row) {
  require_square(shape, "row expansion");
  require_index(expansion_row, shape.n, "expansion row");
  require_index(coefficient_row, shape.n, "coefficient row");
  Element total(shape);
  for (int j = 1; j <= shape.n; ++j)
    total += Laurent::minus_q_power(laws::row_laplace(expansion_row, j)) *
             multiply(gen(shape, coefficient_row, j), complement_minor(shape, expansion_row, j));
  return total;
}

Element laplace_expand_col(const Shape& shape, int expansion_col, int coefficient_col) {
  require_square(shape, "column expansion");
  require_index(expansion_col, shape.n, "expansion column");
  require_index(coefficient_col, shape.n, "coefficient column");
  Element total(shape);
  for (int i = 1; i <= shape.n; ++i)
    total += Laurent::minus_q_power(laws::col_laplace(i, expansion_col)) *
             multiply(complement_minor(shape, i, expansion_col), gen(shape, i, coefficient_col));
  return total;
}

Element project_pi(const Element& source, const Shape& target) {
  const Shape& s = source.shape();
  if (!s.square() || s.n != std::max(target.m, target.n))
    throw ShapeError("projection needs source " + std::to_string(std::max(target.m, target.n)) + "x" +
                     std::to_string(std::max(target.m, target.n)) + ", got " + s.to_string());
  Element out(target);
  for (const auto& [mono, c] : source.terms()) {
    Monomial image;
    bool killed = false;
    for (int i = 0; i < s.generator_count() && !killed; ++i) {
      const int e = mono.exponent(i);
      if (e == 0) continue;
      const Generator g = generator_at(s, i);
      if (g.row > target.m || g.col > target.n) {
        killed = true;
      } else {
        image.add(generator_index(target, g.row, g.col), e);
      }
    }
    // Row-major order restricts to row-major order, so images stay ordered.
    if (!killed) out.add_term(image, c);
  }
  return out;
}

std::vector<IndexSet> subsets(int lo, int hi, int k) {
  std::vector<IndexSet> out;
  IndexSet current;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= hi; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  if (k >= 0) rec(rec, lo);
  return out;
}

std::vector<MinorSpec> all_minors(const Shape& shape, int size) {
  std::vector<MinorSpec> out;
  for (const auto& rows : subsets(1, shape.m, size))
    for (const auto& cols : subsets(1, shape.n, size)) out.push_back({rows, cols});
  return out;
}

IndexSet with_index(IndexSet set, int value) {
  if (!contains(set, value)) set.insert(std::upper_bound(set.begin(), set.end(), value), value);
  return set;
}

IndexSet without_index(IndexSet set, int value) {
  std::erase(set, value);
  return set;
}

bool contains(const IndexSet& set, int value) { return std::binary_search(set.begin(), set.end(), value); }

int position_of(const IndexSet& set, int value) {
  auto it = std::lower_bound(set.begin(), set.end(), value);
  if (it == set.end() || *it != value) throw IndexError("index " + std::to_string(value) + " not in set");
  return static_cast<int>(it - set.begin()) + 1;
}

}  // namespace qmv
