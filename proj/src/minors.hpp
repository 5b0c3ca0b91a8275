#pragma once

// Quantum determinants, quantum minors [I|J], q-Laplace expansions and the
// corner-killing projection O_q(M_s) -> O_q(M_{m,n}).

#include "algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace qmv {

using IndexSet = std::vector<int>;

/// Row set I and column set J, both strictly increasing and 1-based.
struct MinorSpec {
  IndexSet rows;
  IndexSet cols;

  int size() const { return static_cast<int>(rows.size()); }
  /// Throws IndexError unless |I| = |J| >= 1, sets increasing, in range.
  void validate(const Shape& shape) const;
  std::string to_string() const;
  friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

/// Number of inversions of a permutation given as a sequence.
int inversion_count(const std::vector<int>& perm);

/// Quantum determinant of a square matrix of ring values:
/// sum over sigma of (-q)^{l(sigma)} M[0][sigma(0)] ... M[t-1][sigma(t-1)].
/// Works for any ring type supporting +=, * and Laurent scalar multiples.
template <class Ring>
Ring quantum_determinant(const std::vector<std::vector<Ring>>& entries, const Ring& zero) {
  const int t = static_cast<int>(entries.size());
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  Ring total = zero;
  do {
    Ring product = entries[0][static_cast<std::size_t>(perm[0])];
    for (int r = 1; r < t; ++r)
      product = product * entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
    total += Laurent::minus_q_power(inversion_count(perm)) * product;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// det_q of a square shape, by the permutation sum. Throws ShapeError if
/// the shape is not square.
Element qdet_perm(const Shape& shape);
/// [I|J]: the permutation-sum determinant of the submatrix on rows I and
/// columns J, written in the ambient generators.
Element minor(const Shape& shape, const MinorSpec& spec);
/// A(ij): delete row i and column j of an n x n shape.
Element complement_minor(const Shape& shape, int row, int col);
/// Determinant of the leading size x size block; D_{n-1} = A(nn).
Element leading_determinant(const Shape& shape, int size);

/// sum_j (-q)^{j-i} X_{kj} A(ij); equals delta_{ik} det_q.
Element laplace_expand_row(const Shape& shape, int expansion_row, int coefficient_row);
/// sum_i (-q)^{e(i,j)} A(ij) X_{il} with the frozen column law; equals
/// delta_{jl} det_q.
Element laplace_expand_col(const Shape& shape, int expansion_col, int coefficient_col);

/// Image under X_ij -> X_ij (i <= m, j <= n), X_ij -> 0 otherwise.
Element project_pi(const Element& source, const Shape& target);

/// All strictly increasing k-subsets of {lo, ..., hi}.
std::vector<IndexSet> subsets(int lo, int hi, int k);
/// All minor specs of the given size in the shape.
std::vector<MinorSpec> all_minors(const Shape& shape, int size);

/// set with value inserted / removed, kept sorted.
IndexSet with_index(IndexSet set, int value);
IndexSet without_index(IndexSet set, int value);
bool contains(const IndexSet& set, int value);
/// 1-based position of value inside a sorted set.
int position_of(const IndexSet& set, int value);

}  // namespace qmv
