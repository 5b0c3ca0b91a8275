#pragma once

// Independent reference computations used as test oracles. None of these
// call the engine's multiplication.

#include "algebra.hpp"
#include "minors.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using qmv::Laurent;
using qmv::Shape;

/// Deterministic test RNG (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int between(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

inline Laurent random_laurent(Rng& rng, int max_terms = 3) {
  Laurent out;
  const int terms = rng.between(0, max_terms);
  for (int k = 0; k < terms; ++k) out += Laurent(rng.between(-5, 5), rng.between(-4, 4));
  return out;
}

/// Words over row-major generator indices, straightened by adjacent swaps
/// read directly off the four defining relations:
///   X_ij X_il = q X_il X_ij             (j < l)
///   X_ij X_kj = q X_kj X_ij             (i < k)
///   X_il X_kj = X_kj X_il               (i < k, j < l)
///   X_ij X_kl - X_kl X_ij = (q - q^-1) X_il X_kj   (i < k, j < l)
/// each solved for the product whose left factor comes later.
inline qmv::Element straighten_words(const Shape& shape, std::map<std::vector<int>, Laurent> words) {
  const Laurent q = Laurent::q_power(1), qi = Laurent::q_power(-1);
  qmv::Element out(shape);
  while (!words.empty()) {
    auto it = words.begin();
    const std::vector<int> w = it->first;
    const Laurent c = it->second;
    words.erase(it);
    if (c.is_zero()) continue;
    std::size_t p = 0;
    while (p + 1 < w.size() && w[p] <= w[p + 1]) ++p;
    if (p + 1 >= w.size()) {
      qmv::Monomial mono;
      for (int g : w) mono.add(g);
      out.add_term(mono, c);
      continue;
    }
    const int i = w[p] / shape.n + 1, j = w[p] % shape.n + 1;          // later factor X_ij
    const int k = w[p + 1] / shape.n + 1, l = w[p + 1] % shape.n + 1;  // earlier factor X_kl
    auto replaced = [&](int a, int b) {
      std::vector<int> v = w;
      v[p] = a;
      v[p + 1] = b;
      return v;
    };
    const auto idx = [&](int r, int s) { return (r - 1) * shape.n + (s - 1); };
    if (i == k || j == l) {
      // X_il X_ij = q^-1 X_ij X_il and X_kj X_ij = q^-1 X_ij X_kj
      words[replaced(w[p + 1], w[p])] += qi * c;
    } else if (j < l) {
      words[replaced(w[p + 1], w[p])] += c;
    } else {
      // X_ij X_kl with k < i, l < j: X_kl X_ij - (q - q^-1) X_kj X_il.
      words[replaced(w[p + 1], w[p])] += c;
      words[replaced(idx(k, j), idx(i, l))] += -(q - qi) * c;
    }
  }
  return out;
}

inline qmv::Element word(const Shape& shape, const std::vector<int>& letters, Laurent c = 1) {
  return straighten_words(shape, {{letters, c}});
}

/// Product of two elements through the word oracle.
inline qmv::Element product(const qmv::Element& a, const qmv::Element& b) {
  std::map<std::vector<int>, Laurent> words;
  auto letters = [&](const qmv::Monomial& m) {
    std::vector<int> out;
    for (int i = 0; i < a.shape().generator_count(); ++i)
      for (int e = 0; e < m.exponent(i); ++e) out.push_back(i);
    return out;
  };
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto w = letters(ma);
      const auto wb = letters(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      words[w] += ca * cb;
    }
  return straighten_words(a.shape(), std::move(words));
}

/// Quantum minor by the permutation sum, multiplied through the oracle.
inline qmv::Element minor(const Shape& shape, const qmv::IndexSet& rows, const qmv::IndexSet& cols) {
  const int t = static_cast<int>(rows.size());
  std::vector<int> perm(static_cast<std::size_t>(t));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<int>, Laurent> words;
  do {
    int inversions = 0;
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    std::vector<int> w;
    for (int r = 0; r < t; ++r)
      w.push_back((rows[static_cast<std::size_t>(r)] - 1) * shape.n + cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] - 1);
    words[w] += Laurent::minus_q_power(inversions);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return straighten_words(shape, std::move(words));
}

inline long long binomial(long long n, long long k) {
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Every multiset of generators of total degree d, by recursion.
inline std::vector<qmv::Monomial> all_monomials(const Shape& shape, int degree) {
  std::vector<qmv::Monomial> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int left) -> void {
    if (left == 0) {
      qmv::Monomial m;
      for (int g : pick) m.add(g);
      out.push_back(m);
      return;
    }
    for (int g = start; g < shape.generator_count(); ++g) {
      pick.push_back(g);
      self(self, g, left - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace oracle
