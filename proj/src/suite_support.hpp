#pragma once

// Shared helpers for the suite implementations.

#include "localize.hpp"
#include "report.hpp"
#include "verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmv::detail {

class Checker {
 public:
  void expect(std::string name, bool ok, std::string witness = {});
  void same(std::string name, const Element& lhs, const Element& rhs);
  void same(std::string name, const Localized& lhs, const Localized& rhs);
  /// Records one check per problem, or a single passing check if none.
  void no_problems(const std::string& name, const std::vector<std::string>& problems);

  std::vector<CheckResult> results;
};

/// splitmix64; reproducible across platforms for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [lo, hi].
  int between(int lo, int hi);

 private:
  std::uint64_t state_;
};

Monomial random_monomial(Rng& rng, const Shape& shape, int max_degree);
Laurent random_scalar(Rng& rng);
/// 1 to 3 terms of degree <= max_degree.
Element random_element(Rng& rng, const Shape& shape, int max_degree);

std::string gen_label(const std::string& symbol, int row, int col);
std::string set_label(const IndexSet& set);
std::string minor_label(const std::string& symbol, const MinorSpec& spec);

inline Laurent q_pow(int k) { return Laurent::q_power(k); }
inline Laurent mq_pow(int k) { return Laurent::minus_q_power(k); }

/// Minor sizes to run: params.t when set (validated against lo..hi),
/// otherwise lo..hi.
std::vector<int> sizes_for(const SuiteParams& params, int lo, int hi, const std::string& suite);

using SuiteFn = void (*)(Checker&, const Shape&, const SuiteParams&);

void suite_eq1_relations(Checker&, const Shape&, const SuiteParams&);
void suite_appendix(Checker&, const Shape&, const SuiteParams&);
void suite_lemma111(Checker&, const Shape&, const SuiteParams&);
void suite_prop112(Checker&, const Shape&, const SuiteParams&);
void suite_thm21(Checker&, const Shape&, const SuiteParams&);
void suite_cor22(Checker&, const Shape&, const SuiteParams&);
void suite_lemma23(Checker&, const Shape&, const SuiteParams&);
void suite_thm25(Checker&, const Shape&, const SuiteParams&);
void suite_centrality(Checker&, const Shape&, const SuiteParams&);
void suite_semicentrality(Checker&, const Shape&, const SuiteParams&);
void suite_laplace(Checker&, const Shape&, const SuiteParams&);
void suite_pbw_count(Checker&, const Shape&, const SuiteParams&);
void suite_grading(Checker&, const Shape&, const SuiteParams&);
void suite_jordan_obstruction(Checker&, const Shape&, const SuiteParams&);
void suite_engine(Checker&, const Shape&, const SuiteParams&);

}  // namespace qmv::detail
