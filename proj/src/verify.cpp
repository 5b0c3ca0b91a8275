#include "verify.hpp"

#include "suite_support.hpp"

#include <chrono>
#include <utility>

namespace qmv {

namespace detail {

void Checker::expect(std::string name, bool ok, std::string witness) {
  results.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
}

void Checker::same(std::string name, const Element& lhs, const Element& rhs) {
  const Element diff = lhs - rhs;
  expect(std::move(name), diff.is_zero(), diff.is_zero() ? "" : "lhs - rhs = " + to_string(diff));
}

void Checker::same(std::string name, const Localized& lhs, const Localized& rhs) {
  const Localized diff = lhs - rhs;
  expect(std::move(name), diff.is_zero(), diff.is_zero() ? "" : "lhs - rhs = " + to_string(diff));
}

void Checker::no_problems(const std::string& name, const std::vector<std::string>& problems) {
  if (problems.empty()) expect(name, true);
  for (const auto& p : problems) expect(name, false, p);
}

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::between(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Monomial random_monomial(Rng& rng, const Shape& shape, int max_degree) {
  Monomial mono;
  const int degree = rng.between(0, max_degree);
  for (int k = 0; k < degree; ++k) mono.add(rng.between(0, shape.generator_count() - 1));
  return mono;
}

Laurent random_scalar(Rng& rng) {
  int c = rng.between(-3, 2);
  if (c >= 0) ++c;
  return Laurent(c) * Laurent::q_power(rng.between(-2, 2));
}

Element random_element(Rng& rng, const Shape& shape, int max_degree) {
  Element out(shape);
  const int terms = rng.between(1, 3);
  for (int k = 0; k < terms; ++k) out.add_term(random_monomial(rng, shape, max_degree), random_scalar(rng));
  return out;
}

std::string gen_label(const std::string& symbol, int row, int col) {
  return symbol + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

std::string set_label(const IndexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

std::string minor_label(const std::string& symbol, const MinorSpec& spec) {
  return symbol + "[" + set_label(spec.rows) + "|" + set_label(spec.cols) + "]";
}

std::vector<int> sizes_for(const SuiteParams& params, int lo, int hi, const std::string& suite) {
  if (params.t) {
    if (*params.t < lo || *params.t > hi)
      throw UnsupportedError("suite " + suite + " accepts t in " + std::to_string(lo) + ".." + std::to_string(hi) +
                             " for this shape, got " + std::to_string(*params.t));
    return {*params.t};
  }
  std::vector<int> out;
  for (int t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

}  // namespace detail

namespace {

struct SuiteEntry {
  const char* name;
  detail::SuiteFn run;
  bool square;
};

const std::vector<SuiteEntry>& registry() {
  using namespace detail;
  static const std::vector<SuiteEntry> entries = {
      {"eq1-relations", suite_eq1_relations, false},
      {"appendix", suite_appendix, false},
      {"prop112", suite_prop112, false},
      {"lemma111", suite_lemma111, false},
      {"thm21", suite_thm21, true},
      {"cor22", suite_cor22, false},
      {"lemma23", suite_lemma23, false},
      {"thm25", suite_thm25, false},
      {"centrality", suite_centrality, true},
      {"semicentrality", suite_semicentrality, false},
      {"laplace", suite_laplace, true},
      {"pbw-count", suite_pbw_count, false},
      {"grading", suite_grading, false},
      {"jordan-obstruction", suite_jordan_obstruction, true},
      {"engine", suite_engine, false},
  };
  return entries;
}

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& entry : registry())
    if (name == entry.name) return entry;
  throw UnsupportedError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

Shape suite_shape(const std::string& name, const SuiteParams& params) {
  const SuiteEntry& entry = find_suite(name);
  const int m = params.m.value_or(params.n.value_or(3));
  const int n = params.n.value_or(params.m.value_or(3));
  const Shape shape(m, n);
  if (entry.square && !shape.square()) throw ShapeError("suite " + name + " needs a square shape, got " + shape.to_string());
  return shape;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  const SuiteEntry& entry = find_suite(name);
  const Shape shape = suite_shape(name, params);
  const auto start = std::chrono::steady_clock::now();
  detail::Checker checker;
  entry.run(checker, shape, params);
  SuiteReport report{name, shape.to_string(), std::move(checker.results), 0.0};
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qmv
