#include "exponent_table.hpp"

#include "fit.hpp"

namespace qmv {

namespace {

// Generated by fit_exponents at each family's smallest size. Regenerate
// and bump kExponentTableVersion only after an intentional engine change.
const FrozenExponent kTable[] = {
    {"row-laplace", "i=1,k=1", "j=1", 0},
    {"row-laplace", "i=1,k=1", "j=2", 1},
    {"row-laplace", "i=1,k=2", "j=1", 0},
    {"row-laplace", "i=1,k=2", "j=2", 1},
    {"row-laplace", "i=2,k=1", "j=1", -1},
    {"row-laplace", "i=2,k=1", "j=2", 0},
    {"row-laplace", "i=2,k=2", "j=1", -1},
    {"row-laplace", "i=2,k=2", "j=2", 0},
    {"col-laplace", "j=1,l=1", "i=1", 0},
    {"col-laplace", "j=1,l=1", "i=2", -1},
    {"col-laplace", "j=1,l=2", "i=1", 0},
    {"col-laplace", "j=1,l=2", "i=2", -1},
    {"col-laplace", "j=2,l=1", "i=1", 1},
    {"col-laplace", "j=2,l=1", "i=2", 0},
    {"col-laplace", "j=2,l=2", "i=1", 1},
    {"col-laplace", "j=2,l=2", "i=2", 0},
    {"lemma23-case1", "I={1,2},J={1,2}", "j=1", 0},
    {"lemma23-case1", "I={1,2},J={1,2}", "j=2", -1},
    {"lemma23-case1", "I={1,2},J={1,2}", "j=3", -2},
    {"lemma23-case1", "I={1,3},J={1,2}", "j=1", 0},
    {"lemma23-case1", "I={1,3},J={1,2}", "j=2", -1},
    {"lemma23-case1", "I={1,3},J={1,2}", "j=3", -2},
    {"lemma23-case2", "I={2,3},J={1,3}", "i=1", 1},
    {"lemma23-case2", "I={2,3},J={1,3}", "i=2", 0},
    {"lemma23-case2", "I={2,3},J={1,3}", "i=3", -1},
    {"lemma23-case2", "I={2,3},J={2,3}", "i=1", 1},
    {"lemma23-case2", "I={2,3},J={2,3}", "i=2", 0},
    {"lemma23-case2", "I={2,3},J={2,3}", "i=3", -1},
    {"lemma23-eq1", "I={2,3},J={1,2}", "j=1", 0},
    {"lemma23-eq1", "I={2,3},J={1,2}", "j=2", -1},
    {"lemma23-eq1", "I={2,3},J={1,2}", "j=3", -2},
    {"lemma23-eq2", "I={2,3},J={1,2}", "j=1", 2},
    {"lemma23-eq2", "I={2,3},J={1,2}", "j=2", 1},
    {"lemma23-eq2", "I={2,3},J={1,2}", "j=3", 0},
    {"thm25-2prime", "I'={2},J'={1},l=2", "j=1", -1},
    {"thm25-2prime", "I'={3},J'={1},l=2", "j=1", -1},
    {"thm25-4prime", "I'={3},J'={1},k=2", "j=3", 1},
    {"thm25-4prime", "I'={3},J'={2},k=2", "j=3", 1},
};

}  // namespace

std::span<const FrozenExponent> frozen_exponents() { return kTable; }

std::vector<const FrozenExponent*> frozen_entries(const std::string& family, const std::string& instance) {
  std::vector<const FrozenExponent*> out;
  for (const auto& entry : kTable)
    if (family == entry.family && (instance.empty() || instance == entry.instance)) out.push_back(&entry);
  return out;
}

std::vector<std::string> fit_regression(const std::string& family) {
  const ExponentFit fit = fit_exponents(family);
  const auto frozen = frozen_entries(family, "");
  std::vector<std::string> problems;
  if (fit.status != SolveStatus::unique) problems.push_back(std::string("fit is ") + to_string(fit.status));
  if (!fit.residual_zero) problems.push_back("nonzero residual");
  if (fit.table.size() != frozen.size())
    problems.push_back("fit has " + std::to_string(fit.table.size()) + " entries, table has " +
                       std::to_string(frozen.size()));
  for (std::size_t i = 0; i < fit.table.size() && i < frozen.size(); ++i) {
    const auto& got = fit.table[i];
    const auto& want = *frozen[i];
    const std::string where = got.instance + " " + got.term;
    if (got.instance != want.instance || got.term != want.term) {
      problems.push_back("entry " + std::to_string(i) + " is " + where + ", table has " + want.instance + " " + want.term);
    } else if (!got.exponent) {
      problems.push_back(where + ": coefficient is not a power of -q");
    } else if (*got.exponent != want.exponent) {
      problems.push_back(where + ": fitted " + std::to_string(*got.exponent) + ", table " + std::to_string(want.exponent));
    }
  }
  return problems;
}

}  // namespace qmv
