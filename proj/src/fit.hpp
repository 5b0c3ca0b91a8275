#pragma once

// Exponent fitting for expansion identities whose (-q)^k coefficients are
// not pinned down in closed form: each identity is posed as a linear system
// in the unknown coefficients over Q(q) and solved exactly.

#include "linsolve.hpp"
#include "localize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qmv {

/// One summand c * value of an expansion, with the exponent the frozen law
/// predicts for c = (-q)^k.
struct ExpansionTerm {
  std::string label;
  Localized value;
  int law_exponent = 0;
};

/// sum_i (-q)^{k_i} terms[i].value = target.
struct ExpansionInstance {
  std::string label;
  std::vector<ExpansionTerm> terms;
  Localized target;
};

struct FittedTerm {
  std::string instance;
  std::string term;
  std::optional<int> exponent;  // nullopt: coefficient is not a power of -q
  int law_exponent = 0;
};

struct ExponentFit {
  std::string family;
  std::string size;
  SolveStatus status = SolveStatus::none;
  std::vector<FittedTerm> table;
  bool residual_zero = false;

  /// Unique, residual zero, and every fitted exponent equals the law.
  bool matches_law() const;
};

/// Registered family names, in catalog order.
const std::vector<std::string>& fit_families();

/// Smallest shape/size at which the family is fitted.
struct FitSize {
  Shape shape;
  int t = 0;
};
FitSize smallest_fit_size(const std::string& family);

/// All instances of a family at the given shape and minor size t (t is
/// ignored by the Laplace families). Throws UnsupportedError for unknown
/// families.
std::vector<ExpansionInstance> expansion_instances(const std::string& family, const Shape& shape, int t);

/// Fits one instance. Homogeneous instances (target zero) are normalized by
/// pinning the first coefficient to its law value.
ExponentFit fit_instance(const std::string& family, const ExpansionInstance& instance);
/// Fits every instance of the family at the given size.
ExponentFit fit_exponents(const std::string& family, const Shape& shape, int t);
ExponentFit fit_exponents(const std::string& family);

/// Evaluates sum (-q)^{law} term - target; zero iff the law holds exactly.
Localized law_residual(const ExpansionInstance& instance);

}  // namespace qmv
