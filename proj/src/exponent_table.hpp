#pragma once

// Frozen table of fitted (-q)^k exponents. A fresh fit that disagrees with
// the table means the rewriting engine changed behaviour.

#include <span>
#include <string>
#include <vector>

namespace qmv {

inline constexpr int kExponentTableVersion = 1;

struct FrozenExponent {
  const char* family;
  const char* instance;
  const char* term;
  int exponent;
};

std::span<const FrozenExponent> frozen_exponents();

/// Entries of one family, optionally restricted to one instance label.
std::vector<const FrozenExponent*> frozen_entries(const std::string& family, const std::string& instance);

/// Refits the family at its smallest size and lists every disagreement
/// with the frozen table; empty when they agree.
std::vector<std::string> fit_regression(const std::string& family);

}  // namespace qmv
