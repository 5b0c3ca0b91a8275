#include "scalar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qmv {

namespace {

std::string render_power(int e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

// Magnitude part of one term, sign excluded.
std::string render_term(const BigInt& magnitude, int e) {
  if (e == 0) return magnitude.str();
  if (magnitude == 1) return render_power(e);
  return magnitude.str() + "*" + render_power(e);
}

}  // namespace

Laurent::Laurent(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

Laurent::Laurent(BigInt coeff, int exponent) {
  if (coeff != 0) terms_.emplace_back(exponent, std::move(coeff));
}

Laurent Laurent::minus_q_power(int k) {
  return Laurent(BigInt((k % 2 == 0) ? 1 : -1), k);
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("exponent of zero Laurent polynomial");
  return terms_.front().first;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("exponent of zero Laurent polynomial");
  return terms_.back().first;
}

Laurent Laurent::operator-() const {
  Laurent out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent& Laurent::operator*=(const Laurent& other) {
  *this = *this * other;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1) {
    const auto& [eb, cb] = b.terms_[0];
    std::vector<Laurent::Term> out;
    out.reserve(a.terms_.size());
    for (const auto& [ea, ca] : a.terms_) out.emplace_back(ea + eb, ca * cb);
    return Laurent(std::move(out));
  }
  if (a.terms_.size() == 1) return b * a;
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  std::vector<Laurent::Term> out;
  for (int i = 0; i < static_cast<int>(dense.size()); ++i)
    if (dense[i] != 0) out.emplace_back(lo + i, std::move(dense[i]));
  return Laurent(std::move(out));
}

Laurent Laurent::shifted(int k) const {
  Laurent out(*this);
  for (auto& [e, c] : out.terms_) e += k;
  return out;
}

Laurent Laurent::bar() const {
  std::vector<Term> out(terms_.rbegin(), terms_.rend());
  for (auto& [e, c] : out) e = -e;
  return Laurent(std::move(out));
}

Rational Laurent::eval(const Rational& q0) const {
  if (q0 == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    const Rational base = e >= 0 ? q0 : Rational(1) / q0;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    total += Rational(c) * p;
  }
  return total;
}

std::optional<Laurent> Laurent::exact_div(const Laurent& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (is_zero()) return Laurent{};
  // Work in Z[q] after shifting both operands to start at q^0.
  const int shift = min_exponent() - divisor.min_exponent();
  const int dlo = divisor.min_exponent();
  const int ddeg = divisor.max_exponent() - dlo;
  const int lo = min_exponent();
  std::vector<BigInt> rem(static_cast<std::size_t>(max_exponent() - lo + 1));
  for (const auto& [e, c] : terms_) rem[e - lo] = c;
  std::vector<BigInt> dv(static_cast<std::size_t>(ddeg + 1));
  for (const auto& [e, c] : divisor.terms_) dv[e - dlo] = c;
  const BigInt& lead = dv.back();
  const int rdeg = static_cast<int>(rem.size()) - 1;
  if (rdeg < ddeg) return std::nullopt;
  std::vector<BigInt> quot(static_cast<std::size_t>(rdeg - ddeg + 1));
  for (int top = rdeg; top >= ddeg; --top) {
    if (rem[top] == 0) continue;
    if (rem[top] % lead != 0) return std::nullopt;
    BigInt factor = rem[top] / lead;
    const int pos = top - ddeg;
    for (int i = 0; i <= ddeg; ++i) rem[pos + i] -= factor * dv[i];
    quot[pos] = std::move(factor);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<Term> out;
  for (int i = 0; i < static_cast<int>(quot.size()); ++i)
    if (quot[i] != 0) out.emplace_back(i + shift, std::move(quot[i]));
  return Laurent(std::move(out));
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->second < 0;
    const BigInt magnitude = negative ? BigInt(-it->second) : it->second;
    if (it == terms_.rbegin()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += render_term(magnitude, it->first);
  }
  return out;
}

std::size_t Laurent::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& [e, c] : terms_) {
    h ^= std::hash<int>{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= boost::multiprecision::hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Laurent scalar_add(const Laurent& a, const Laurent& b) { return a + b; }
Laurent scalar_mul(const Laurent& a, const Laurent& b) { return a * b; }
Rational scalar_eval(const Laurent& a, const Rational& q0) { return a.eval(q0); }

ScalarFraction::ScalarFraction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("ScalarFraction with zero denominator");
}

ScalarFraction operator+(const ScalarFraction& a, const ScalarFraction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

ScalarFraction operator-(const ScalarFraction& a, const ScalarFraction& b) { return a + (-b); }

ScalarFraction operator*(const ScalarFraction& a, const ScalarFraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

ScalarFraction operator/(const ScalarFraction& a, const ScalarFraction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero ScalarFraction");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const ScalarFraction& a, const ScalarFraction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::optional<Laurent> ScalarFraction::as_laurent() const { return num_.exact_div(den_); }

std::optional<int> ScalarFraction::as_minus_q_power() const {
  if (num_.is_zero()) return std::nullopt;
  const int k = num_.max_exponent() - den_.max_exponent();
  if (num_ == Laurent::minus_q_power(k) * den_) return k;
  return std::nullopt;
}

std::string ScalarFraction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qmv
