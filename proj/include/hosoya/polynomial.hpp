#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact coefficients.
 *
 * coeffs()[i] is the coefficient of x^i. Trailing zeros are always trimmed,
 * so the zero polynomial has an empty coefficient vector and degree -1.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hosoya/bigint.hpp"
#include "hosoya/error.hpp"

namespace hosoya {

template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial x() { return Polynomial{T(0), T(1)}; }
  static Polynomial monomial(std::size_t power, const T& c = T(1)) {
    std::vector<T> coeffs(power + 1, T(0));
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
  }
  /// x - root
  static Polynomial linear(const T& root) { return Polynomial{T(-root), T(1)}; }

  const std::vector<T>& coeffs() const noexcept { return coeffs_; }
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }
  T constant_term() const { return coefficient(0); }

  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<std::int64_t>(i));
    return Polynomial(std::move(out));
  }

  /// p(q(x)) by Horner's scheme.
  Polynomial compose(const Polynomial& q) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= T(-1); }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

template <typename T>
Polynomial<T> pow(const Polynomial<T>& base, std::size_t exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  Polynomial<T> square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

/// Quotient and remainder of a / b where b's leading coefficient divides
/// every intermediate leading term (always true for b monic).
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<T> quot(rem.size() - db, T(0));
  const T lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const T q = exact_div(rem[i], lead);
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// a / b, throwing ExactnessError when b does not divide a.
template <typename T>
Polynomial<T> exact_quotient(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ExactnessError("polynomial division leaves a remainder");
  return q;
}

/// Divide by a leading coefficient of +1 or -1 so the result is monic.
inline IntPolynomial monic(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("monic: zero polynomial");
  const BigInt lead = p.leading();
  if (lead == 1) return p;
  if (lead == -1) return -p;
  std::vector<BigInt> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(exact_div(c, lead));
  return IntPolynomial(std::move(coeffs));
}

/// gcd of the coefficients, non-negative.
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, abs(c));
  return g;
}

/// p / content(p) with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> coeffs;
  for (const auto& c : p.coeffs()) coeffs.push_back(exact_div(c, g));
  return IntPolynomial(std::move(coeffs));
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b, computed over Z.
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> rem = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const BigInt lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    const BigInt top = rem[i];
    for (auto& c : rem) c *= lead;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= top * b.coeffs()[j];
    rem.resize(i);
  }
  return IntPolynomial(std::move(rem));
}

/// Primitive gcd over Q[x] (normalised to positive leading coefficient),
/// by the primitive polynomial remainder sequence.
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Low-to-high decimal strings, the exact wire form.
inline std::vector<std::string> serialize(const IntPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  if (out.empty()) out.push_back("0");
  return out;
}

/// Human-readable form in the variable `var`, highest power first.
inline std::string to_string(const IntPolynomial& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::int64_t i = p.degree(); i >= 0; --i) {
    const BigInt c = p.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace hosoya
