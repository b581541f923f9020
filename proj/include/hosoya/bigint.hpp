#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hosoya/error.hpp"

namespace hosoya {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt abs(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

/// Floor of the square root; domain error for negative input.
inline BigInt isqrt(const BigInt& value) {
  if (value < 0) throw DomainError("isqrt: negative argument");
  return boost::multiprecision::sqrt(value);
}

inline bool is_perfect_square(const BigInt& value) {
  if (value < 0) return false;
  const BigInt root = isqrt(value);
  return root * root == value;
}

/// a / b, throwing ExactnessError if b does not divide a.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw ExactnessError("exact_div: division by zero");
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(a, b, quotient, remainder);
  if (remainder != 0) {
    throw ExactnessError("exact_div: " + a.str() + " is not divisible by " + b.str());
  }
  return quotient;
}

/// True iff d divides n; every non-zero d divides 0.
inline bool divides(const BigInt& d, const BigInt& n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

}  // namespace hosoya
