#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "weylchar/errors.hpp"

namespace weylchar {

// Tableau counts and beta values. Desk-scale values fit comfortably; every
// arithmetic step on a Count goes through the checked helpers below.
using Count = std::int64_t;

// Coefficients of symmetric-function expansions and externally supplied
// decomposition matrices.
using BigInt = boost::multiprecision::cpp_int;

inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("64-bit overflow in addition");
  return out;
}

inline Count checked_sub(Count a, Count b) {
  Count out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("64-bit overflow in subtraction");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("64-bit overflow in multiplication");
  return out;
}

inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }

inline std::string to_decimal(Count v) { return std::to_string(v); }
inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace weylchar
