#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadsg {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// gcd(a, b) != 1, so S(a, b) has an infinite complement in N0.
class NotANumericalSemigroup : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A 64-bit intermediate would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A table or buffer would exceed the configured memory budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(x) + " + " + std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(x) + " - " + std::to_string(y));
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(x) + " * " + std::to_string(y));
  }
  return r;
}

/// Floor division and modulus for a positive divisor.
inline std::int64_t floor_div(std::int64_t x, std::int64_t d) {
  std::int64_t q = x / d;
  if ((x % d != 0) && (x < 0)) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t x, std::int64_t d) {
  std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

inline std::int64_t ceil_div(std::int64_t x, std::int64_t d) { return -floor_div(-x, d); }

}  // namespace quadsg
