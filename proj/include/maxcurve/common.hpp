// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace maxcurve {

/// Signed integer used for every count, genus and field size. 63 usable bits.
using Int = std::int64_t;

/// Exact rational used by every bound formula.
using Rational = boost::rational<Int>;

/// Raised when a computation is mathematically inconsistent with its inputs
/// (non-integral genus, non-monotone order sequence, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an enumeration would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(Int required, Int budget)
      : std::runtime_error("work budget exceeded: need ~" + std::to_string(required) +
                           " element operations, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  Int required() const noexcept { return required_; }
  Int budget() const noexcept { return budget_; }

 private:
  Int required_;
  Int budget_;
};

inline Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
  return out;
}

inline Int checked_pow(Int base, Int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Int out = 1;
  for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

/// Saturating product, used only for work estimates.
inline Int saturating_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<Int>::max();
  return out;
}

/// Non-negative residue of a modulo m (m > 0).
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int d = a / b;
  return (a % b != 0 && a < 0) ? d - 1 : d;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace maxcurve
