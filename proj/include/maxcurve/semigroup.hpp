// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups, Weierstrass non-gap sequences and the
 *        non-gap / order duality at rational points of maximal curves.
 *
 * Indexing convention: non-gap sequences always start with m_0 = 0, and
 * order sequences with j_0 = 0. nongap(s, 1) is the first positive non-gap.
 */

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxcurve/common.hpp"

namespace maxcurve {

/// Table size above which semigroup construction is refused.
inline constexpr Int kMaxSemigroupTable = 100'000'000;

namespace detail {

inline void require_zero_start_increasing(const std::vector<Int>& v, const char* what) {
  if (v.empty() || v.front() != 0) throw std::invalid_argument(std::string(what) + " must start at 0");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) throw std::invalid_argument(std::string(what) + " must be strictly increasing");
  }
}

}  // namespace detail

/// Strictly increasing m_0 = 0 < m_1 < m_2 < ...
class NonGapSequence {
 public:
  explicit NonGapSequence(std::vector<Int> values) : values_(std::move(values)) {
    detail::require_zero_start_increasing(values_, "non-gap sequence");
  }
  const std::vector<Int>& values() const noexcept { return values_; }
  Int operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }
  friend bool operator==(const NonGapSequence&, const NonGapSequence&) = default;

 private:
  std::vector<Int> values_;
};

/// Strictly increasing j_0 = 0 < j_1 < ... < j_N.
class OrderSequence {
 public:
  explicit OrderSequence(std::vector<Int> values) : values_(std::move(values)) {
    detail::require_zero_start_increasing(values_, "order sequence");
  }
  const std::vector<Int>& values() const noexcept { return values_; }
  Int operator[](std::size_t i) const { return values_.at(i); }
  std::size_t size() const noexcept { return values_.size(); }
  friend bool operator==(const OrderSequence&, const OrderSequence&) = default;

 private:
  std::vector<Int> values_;
};

/// Submonoid of N_0 generated by a finite set with gcd 1.
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(std::vector<Int> gens) {
    if (gens.empty()) throw std::invalid_argument("semigroup needs at least one generator");
    for (Int g : gens) {
      if (g <= 0) throw std::invalid_argument("generators must be positive");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) throw MathError("generators have gcd " + std::to_string(g) + ", not 1");

    // The Frobenius number is below min * max (Schur's bound).
    const Int bound = saturating_mul(gens.front(), gens.back());
    if (bound > kMaxSemigroupTable) throw std::invalid_argument("generators too large for the membership table");

    std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
    member[0] = true;
    for (Int n = 1; n <= bound; ++n) {
      for (Int a : gens) {
        if (a <= n && member[n - a]) {
          member[n] = true;
          break;
        }
      }
    }

    NumericalSemigroup s;
    s.gens_ = std::move(gens);
    for (Int n = 0; n <= bound; ++n) {
      if (!member[n]) s.gaps_.push_back(n);
    }
    s.conductor_ = s.gaps_.empty() ? 0 : s.gaps_.back() + 1;
    member.resize(static_cast<std::size_t>(s.conductor_) + 1);
    s.member_ = std::move(member);
    return s;
  }

  const std::vector<Int>& generators() const noexcept { return gens_; }

  bool contains(Int n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[static_cast<std::size_t>(n)];
  }

  /// Number of gaps.
  Int genus() const noexcept { return static_cast<Int>(gaps_.size()); }
  const std::vector<Int>& gaps() const noexcept { return gaps_; }

  /// Largest gap, or -1 for N_0.
  Int frobenius_number() const noexcept { return conductor_ - 1; }
  Int conductor() const noexcept { return conductor_; }

  /// m_i, 0-indexed with m_0 = 0.
  Int nongap(Int i) const {
    if (i < 0) throw std::invalid_argument("negative non-gap index");
    // Among 0..conductor-1 there are conductor - genus non-gaps.
    const Int below = conductor_ - genus();
    if (i >= below) return conductor_ + (i - below);
    Int seen = -1;
    for (Int n = 0; n < conductor_; ++n) {
      if (member_[static_cast<std::size_t>(n)] && ++seen == i) return n;
    }
    throw std::logic_error("non-gap enumeration out of sync");
  }

  /// m_0, ..., m_{count-1}.
  NonGapSequence nongaps(Int count) const {
    if (count < 1) throw std::invalid_argument("need at least one non-gap");
    std::vector<Int> out;
    for (Int n = 0; static_cast<Int>(out.size()) < count; ++n) {
      if (contains(n)) out.push_back(n);
    }
    return NonGapSequence(std::move(out));
  }

 private:
  NumericalSemigroup() = default;

  std::vector<Int> gens_;
  std::vector<Int> gaps_;
  std::vector<bool> member_;
  Int conductor_ = 0;
};

/// Orders at a rational point from its first N + 1 non-gaps:
/// j_{N-i} = q + 1 - m_i for i = 0..N.
inline OrderSequence orders_from_nongaps(Int q, const NonGapSequence& nongaps, Int n) {
  if (n < 1) throw std::invalid_argument("dimension N must be >= 1");
  if (static_cast<Int>(nongaps.size()) < n + 1) throw std::invalid_argument("need at least N + 1 non-gaps");
  std::vector<Int> orders(static_cast<std::size_t>(n) + 1);
  for (Int i = 0; i <= n; ++i) orders[static_cast<std::size_t>(n - i)] = q + 1 - nongaps[static_cast<std::size_t>(i)];
  if (orders.front() != 0) {
    throw MathError("inconsistent non-gaps: m_N = " + std::to_string(nongaps[static_cast<std::size_t>(n)]) +
                    " but a rational point needs m_N = q + 1 = " + std::to_string(q + 1));
  }
  return OrderSequence(std::move(orders));
}

/// Inverse of orders_from_nongaps: m_i = q + 1 - j_{N-i}, N = orders.size() - 1.
inline NonGapSequence nongaps_from_orders(Int q, const OrderSequence& orders) {
  const std::size_t n = orders.size() - 1;
  if (orders[n] != q + 1) throw MathError("last order at a rational point must be q + 1");
  std::vector<Int> m(n + 1);
  for (std::size_t i = 0; i <= n; ++i) m[i] = q + 1 - orders[n - i];
  return NonGapSequence(std::move(m));
}

/// m_1 < ... < m_{N-1} = q < m_N, the profile every point of a maximal
/// curve with dim(D_X) = N must show.
inline bool check_nongap_profile(Int q, Int n, const NonGapSequence& nongaps) {
  if (n < 1) throw std::invalid_argument("dimension N must be >= 1");
  if (static_cast<Int>(nongaps.size()) < n + 1) throw std::invalid_argument("need at least N + 1 non-gaps");
  return nongaps[static_cast<std::size_t>(n - 1)] == q && nongaps[static_cast<std::size_t>(n)] > q;
}

/// Which extremal relation a non-gap m satisfies against q: m(N-1) = q + 1
/// or m(N-1) = q. Both force genus c_0(q + 1, N), attached as `genus`.
struct NonGapCase {
  enum class Tag { kQPlusOne, kQ, kNeither };
  Tag tag = Tag::kNeither;
  std::optional<Rational> genus;
};

inline NonGapCase classify_nongap_case(Int q, Int n, Int m) {
  if (m < 1) throw std::invalid_argument("non-gap m must be >= 1");
  if (n < 2) throw std::invalid_argument("dimension N must be >= 2");
  const Int span = n - 1;
  if (m * span == q + 1) {
    return {NonGapCase::Tag::kQPlusOne, Rational(q - 1) * (Rational(q + 1, span) - 1) / 2};
  }
  if (m * span == q) {
    return {NonGapCase::Tag::kQ, Rational(q * (q - span), 2 * span)};
  }
  return {};
}

inline const char* to_string(NonGapCase::Tag tag) {
  switch (tag) {
    case NonGapCase::Tag::kQPlusOne:
      return "q_plus_one";
    case NonGapCase::Tag::kQ:
      return "q";
    case NonGapCase::Tag::kNeither:
      break;
  }
  return "neither";
}

}  // namespace maxcurve
