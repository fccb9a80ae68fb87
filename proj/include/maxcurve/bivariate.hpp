// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "maxcurve/field.hpp"

namespace maxcurve {

/// Sparse polynomial in x, y over a finite field. Terms are keyed by
/// (x exponent, y exponent); zero coefficients are never stored.
class BivariatePoly {
 public:
  using Exponents = std::pair<int, int>;

  explicit BivariatePoly(FieldCtx field) : field_(std::move(field)) {}

  const FieldCtx& field() const noexcept { return field_; }
  const std::map<Exponents, FieldElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * x^i y^j, merging with an existing term.
  void add_term(int x_exp, int y_exp, const FieldElement& c) {
    if (x_exp < 0 || y_exp < 0) throw std::invalid_argument("negative exponent");
    if (!field_.contains(c)) throw std::invalid_argument("coefficient is not in the polynomial's field");
    const Exponents key{x_exp, y_exp};
    auto it = terms_.find(key);
    FieldElement sum = it == terms_.end() ? c : field_.add(it->second, c);
    if (sum.is_zero()) {
      if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
      terms_.emplace(key, std::move(sum));
    } else {
      it->second = std::move(sum);
    }
  }

  void add_term(int x_exp, int y_exp, Int c) { add_term(x_exp, y_exp, field_.from_integer(c)); }

  /// Coefficient of x^i y^j (zero when absent).
  FieldElement coefficient(int x_exp, int y_exp) const {
    auto it = terms_.find({x_exp, y_exp});
    return it == terms_.end() ? field_.zero() : it->second;
  }

  int degree_x() const noexcept {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
  }

  int degree_y() const noexcept {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
  }

  int total_degree() const noexcept {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  /// Terms of maximal total degree.
  BivariatePoly leading_form() const {
    BivariatePoly out(field_);
    const int d = total_degree();
    for (const auto& [e, c] : terms_) {
      if (e.first + e.second == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  FieldElement evaluate(const FieldElement& x, const FieldElement& y) const {
    FieldElement acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      FieldElement term = field_.mul(c, field_.mul(field_.pow(x, e.first), field_.pow(y, e.second)));
      acc = field_.add(acc, term);
    }
    return acc;
  }

  /// Coefficients of the univariate polynomial in y obtained by fixing x;
  /// entry j multiplies y^j.
  std::vector<FieldElement> specialize_x(const FieldElement& x) const {
    std::vector<FieldElement> powers{field_.one()};
    for (int i = 1; i <= degree_x(); ++i) powers.push_back(field_.mul(powers.back(), x));
    std::vector<FieldElement> out(static_cast<std::size_t>(degree_y()) + 1, field_.zero());
    for (const auto& [e, c] : terms_) {
      out[e.second] = field_.add(out[e.second], field_.mul(c, powers[e.first]));
    }
    return out;
  }

  /// Human-readable form, highest y power first; prime-field coefficient
  /// p - 1 prints as a minus sign.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, FieldElement>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      if (a.first.second != b.first.second) return a.first.second > b.first.second;
      return a.first.first > b.first.first;
    });
    const bool prime_field = field_.degree() == 1;
    const FieldElement minus_one = field_.from_integer(-1);
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : sorted) {
      bool negative = field_.characteristic() > 2 && c == minus_one;
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      const bool unit = c == field_.one() || negative;
      std::string mono;
      auto power = [](const char* v, int n) {
        return n == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(n);
      };
      if (e.first > 0) mono += power("x", e.first);
      if (e.second > 0) mono += (mono.empty() ? "" : "*") + power("y", e.second);
      if (mono.empty()) {
        os << (negative ? "1" : field_.to_string(c));
      } else if (unit) {
        os << mono;
      } else {
        os << (prime_field ? field_.to_string(c) : "(" + field_.to_string(c) + ")") << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  FieldCtx field_;
  std::map<Exponents, FieldElement> terms_;
};

}  // namespace maxcurve
