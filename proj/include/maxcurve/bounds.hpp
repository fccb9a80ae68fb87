// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/**
 * @file bounds.hpp
 * @brief Genus bounds for curves of degree d in P^r and for F_{q^2}-maximal
 *        curves, the small-q genus spectra, and the classification tables.
 *
 * Everything is exact: integers where the formula is integral (asserted),
 * Rational elsewhere, floors only where the closed forms floor.
 *
 * The Castelnuovo/Halphen gap predicate is conjectural and is reported
 * separately from proven exclusions everywhere.
 */

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxcurve/common.hpp"
#include "maxcurve/field.hpp"
#include "maxcurve/semigroup.hpp"

namespace maxcurve {

struct CastelnuovoValue {
  Int value = 0;
  /// 0 <= eps <= r - 2 with d - 1 = eps mod (r - 1).
  Int eps = 0;
};

/// Castelnuovo's number c_0(d, r) = (d-1-eps)(d-r+eps) / (2(r-1)).
inline CastelnuovoValue castelnuovo_c0(Int d, Int r) {
  if (r < 2 || d < r) throw std::invalid_argument("castelnuovo_c0 needs r >= 2 and d >= r");
  const Int eps = mod(d - 1, r - 1);
  const Rational v = Rational(d - 1 - eps, 2 * (r - 1)) * (d - r + eps);
  if (v.denominator() != 1) throw std::logic_error("c_0 not integral");
  return {v.numerator(), eps};
}

struct HalphenValue {
  Int value = 0;
  /// 0 <= eps1 <= r - 1 with d - 1 = eps1 mod r.
  Int eps1 = 0;
};

/// Halphen's number c_1(d, r) = (d-1-e)(d-r+e+1)/(2r) + [e = r-1].
inline HalphenValue halphen_c1(Int d, Int r) {
  if (r < 3 || d < r) throw std::invalid_argument("halphen_c1 needs r >= 3 and d >= r");
  const Int eps1 = mod(d - 1, r);
  const Rational v = Rational(d - 1 - eps1, 2 * r) * (d - r + eps1 + 1) + (eps1 == r - 1 ? 1 : 0);
  if (v.denominator() != 1) throw std::logic_error("c_1 not integral");
  if (r == 3 && v.numerator() != floor_div(d * d - 3 * d + 6, 6)) {
    throw std::logic_error("c_1(d, 3) disagrees with floor((d^2 - 3d + 6)/6)");
  }
  return {v.numerator(), eps1};
}

/// Closed-form upper estimate of c_0(d, r):
/// (d-1-(r-1)/2)^2 / (2(r-1)) for odd r, ((d-1-(r-1)/2)^2 - 1/4) / (2(r-1)) for even r.
inline Rational castelnuovo_upper_estimate(Int d, Int r) {
  if (r < 2) throw std::invalid_argument("castelnuovo_upper_estimate needs r >= 2");
  const Rational center = Rational(d - 1) - Rational(r - 1, 2);
  Rational num = center * center;
  if (r % 2 == 0) num -= Rational(1, 4);
  return num / (2 * (r - 1));
}

/// Genus bound for a maximal curve with dim(D_X) = N (degree q + 1 in P^N).
inline Rational dimension_genus_bound(Int q, Int n) {
  if (n < 2) throw std::invalid_argument("dimension_genus_bound needs N >= 2");
  return castelnuovo_upper_estimate(q + 1, n);
}

inline Int ihara_bound(Int q) { return q * (q - 1) / 2; }
inline Int second_genus_bound(Int q) { return floor_div((q - 1) * (q - 1), 4); }
inline Int third_genus_bound(Int q) { return floor_div(q * q - q + 4, 6); }

inline bool has_known_spectrum(Int q) { return q >= 2 && q <= 5; }

/// Complete genus spectrum of F_{q^2}-maximal curves for q in {2, 3, 4, 5}.
inline std::vector<Int> known_spectrum(Int q) {
  switch (q) {
    case 2:
      return {0, 1};
    case 3:
      return {0, 1, 3};
    case 4:
      return {0, 1, 2, 6};
    case 5:
      return {0, 1, 2, 3, 4, 10};
    default:
      throw std::out_of_range("no spectrum table for q = " + std::to_string(q));
  }
}

enum class Trichotomy { kBelowThird, kEqualsSecond, kEqualsHermitian, kExcluded };

inline const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::kBelowThird:
      return "below_third";
    case Trichotomy::kEqualsSecond:
      return "equals_second";
    case Trichotomy::kEqualsHermitian:
      return "equals_hermitian";
    case Trichotomy::kExcluded:
      break;
  }
  return "excluded";
}

inline Trichotomy trichotomy_from_string(const std::string& s) {
  for (Trichotomy t : {Trichotomy::kBelowThird, Trichotomy::kEqualsSecond, Trichotomy::kEqualsHermitian,
                       Trichotomy::kExcluded}) {
    if (s == to_string(t)) return t;
  }
  throw std::invalid_argument("unknown trichotomy tag '" + s + "'");
}

struct TrichotomyVerdict {
  Trichotomy tag = Trichotomy::kExcluded;
  Int ihara = 0;
  Int second = 0;
  Int third = 0;
  /// True when the verdict came from the small-q spectrum table.
  bool from_table = false;
};

/// g <= third, g = second or g = q(q-1)/2; otherwise excluded. For q <= 5
/// membership in the spectrum table decides. Tags are checked in the order
/// hermitian, below_third, second.
inline TrichotomyVerdict trichotomy_classify(Int q, Int g) {
  PrimePower::from_value(q);
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  TrichotomyVerdict v{Trichotomy::kExcluded, ihara_bound(q), second_genus_bound(q), third_genus_bound(q), false};
  bool admissible = true;
  if (has_known_spectrum(q)) {
    const auto table = known_spectrum(q);
    admissible = std::find(table.begin(), table.end(), g) != table.end();
    v.from_table = true;
  }
  if (!admissible) return v;
  if (g == v.ihara) v.tag = Trichotomy::kEqualsHermitian;
  else if (g <= v.third) v.tag = Trichotomy::kBelowThird;
  else if (g == v.second) v.tag = Trichotomy::kEqualsSecond;
  else if (v.from_table) throw std::logic_error("spectrum table entry outside the trichotomy");
  return v;
}

/// Open interval (c_1(q+1, r), c_0(q+1, r)) that the conjecture says holds
/// no maximal-curve genus.
struct ConjectureGap {
  Int lower = 0;
  Int upper = 0;
  bool empty() const noexcept { return upper - lower <= 1; }
  bool contains(Int g) const noexcept { return lower < g && g < upper; }
};

inline ConjectureGap conjecture_gap(Int q, Int r) {
  if (r < 3 || q < r) throw std::invalid_argument("conjecture_gap needs r >= 3 and q >= r");
  return {halphen_c1(q + 1, r).value, castelnuovo_c0(q + 1, r).value};
}

/// Conjectural, not proven.
inline bool conjecture_excludes(Int q, Int g, Int r) { return conjecture_gap(q, r).contains(g); }

/// deg R = sum(eps_i) (2g - 2) + (r + 1) d with r = orders.size() - 1.
inline Int deg_ramification(const OrderSequence& orders, Int g, Int d) {
  if (orders.size() < 2 || orders[1] != 1) throw std::invalid_argument("order sequence must start 0, 1");
  if (g < 0 || d < 1) throw std::invalid_argument("need g >= 0 and d >= 1");
  Int sum = 0;
  for (Int e : orders.values()) sum = checked_add(sum, e);
  const Int r = static_cast<Int>(orders.size()) - 1;
  return checked_add(checked_mul(sum, 2 * g - 2), checked_mul(r + 1, d));
}

/// deg S = sum(nu_i) (2g - 2) + (ell + r) d with r = nu.size().
inline Int deg_frobenius(const std::vector<Int>& nu, Int g, Int d, Int ell) {
  OrderSequence checked(nu);
  if (!PrimePower::try_from_value(ell)) throw std::invalid_argument("ell must be a prime power");
  if (g < 0 || d < 1) throw std::invalid_argument("need g >= 0 and d >= 1");
  Int sum = 0;
  for (Int v : checked.values()) sum = checked_add(sum, v);
  const Int r = static_cast<Int>(nu.size());
  return checked_add(checked_mul(sum, 2 * g - 2), checked_mul(ell + r, d));
}

/// A linear inequality on g solved for g: genera on the wrong side of
/// `value` contradict it.
struct GenusThreshold {
  enum class Direction { kAtLeast, kAtMost };
  Direction direction = Direction::kAtLeast;
  Rational value;
  bool admits(Int g) const {
    return direction == Direction::kAtLeast ? Rational(g) >= value : Rational(g) <= value;
  }
};

namespace detail {

// Solves a g + b >= 0 (a != 0) for g.
inline GenusThreshold solve_linear(Int a, Int b) {
  if (a == 0) throw MathError("degenerate inequality: genus coefficient vanishes");
  const Rational root(-b, a);
  return {a > 0 ? GenusThreshold::Direction::kAtLeast : GenusThreshold::Direction::kAtMost, root};
}

}  // namespace detail

/// Solves deg R >= #X(F_{q^2}) = q^2 + 1 + 2qg for D_X (d = q + 1), using
/// that every rational point lies in the support of R.
inline GenusThreshold ramification_genus_threshold(const OrderSequence& orders, Int q) {
  if (orders.size() < 2 || orders[1] != 1) throw std::invalid_argument("order sequence must start 0, 1");
  if (orders[orders.size() - 1] != q) throw std::invalid_argument("last generic order must be q");
  Int sum = 0;
  for (Int e : orders.values()) sum += e;
  const Int r = static_cast<Int>(orders.size()) - 1;
  // sum (2g - 2) + (r + 1)(q + 1) - (q^2 + 1 + 2qg) >= 0
  return detail::solve_linear(2 * sum - 2 * q, -2 * sum + (r + 1) * (q + 1) - q * q - 1);
}

/// Solves deg S >= weight * #X(F_{q^2}) for D_X (d = q + 1, ell = q^2),
/// where every rational point has v_P(S) >= weight.
inline GenusThreshold frobenius_genus_threshold(const std::vector<Int>& nu, Int q, Int weight) {
  OrderSequence checked(nu);
  if (weight < 1) throw std::invalid_argument("weight must be >= 1");
  Int sum = 0;
  for (Int v : checked.values()) sum += v;
  const Int r = static_cast<Int>(nu.size());
  // sum (2g - 2) + (q^2 + r)(q + 1) - weight (q^2 + 1 + 2qg) >= 0
  return detail::solve_linear(2 * sum - 2 * q * weight, -2 * sum + (q * q + r) * (q + 1) - weight * (q * q + 1));
}

/// Genus forced when j_{N-1}(P) = N - 1 at every point: (N-1) N (g-1) = (q+1)(q-N).
struct UniformOrderGenus {
  Rational genus;
  bool integral = false;
};

inline UniformOrderGenus uniform_order_genus(Int n, Int q) {
  if (n < 2) throw std::invalid_argument("uniform_order_genus needs N >= 2");
  const Rational g = Rational(1) + Rational((q + 1) * (q - n), (n - 1) * n);
  return {g, g.denominator() == 1};
}

struct KnownExample {
  Int genus = 0;
  std::string label;
};

/// Genera of the known maximal curves in the upper range, with their
/// congruence conditions; plus genus 0 (the projective line).
inline std::vector<KnownExample> known_examples(Int q) {
  PrimePower::from_value(q);
  std::vector<KnownExample> out;
  out.push_back({0, "projective line"});
  out.push_back({third_genus_bound(q), "floor((q^2-q+4)/6), all q"});
  if (q % 3 == 2) out.push_back({(q * q - q - 2) / 6, "(q^2-q-2)/6, q = 2 mod 3"});
  if (q % 3 == 0 || q % 3 == 2) out.push_back({floor_div((q - 1) * (q - 2), 6), "floor((q-1)(q-2)/6), q = 0,2 mod 3"});
  if (q % 4 != 2) {
    out.push_back({floor_div(q * q - 2 * q + 5, 8), "floor((q^2-2q+5)/8), q = 0,1,3 mod 4"});
    out.push_back({floor_div((q - 1) * (q - 3), 8), "floor((q-1)(q-3)/8), q = 0,1,3 mod 4"});
  }
  return out;
}

/// Classification result attached to a genus at a given q.
struct Classification {
  enum class Status { kUnique, kExactlyTwo, kNonExistent };
  Int genus = 0;
  Status status = Status::kUnique;
  /// Family ids realizing the genus (empty for non-existence).
  std::vector<std::string> curves;
  /// Extra hypothesis the statement depends on, empty if unconditional.
  std::string hypothesis;
  std::string label() const {
    switch (status) {
      case Status::kNonExistent:
        return "non-existent";
      case Status::kUnique:
        return "unique curve: " + (curves.empty() ? std::string() : curves.front());
      case Status::kExactlyTwo:
        return "exactly two curves: " + curves.at(0) + ", " + curves.at(1);
    }
    return {};
  }
};

/// Table of the classification statements that apply at q.
inline std::vector<Classification> known_classifications(Int q) {
  const PrimePower base = PrimePower::from_value(q);
  auto as_id = [q](Int m) { return "as:q=" + std::to_string(q) + ",m=" + std::to_string(m); };
  std::vector<Classification> out;
  out.push_back({ihara_bound(q), Classification::Status::kUnique, {"hermitian:q=" + std::to_string(q)}, ""});
  if (q >= 7) {
    const std::string id = base.p == 2 ? "even-trace:q=" + std::to_string(q) : as_id((q + 1) / 2);
    out.push_back({second_genus_bound(q), Classification::Status::kUnique, {id}, ""});
  }
  if (q >= 11 && q % 3 == 1) {
    out.push_back({(q - 1) * (q - 2) / 6, Classification::Status::kNonExistent, {}, ""});
  }
  if (q >= 11 && q % 3 == 2) {
    out.push_back({(q - 1) * (q - 2) / 6, Classification::Status::kUnique, {as_id((q + 1) / 3)}, ""});
  }
  if (base.p >= 5 && q % 4 == 1 && q >= 17) {
    out.push_back({(q - 1) * (q - 3) / 8, Classification::Status::kUnique,
                   {"fermat-half:q=" + std::to_string(q)}, "dim(D_X) = 5"});
  }
  if (base.p >= 5 && q % 4 == 3 && q >= 19) {
    out.push_back({(q - 1) * (q - 3) / 8, Classification::Status::kExactlyTwo,
                   {"fermat-half:q=" + std::to_string(q), as_id((q + 1) / 4)}, "dim(D_X) = 5"});
  }
  return out;
}

/// Degree threshold above which the Halphen-type bound c_1(d, r) is known
/// to apply; carried as metadata only.
inline Int halphen_degree_threshold(Int r) {
  if (r <= 6) return 36 * r;
  if (r == 7) return 288;
  return Int{1} << (r + 1);
}

/// All bounds evaluated at (q, r), d = q + 1, optionally against a genus.
struct BoundReport {
  Int q = 0;
  Int d = 0;
  Int r = 0;
  std::optional<Int> g;
  std::optional<Int> c0;
  std::optional<Int> eps;
  std::optional<Int> c1;
  std::optional<Int> eps1;
  Rational upper_estimate;
  Int ihara = 0;
  Int second = 0;
  Int third = 0;
  Int halphen_degree_threshold = 0;
  std::optional<TrichotomyVerdict> trichotomy;
  /// Conjectural exclusion; kept apart from `trichotomy`.
  std::optional<bool> conjecture_excludes;
};

inline BoundReport bound_report(Int q, Int r, std::optional<Int> g = std::nullopt) {
  PrimePower::from_value(q);
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  BoundReport rep;
  rep.q = q;
  rep.d = q + 1;
  rep.r = r;
  rep.g = g;
  if (rep.d >= r) {
    const auto c0 = castelnuovo_c0(rep.d, r);
    rep.c0 = c0.value;
    rep.eps = c0.eps;
    if (r >= 3) {
      const auto c1 = halphen_c1(rep.d, r);
      rep.c1 = c1.value;
      rep.eps1 = c1.eps1;
    }
  }
  rep.upper_estimate = castelnuovo_upper_estimate(rep.d, r);
  rep.ihara = ihara_bound(q);
  rep.second = second_genus_bound(q);
  rep.third = third_genus_bound(q);
  rep.halphen_degree_threshold = halphen_degree_threshold(r);
  if (g) {
    rep.trichotomy = trichotomy_classify(q, *g);
    if (r >= 3 && q >= r) rep.conjecture_excludes = conjecture_excludes(q, *g, r);
  }
  return rep;
}

}  // namespace maxcurve
