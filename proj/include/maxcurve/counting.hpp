// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/**
 * @file counting.hpp
 * @brief Exhaustive point counting over F_{q^{2k}} and maximality checks.
 *
 * Two independent routes:
 *  - generic: for each x, specialise the plane model to a polynomial in y
 *    and evaluate it at every y (|F|^2 evaluations);
 *  - additive: for models F(y) = f(x) with F additive, every fibre has
 *    |ker F| points when f(x) lies in F(field) and none otherwise; the image
 *    of F is tabulated once (2 |F| evaluations).
 *
 * Work is split into contiguous x-ranges, one per thread; per-range tallies
 * are integers summed at the end, so results do not depend on thread count.
 */

#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

#include "maxcurve/bivariate.hpp"
#include "maxcurve/curves.hpp"
#include "maxcurve/field.hpp"

namespace maxcurve {

inline constexpr Int kDefaultBudget = 1'000'000'000;

struct CountOptions {
  /// Cap on estimated field-element operations per call.
  Int budget = kDefaultBudget;
  /// Worker threads; 0 selects hardware concurrency.
  unsigned threads = 0;
  /// Use the additive-map route when the family allows it.
  bool fast_path = true;
};

struct PointCount {
  int k = 1;
  Int affine = 0;
  Int at_infinity = 0;
  Int total = 0;
  friend bool operator==(const PointCount&, const PointCount&) = default;
};

struct MaximalityVerdict {
  bool is_maximal = false;
  Int expected = 0;
  Int observed = 0;
  Int genus_used = 0;
};

namespace detail {

inline unsigned worker_count(const CountOptions& opts, Int items) {
  unsigned n = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<Int>(items, 1, n));
}

/// Runs body(begin, end) over [0, n) split into contiguous ranges and sums
/// the returned tallies.
template <class Body>
Int parallel_sum(Int n, const CountOptions& opts, Body body) {
  const unsigned workers = worker_count(opts, n);
  if (workers == 1) return body(Int{0}, n);
  std::vector<Int> tallies(workers, 0);
  std::vector<std::thread> pool;
  const Int chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const Int begin = std::min(n, chunk * w);
    const Int end = std::min(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] { tallies[w] = body(begin, end); });
  }
  for (auto& t : pool) t.join();
  Int sum = 0;
  for (Int t : tallies) sum += t;
  return sum;
}

inline void check_budget(Int required, const CountOptions& opts) {
  if (required > opts.budget) throw BudgetExceeded(required, opts.budget);
}

inline FieldElement evaluate_sparse(const FieldCtx& ctx, const std::map<int, Int>& terms, const FieldElement& v) {
  FieldElement acc = ctx.zero();
  for (const auto& [e, c] : terms) {
    acc = ctx.add(acc, ctx.mul(ctx.from_integer(c), ctx.pow(v, static_cast<std::uint64_t>(e))));
  }
  return acc;
}

}  // namespace detail

/// Estimated element operations of the generic route.
inline Int generic_work_estimate(Int field_size, int degree_y) {
  return saturating_mul(saturating_mul(field_size, field_size), degree_y + 1);
}

/// Number of (x, y) in ctx^2 with poly(x, y) = 0, by the generic route.
inline Int count_affine(const BivariatePoly& poly, const CountOptions& opts = {}) {
  if (poly.is_zero()) throw std::invalid_argument("cannot count zeros of the zero polynomial");
  const FieldCtx& ctx = poly.field();
  const Int n = ctx.size();
  detail::check_budget(generic_work_estimate(n, poly.degree_y()), opts);
  const std::vector<FieldElement> elements = ctx.elements();
  return detail::parallel_sum(n, opts, [&](Int begin, Int end) {
    Int count = 0;
    for (Int xi = begin; xi < end; ++xi) {
      const std::vector<FieldElement> coeffs = poly.specialize_x(elements[static_cast<std::size_t>(xi)]);
      const bool constant = std::all_of(coeffs.begin() + 1, coeffs.end(), [](const auto& c) { return c.is_zero(); });
      if (constant) {
        if (coeffs[0].is_zero()) count += n;
        continue;
      }
      for (const FieldElement& y : elements) {
        FieldElement acc = coeffs.back();
        for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = ctx.add(ctx.mul(acc, y), coeffs[j]);
        if (acc.is_zero()) ++count;
      }
    }
    return count;
  });
}

/// Affine count of F(y) = f(x) over ctx by the additive route.
inline Int count_additive_affine(const AdditiveModel& model, const FieldCtx& ctx, const CountOptions& opts = {}) {
  const Int n = ctx.size();
  const Int per_eval = static_cast<Int>(model.lhs.size() + model.rhs.size()) * 64;
  detail::check_budget(saturating_mul(2 * n, per_eval), opts);
  std::vector<char> in_image(static_cast<std::size_t>(n), 0);
  Int kernel = 0;
  for (Int yi = 0; yi < n; ++yi) {
    const FieldElement v = detail::evaluate_sparse(ctx, model.lhs, ctx.element_at(yi));
    if (v.is_zero()) ++kernel;
    in_image[static_cast<std::size_t>(ctx.index_of(v))] = 1;
  }
  return detail::parallel_sum(n, opts, [&](Int begin, Int end) {
    Int count = 0;
    for (Int xi = begin; xi < end; ++xi) {
      const FieldElement w = detail::evaluate_sparse(ctx, model.rhs, ctx.element_at(xi));
      if (in_image[static_cast<std::size_t>(ctx.index_of(w))]) count += kernel;
    }
    return count;
  });
}

/// Point count of the nonsingular model of f over F_{q^{2k}}.
inline PointCount count_curve(const CurveFamily& f, int k, const CountOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("extension index k must be >= 1");
  const FieldCtx ctx = extension_field(f, k);
  PointCount out;
  out.k = k;
  const auto model = opts.fast_path ? additive_model(f) : std::nullopt;
  out.affine = model ? count_additive_affine(*model, ctx, opts) : count_affine(family_plane_model(f, ctx), opts);
  out.at_infinity = infinity_correction(f, ctx);
  out.total = out.affine + out.at_infinity;
  return out;
}

/// y^q + y = x^m over F_{q^{2k}} via the image of y -> y^q + y.
inline PointCount count_artin_schreier_fast(Int q, Int m, int k, const CountOptions& opts = {}) {
  CountOptions fast = opts;
  fast.fast_path = true;
  return count_curve(CurveFamily::artin_schreier(q, m), k, fast);
}

/// q^{2k} + 1 - 2 g (-q)^k: the count over F_{q^{2k}} of a genus-g curve
/// that is maximal over F_{q^2}.
inline Int predicted_extension_count(Int q, Int g, int k) {
  if (k < 1) throw std::invalid_argument("extension index k must be >= 1");
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  const Int qk = checked_pow(q, k);
  const Int signed_qk = (k % 2 == 0) ? qk : -qk;
  return checked_add(checked_add(checked_mul(qk, qk), 1), -checked_mul(checked_mul(2, g), signed_qk));
}

/// Genus forced by a maximal count N_1 = q^2 + 1 + 2 q g.
inline Int genus_from_maximal_count(Int q, Int n1) {
  const Int base = checked_add(checked_mul(q, q), 1);
  if (n1 < base) throw MathError("count " + std::to_string(n1) + " is below q^2 + 1");
  if ((n1 - base) % (2 * q) != 0) {
    throw MathError("count " + std::to_string(n1) + " inconsistent with maximality over F_" + std::to_string(q * q));
  }
  return (n1 - base) / (2 * q);
}

inline MaximalityVerdict is_maximal(const CurveFamily& f, const CountOptions& opts = {}) {
  MaximalityVerdict v;
  v.genus_used = family_genus(f);
  v.expected = predicted_extension_count(f.q(), v.genus_used, 1);
  v.observed = count_curve(f, 1, opts).total;
  v.is_maximal = v.expected == v.observed;
  return v;
}

/// Plane-model accounting for a family: projective points of the plane
/// model, the nonsingular count, and the maximal-curve prediction.
struct PlaneModelReport {
  Int affine = 0;
  Int plane_at_infinity = 0;
  Int plane_projective = 0;
  Int nonsingular_total = 0;
  Int expected = 0;
  /// expected - plane_projective: points the plane model misses or merges.
  Int residual = 0;
};

/// Points of the projective closure of poly on the line z = 0.
inline Int count_plane_points_at_infinity(const BivariatePoly& poly) {
  const FieldCtx& ctx = poly.field();
  const BivariatePoly top = poly.leading_form();
  Int count = top.evaluate(ctx.zero(), ctx.one()).is_zero() ? 1 : 0;  // (0:1:0)
  ctx.for_each_element([&](const FieldElement& u) {
    if (top.evaluate(ctx.one(), u).is_zero()) ++count;  // (1:u:0)
  });
  return count;
}

inline PlaneModelReport plane_model_report(const CurveFamily& f, int k, const CountOptions& opts = {}) {
  const FieldCtx ctx = extension_field(f, k);
  const BivariatePoly poly = family_plane_model(f, ctx);
  PlaneModelReport r;
  r.affine = count_affine(poly, opts);
  r.plane_at_infinity = count_plane_points_at_infinity(poly);
  r.plane_projective = r.affine + r.plane_at_infinity;
  r.nonsingular_total = r.affine + infinity_correction(f, ctx);
  r.expected = predicted_extension_count(f.q(), family_genus(f), k);
  r.residual = r.expected - r.plane_projective;
  return r;
}

}  // namespace maxcurve
