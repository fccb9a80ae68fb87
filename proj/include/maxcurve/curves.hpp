// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

/**
 * @file curves.hpp
 * @brief Catalog of explicit F_{q^2}-maximal curve families.
 *
 * Each family is described by an affine plane model. The nonsingular model is
 * never built; its point count over F_{q^{2k}} is the affine plane count plus
 * an exact per-family correction (infinity_correction) accounting for places
 * at infinity and, for the Kummer-type families, places over singular points.
 *
 * Family identifiers: `name:key=val,...` with names hermitian, as,
 * even-trace, fermat-half, r32i, r32ii, r32iii, e.g. "as:q=11,m=4".
 */

#pragma once

#include <charconv>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxcurve/bivariate.hpp"
#include "maxcurve/field.hpp"
#include "maxcurve/semigroup.hpp"

namespace maxcurve {

enum class FamilyKind {
  kHermitian,      // y^q + y = x^{q+1}
  kArtinSchreier,  // y^q + y = x^m, m | q + 1
  kEvenTrace,      // y^{q/2} + ... + y^2 + y = x^{q+1}, q even
  kFermatHalf,     // x^{(q+1)/2} + y^{(q+1)/2} + 1 = 0, q odd
  kR32i,           // x^{(q+1)/3} + x^{2(q+1)/3} + y^{q+1} = 0, q = 2 mod 3
  kR32ii,          // y^q + y x^{2(q-1)/3} - x^{(q-1)/3} = 0, q = 1 mod 3
  kR32iii,         // y^q + y + (sum_{i=1}^t x^{q/p^i})^2 = 0, q = 3^t
};

class CurveFamily {
 public:
  static CurveFamily hermitian(Int q) { return CurveFamily(FamilyKind::kHermitian, q, 0); }
  static CurveFamily artin_schreier(Int q, Int m) { return CurveFamily(FamilyKind::kArtinSchreier, q, m); }
  static CurveFamily even_trace(Int q) { return CurveFamily(FamilyKind::kEvenTrace, q, 0); }
  static CurveFamily fermat_half(Int q) { return CurveFamily(FamilyKind::kFermatHalf, q, 0); }
  static CurveFamily r32i(Int q) { return CurveFamily(FamilyKind::kR32i, q, 0); }
  static CurveFamily r32ii(Int q) { return CurveFamily(FamilyKind::kR32ii, q, 0); }
  static CurveFamily r32iii(Int q) { return CurveFamily(FamilyKind::kR32iii, q, 0); }

  /// Parses "name:key=val,key=val".
  static CurveFamily parse(std::string_view id) {
    const auto colon = id.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("family id needs 'name:params': " + std::string(id));
    const std::string_view name = id.substr(0, colon);
    std::map<std::string, Int, std::less<>> params;
    std::string_view rest = id.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw std::invalid_argument("bad parameter '" + std::string(item) + "'");
      const std::string_view key = item.substr(0, eq);
      const std::string_view value = item.substr(eq + 1);
      Int parsed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw std::invalid_argument("bad integer '" + std::string(value) + "'");
      }
      if (!params.emplace(std::string(key), parsed).second) {
        throw std::invalid_argument("duplicate parameter '" + std::string(key) + "'");
      }
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    auto take = [&](const char* key) {
      auto it = params.find(key);
      if (it == params.end()) throw std::invalid_argument(std::string("missing parameter '") + key + "'");
      Int v = it->second;
      params.erase(it);
      return v;
    };
    const Int q = take("q");
    std::optional<CurveFamily> out;
    if (name == "hermitian") out = hermitian(q);
    else if (name == "as") out = artin_schreier(q, take("m"));
    else if (name == "even-trace") out = even_trace(q);
    else if (name == "fermat-half") out = fermat_half(q);
    else if (name == "r32i") out = r32i(q);
    else if (name == "r32ii") out = r32ii(q);
    else if (name == "r32iii") out = r32iii(q);
    else throw std::invalid_argument("unknown family '" + std::string(name) + "'");
    if (!params.empty()) throw std::invalid_argument("unexpected parameter '" + params.begin()->first + "'");
    return *out;
  }

  FamilyKind kind() const noexcept { return kind_; }
  Int q() const noexcept { return base_.q; }
  /// Exponent of x for Artin-Schreier families, 0 otherwise.
  Int m() const noexcept { return m_; }
  const PrimePower& base() const noexcept { return base_; }

  std::string id() const {
    const std::string qs = "q=" + std::to_string(base_.q);
    switch (kind_) {
      case FamilyKind::kHermitian:
        return "hermitian:" + qs;
      case FamilyKind::kArtinSchreier:
        return "as:" + qs + ",m=" + std::to_string(m_);
      case FamilyKind::kEvenTrace:
        return "even-trace:" + qs;
      case FamilyKind::kFermatHalf:
        return "fermat-half:" + qs;
      case FamilyKind::kR32i:
        return "r32i:" + qs;
      case FamilyKind::kR32ii:
        return "r32ii:" + qs;
      case FamilyKind::kR32iii:
        return "r32iii:" + qs;
    }
    return {};
  }

  friend bool operator==(const CurveFamily&, const CurveFamily&) = default;

 private:
  CurveFamily(FamilyKind kind, Int q, Int m) : kind_(kind), base_(PrimePower::from_value(q)), m_(m) {
    auto fail = [&](const std::string& why) { throw std::invalid_argument(id() + ": " + why); };
    switch (kind_) {
      case FamilyKind::kArtinSchreier:
        if (m_ < 2 || (q + 1) % m_ != 0) fail("m must be >= 2 and divide q + 1");
        break;
      case FamilyKind::kEvenTrace:
        if (base_.p != 2) fail("q must be even");
        break;
      case FamilyKind::kFermatHalf:
        if (base_.p == 2) fail("q must be odd");
        break;
      case FamilyKind::kR32i:
        if (q % 3 != 2) fail("q must be 2 mod 3");
        break;
      case FamilyKind::kR32ii:
        if (q % 3 != 1) fail("q must be 1 mod 3");
        break;
      case FamilyKind::kR32iii:
        if (base_.p != 3) fail("q must be a power of 3");
        break;
      case FamilyKind::kHermitian:
        break;
    }
  }

  FamilyKind kind_;
  PrimePower base_;
  Int m_;
};

inline Int family_genus(const CurveFamily& f) {
  const Int q = f.q();
  switch (f.kind()) {
    case FamilyKind::kHermitian:
      return q * (q - 1) / 2;
    case FamilyKind::kArtinSchreier:
      return (q - 1) * (f.m() - 1) / 2;
    case FamilyKind::kEvenTrace:
      return q * (q - 2) / 4;
    case FamilyKind::kFermatHalf:
      return (q - 1) * (q - 3) / 8;
    case FamilyKind::kR32i:
      return (q * q - q + 4) / 6;
    case FamilyKind::kR32ii:
    case FamilyKind::kR32iii:
      return (q * q - q) / 6;
  }
  return 0;
}

/// F(y) = f(x) with F additive (a p-polynomial); lhs maps y exponents to
/// coefficients, rhs maps x exponents to coefficients.
struct AdditiveModel {
  std::map<int, Int> lhs;
  std::map<int, Int> rhs;
};

/// Split form for the families whose y-part is additive.
inline std::optional<AdditiveModel> additive_model(const CurveFamily& f) {
  const int q = static_cast<int>(f.q());
  AdditiveModel model;
  switch (f.kind()) {
    case FamilyKind::kHermitian:
      model.lhs = {{q, 1}, {1, 1}};
      model.rhs = {{q + 1, 1}};
      return model;
    case FamilyKind::kArtinSchreier:
      model.lhs = {{q, 1}, {1, 1}};
      model.rhs = {{static_cast<int>(f.m()), 1}};
      return model;
    case FamilyKind::kEvenTrace:
      for (int e = q / 2; e >= 1; e /= 2) model.lhs[e] = 1;
      model.rhs = {{q + 1, 1}};
      return model;
    case FamilyKind::kR32iii: {
      model.lhs = {{q, 1}, {1, 1}};
      std::vector<int> exps;
      for (int e = q / 3; e >= 1; e /= 3) exps.push_back(e);
      for (int a : exps) {
        for (int b : exps) model.rhs[a + b] = mod(model.rhs[a + b] - 1, 3);
      }
      std::erase_if(model.rhs, [](const auto& kv) { return kv.second == 0; });
      return model;
    }
    default:
      return std::nullopt;
  }
}

/// F_{q^{2k}} for the family's q.
inline FieldCtx extension_field(const CurveFamily& f, int k) {
  if (k < 1) throw std::invalid_argument("extension index k must be >= 1");
  return FieldCtx::make(f.base().p, 2 * f.base().k * k);
}

/// Affine defining polynomial with coefficients in ctx, which must be an
/// extension of F_{q^2}.
inline BivariatePoly family_plane_model(const CurveFamily& f, const FieldCtx& ctx) {
  if (ctx.characteristic() != f.base().p || ctx.degree() % (2 * f.base().k) != 0) {
    throw std::invalid_argument(f.id() + ": field is not an extension of F_{q^2}");
  }
  BivariatePoly poly(ctx);
  if (auto model = additive_model(f)) {
    for (const auto& [e, c] : model->lhs) poly.add_term(0, e, c);
    for (const auto& [e, c] : model->rhs) poly.add_term(e, 0, -c);
    return poly;
  }
  const int q = static_cast<int>(f.q());
  switch (f.kind()) {
    case FamilyKind::kFermatHalf: {
      const int n = (q + 1) / 2;
      poly.add_term(n, 0, 1);
      poly.add_term(0, n, 1);
      poly.add_term(0, 0, 1);
      break;
    }
    case FamilyKind::kR32i: {
      const int n = (q + 1) / 3;
      poly.add_term(n, 0, 1);
      poly.add_term(2 * n, 0, 1);
      poly.add_term(0, q + 1, 1);
      break;
    }
    case FamilyKind::kR32ii: {
      const int a = (q - 1) / 3;
      // The sign of y x^{2a} matters for odd q: with a minus sign the curve
      // is not maximal (q = 7 gives 36 points instead of 148).
      poly.add_term(0, q, 1);
      poly.add_term(2 * a, 1, 1);
      poly.add_term(a, 0, -1);
      break;
    }
    default:
      throw std::logic_error("unhandled family");
  }
  return poly;
}

namespace detail {

inline Int count_solutions_of_power(const FieldCtx& ctx, Int exponent, Int target) {
  const FieldElement rhs = ctx.from_integer(target);
  Int count = 0;
  ctx.for_each_element([&](const FieldElement& u) {
    if (ctx.pow(u, static_cast<std::uint64_t>(exponent)) == rhs) ++count;
  });
  return count;
}

}  // namespace detail

/// Nonsingular-model points over ctx = F_{q^{2k}} minus affine plane points.
///
/// - Hermitian, Artin-Schreier, even-trace, r32iii: the affine chart is
///   smooth (dF/dy is a nonzero constant) and x = infinity is totally
///   ramified, so one place.
/// - fermat-half: smooth plane curve; points at infinity are the roots of
///   u^n = -1, n = (q+1)/2.
/// - r32i: n = (q+1)/3. The origin and the point at infinity each carry one
///   branch per root of w^n = -1 (Newton polygon edge y^{3n} + x^n); the
///   origin is already counted once in the affine chart.
/// - r32ii: a = (q-1)/3. The origin is unibranch. At (1:0:0) the Newton
///   polygon has an edge y^{3a} + z^a with one branch per root of w^a = -1
///   plus a length-one edge contributing one more branch.
inline Int infinity_correction(const CurveFamily& f, const FieldCtx& ctx) {
  const Int q = f.q();
  switch (f.kind()) {
    case FamilyKind::kHermitian:
    case FamilyKind::kArtinSchreier:
    case FamilyKind::kEvenTrace:
    case FamilyKind::kR32iii:
      return 1;
    case FamilyKind::kFermatHalf:
      return detail::count_solutions_of_power(ctx, (q + 1) / 2, -1);
    case FamilyKind::kR32i:
      return 2 * detail::count_solutions_of_power(ctx, (q + 1) / 3, -1) - 1;
    case FamilyKind::kR32ii:
      return detail::count_solutions_of_power(ctx, (q - 1) / 3, -1) + 1;
  }
  return 0;
}

inline Int infinity_correction(const CurveFamily& f, int k) {
  if (k < 1) throw std::invalid_argument("extension index k must be >= 1");
  switch (f.kind()) {
    case FamilyKind::kHermitian:
    case FamilyKind::kArtinSchreier:
    case FamilyKind::kEvenTrace:
    case FamilyKind::kR32iii:
      return 1;
    default:
      return infinity_correction(f, extension_field(f, k));
  }
}

/// N = dim(D_X) where it is known for the family.
inline std::optional<Int> family_dim_DX(const CurveFamily& f) {
  const Int q = f.q();
  switch (f.kind()) {
    case FamilyKind::kHermitian:
      return 2;
    case FamilyKind::kArtinSchreier:
      return (q + 1) / f.m() + 1;
    case FamilyKind::kEvenTrace:
      return 3;
    case FamilyKind::kFermatHalf:
      // Genus 0 (q = 3): D_X = |(q+1)P| on the line has dimension q + 1.
      return family_genus(f) == 0 ? q + 1 : 5;
    default:
      return std::nullopt;
  }
}

/// Generators of the Weierstrass semigroup at the point over x = infinity,
/// where x and y have pole orders q and m.
inline std::optional<std::vector<Int>> family_semigroup_gens(const CurveFamily& f) {
  switch (f.kind()) {
    case FamilyKind::kHermitian:
      return std::vector<Int>{f.q(), f.q() + 1};
    case FamilyKind::kArtinSchreier:
      return std::vector<Int>{f.m(), f.q()};
    default:
      return std::nullopt;
  }
}

struct FamilyFacts {
  Int genus = 0;
  std::optional<Int> dim_DX;
  std::optional<std::vector<Int>> semigroup_gens;
  std::string infinity_rule;
};

inline FamilyFacts family_facts(const CurveFamily& f) {
  FamilyFacts facts{family_genus(f), family_dim_DX(f), family_semigroup_gens(f), {}};
  switch (f.kind()) {
    case FamilyKind::kHermitian:
    case FamilyKind::kArtinSchreier:
    case FamilyKind::kEvenTrace:
    case FamilyKind::kR32iii:
      facts.infinity_rule = "one totally ramified place over x = infinity";
      break;
    case FamilyKind::kFermatHalf:
      facts.infinity_rule = "#{u : u^((q+1)/2) = -1} points on the line at infinity";
      break;
    case FamilyKind::kR32i:
      facts.infinity_rule = "2 #{w : w^((q+1)/3) = -1} - 1 (branches at origin and infinity)";
      break;
    case FamilyKind::kR32ii:
      facts.infinity_rule = "#{w : w^((q-1)/3) = -1} + 1 branches at (1:0:0)";
      break;
  }
  return facts;
}

/// Every family instance defined at q. Artin-Schreier exponents run over the
/// divisors m of q + 1 with 2 <= m < q + 1 (m = q + 1 is the Hermitian curve).
inline std::vector<CurveFamily> families_at(Int q) {
  const PrimePower base = PrimePower::from_value(q);
  std::vector<CurveFamily> out{CurveFamily::hermitian(q)};
  for (Int m = 2; m < q + 1; ++m) {
    if ((q + 1) % m == 0) out.push_back(CurveFamily::artin_schreier(q, m));
  }
  if (base.p == 2) out.push_back(CurveFamily::even_trace(q));
  else out.push_back(CurveFamily::fermat_half(q));
  if (q % 3 == 2) out.push_back(CurveFamily::r32i(q));
  if (q % 3 == 1) out.push_back(CurveFamily::r32ii(q));
  if (base.p == 3) out.push_back(CurveFamily::r32iii(q));
  return out;
}

/// Cross-check of the stored semigroup generators against the genus: the
/// generated semigroup sits inside H(P), so equal gap counts force equality.
struct SemigroupCheck {
  std::vector<Int> generators;
  Int semigroup_genus = 0;
  Int family_genus = 0;
  Int dim_DX = 0;
  bool genus_matches = false;
  bool nongap_profile_holds = false;
  NonGapSequence nongaps{{0}};
  std::optional<OrderSequence> orders;
};

inline std::optional<SemigroupCheck> semigroup_crosscheck(const CurveFamily& f) {
  auto gens = family_semigroup_gens(f);
  auto dim = family_dim_DX(f);
  if (!gens || !dim) return std::nullopt;
  const auto s = NumericalSemigroup::from_generators(*gens);
  SemigroupCheck check;
  check.generators = *gens;
  check.semigroup_genus = s.genus();
  check.family_genus = family_genus(f);
  check.dim_DX = *dim;
  check.genus_matches = check.semigroup_genus == check.family_genus;
  check.nongaps = s.nongaps(*dim + 1);
  check.nongap_profile_holds = check_nongap_profile(f.q(), *dim, check.nongaps);
  try {
    check.orders = orders_from_nongaps(f.q(), check.nongaps, *dim);
  } catch (const MathError&) {
    check.orders.reset();
  }
  return check;
}

}  // namespace maxcurve
