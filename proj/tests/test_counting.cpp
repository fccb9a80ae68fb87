// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include "maxcurve/counting.hpp"
#include "oracle.hpp"

using namespace maxcurve;

namespace {

std::vector<oracle::Term> oracle_terms(const CurveFamily& f) {
  const int q = static_cast<int>(f.q());
  switch (f.kind()) {
    case FamilyKind::kHermitian: return oracle::hermitian(q);
    case FamilyKind::kArtinSchreier: return oracle::artin_schreier(q, static_cast<int>(f.m()));
    case FamilyKind::kEvenTrace: return oracle::even_trace(q);
    case FamilyKind::kFermatHalf: return oracle::fermat_half(q);
    case FamilyKind::kR32i: return oracle::r32i(q);
    case FamilyKind::kR32ii: return oracle::r32ii(q);
    case FamilyKind::kR32iii: return oracle::r32iii(q);
  }
  return {};
}

// Places outside the affine chart, recounted with the table field.
long long oracle_extra_points(const CurveFamily& f, const oracle::Field& F) {
  const long long q = f.q();
  switch (f.kind()) {
    case FamilyKind::kFermatHalf: return oracle::count_roots_of(F, (q + 1) / 2, -1);
    case FamilyKind::kR32i: return 2 * oracle::count_roots_of(F, (q + 1) / 3, -1) - 1;
    case FamilyKind::kR32ii: return oracle::count_roots_of(F, (q - 1) / 3, -1) + 1;
    default: return 1;
  }
}

oracle::Field oracle_field(const CurveFamily& f, int k) {
  return oracle::Field(static_cast<int>(f.base().p), static_cast<int>(2 * f.base().k * k));
}

std::vector<CurveFamily> all_families(Int q_max) {
  std::vector<CurveFamily> out;
  for (Int q = 2; q <= q_max; ++q) {
    if (!PrimePower::try_from_value(q)) continue;
    for (const auto& f : families_at(q)) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST(CountAffine, SpecExamples) {
  const FieldCtx F4 = FieldCtx::make(2, 2);
  EXPECT_EQ(count_affine(family_plane_model(CurveFamily::hermitian(2), F4)), 8);
  EXPECT_EQ(oracle::brute_force_affine(oracle::Field(2, 2), oracle::hermitian(2)), 8);

  const FieldCtx F9 = FieldCtx::make(3, 2);
  EXPECT_EQ(count_affine(family_plane_model(CurveFamily::artin_schreier(3, 2), F9)), 15);
  EXPECT_EQ(oracle::brute_force_affine(oracle::Field(3, 2), oracle::artin_schreier(3, 2)), 15);

  BivariatePoly constant(F9);
  constant.add_term(0, 0, 2);
  EXPECT_EQ(count_affine(constant), 0);
  EXPECT_THROW(count_affine(BivariatePoly(F9)), std::invalid_argument);

  BivariatePoly line(F9);  // x - 1: one full vertical line
  line.add_term(1, 0, 1);
  line.add_term(0, 0, -1);
  EXPECT_EQ(count_affine(line), 9);
}

TEST(CountArtinSchreierFast, SpecExamples) {
  EXPECT_EQ(count_artin_schreier_fast(3, 2, 1).total, 16);
  EXPECT_EQ(count_artin_schreier_fast(7, 4, 1).total, 176);
  EXPECT_EQ(count_artin_schreier_fast(2, 3, 1).total, 9);
  EXPECT_THROW(count_artin_schreier_fast(7, 3, 1), std::invalid_argument);
}

TEST(CountCurve, SpecExamples) {
  const PointCount h = count_curve(CurveFamily::hermitian(2), 1);
  EXPECT_EQ(h, (PointCount{1, 8, 1, 9}));
  EXPECT_EQ(count_curve(CurveFamily::fermat_half(5), 1).total, 36);
  EXPECT_EQ(count_curve(CurveFamily::hermitian(2), 2).total, 9);
  EXPECT_THROW(count_curve(CurveFamily::hermitian(2), 0), std::invalid_argument);
}

TEST(IsMaximal, SpecExamples) {
  const auto h = is_maximal(CurveFamily::hermitian(3));
  EXPECT_TRUE(h.is_maximal);
  EXPECT_EQ(h.expected, 28);
  EXPECT_EQ(h.observed, 28);
  EXPECT_EQ(h.genus_used, 3);
  EXPECT_EQ(is_maximal(CurveFamily::artin_schreier(5, 3)).observed, 66);
  EXPECT_EQ(is_maximal(CurveFamily::artin_schreier(5, 2)).observed, 46);
}

TEST(PredictedExtensionCount, SpecExamples) {
  EXPECT_EQ(predicted_extension_count(2, 1, 1), 9);
  EXPECT_EQ(predicted_extension_count(2, 1, 2), 9);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(predicted_extension_count(7, 0, k), checked_pow(49, k) + 1);
  EXPECT_EQ(predicted_extension_count(3, 1, 2), 64);
  EXPECT_THROW(predicted_extension_count(13, 78, 20), std::overflow_error);
  EXPECT_THROW(predicted_extension_count(3, -1, 1), std::invalid_argument);
}

TEST(GenusFromMaximalCount, SpecExamples) {
  EXPECT_EQ(genus_from_maximal_count(2, 9), 1);
  EXPECT_EQ(genus_from_maximal_count(7, 176), 9);
  EXPECT_THROW(genus_from_maximal_count(3, 12), MathError);
  EXPECT_THROW(genus_from_maximal_count(3, 5), MathError);
}

// Every family instance with q <= 13: the library count equals an
// independent full-pair brute force plus independently counted extra
// places, and equals q^2 + 1 + 2qg.
TEST(CountingProperties, MaximalityAgainstBruteForce) {
  for (const auto& f : all_families(13)) {
    const oracle::Field O = oracle_field(f, 1);
    const long long brute = oracle::brute_force_affine(O, oracle_terms(f)) + oracle_extra_points(f, O);
    const PointCount c = count_curve(f, 1);
    EXPECT_EQ(c.total, brute) << f.id();
    EXPECT_EQ(c.total, f.q() * f.q() + 1 + 2 * f.q() * family_genus(f)) << f.id();
  }
}

// q <= 5, k = 2: counts over F_{q^4} follow q^4 + 1 - 2 g q^2.
TEST(CountingProperties, ExtensionLawAtDegreeTwo) {
  for (const auto& f : all_families(5)) {
    const oracle::Field O = oracle_field(f, 2);
    const long long brute = oracle::brute_force_affine(O, oracle_terms(f)) + oracle_extra_points(f, O);
    const Int q = f.q();
    EXPECT_EQ(brute, q * q * q * q + 1 - 2 * family_genus(f) * q * q) << f.id();
    EXPECT_EQ(count_curve(f, 2).total, brute) << f.id();
  }
}

TEST(CountingProperties, FastPathEqualsGenericPath) {
  CountOptions generic;
  generic.fast_path = false;
  for (const auto& f : all_families(9)) {
    if (!additive_model(f)) continue;
    EXPECT_EQ(count_curve(f, 1), count_curve(f, 1, generic)) << f.id();
  }
}

TEST(CountingProperties, IndependentOfThreadCount) {
  const CurveFamily f = CurveFamily::fermat_half(11);
  CountOptions opts;
  opts.threads = 1;
  const PointCount serial = count_curve(f, 1, opts);
  for (unsigned t : {2u, 3u, 7u, 64u}) {
    opts.threads = t;
    EXPECT_EQ(count_curve(f, 1, opts), serial) << t;
    opts.fast_path = false;
    EXPECT_EQ(count_curve(CurveFamily::artin_schreier(7, 4), 1, opts).total, 176);
    opts.fast_path = true;
  }
}

TEST(CountingProperties, BudgetIsEnforced) {
  CountOptions tight;
  tight.budget = 1000;
  try {
    count_curve(CurveFamily::fermat_half(5), 1, tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 1000);
    EXPECT_EQ(e.required(), generic_work_estimate(25, 3));
  }
  EXPECT_THROW(count_curve(CurveFamily::hermitian(13), 2, tight), BudgetExceeded);
}

// The sign printed for the q = 1 mod 3 family only gives a maximal curve in
// characteristic 2, where it coincides with the model used here.
TEST(CountingProperties, PrintedSignOfQOneModThreeFamily) {
  for (int q : {4, 7, 13}) {
    const oracle::Field O(q == 4 ? 2 : q, q == 4 ? 4 : 2);
    const long long printed = oracle::brute_force_affine(O, oracle::r32ii_as_printed(q));
    const long long used = oracle::brute_force_affine(O, oracle::r32ii(q));
    if (q == 4) {
      EXPECT_EQ(printed, used);
    } else {
      EXPECT_LT(printed + (q - 1) / 3 + 1, q * q + 1 + 2 * q * (q * q - q) / 6) << q;
    }
  }
  EXPECT_EQ(oracle::brute_force_affine(oracle::Field(7, 2), oracle::r32ii_as_printed(7)), 33);
}

TEST(PlaneModelReport, ResidualAccounting) {
  const auto h = plane_model_report(CurveFamily::hermitian(3), 1);
  EXPECT_EQ(h.plane_projective, 28);
  EXPECT_EQ(h.residual, 0);
  const auto fh = plane_model_report(CurveFamily::fermat_half(5), 1);
  EXPECT_EQ(fh.residual, 0);
  EXPECT_EQ(fh.plane_at_infinity, 3);
  for (const auto& f : {CurveFamily::r32i(5), CurveFamily::r32ii(7), CurveFamily::r32iii(9)}) {
    const auto r = plane_model_report(f, 1);
    EXPECT_EQ(r.nonsingular_total, r.expected) << f.id();
    EXPECT_EQ(r.plane_projective + r.residual, r.expected) << f.id();
  }
  // r32i at q = 5: the origin and (1:0:0) are singular, each with two rational branches.
  const auto r = plane_model_report(CurveFamily::r32i(5), 1);
  EXPECT_EQ(r.plane_at_infinity, 1);
  EXPECT_EQ(r.residual, 2);
}
