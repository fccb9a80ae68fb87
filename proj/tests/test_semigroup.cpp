// Copyright 2026 The maxcurve Authors.
//
// Licensed under the Apache License, Version 2.0 (see
// https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <gtest/gtest.h>

#include <numeric>

#include "maxcurve/curves.hpp"
#include "maxcurve/semigroup.hpp"
#include "oracle.hpp"

using namespace maxcurve;

TEST(Semigroup, SpecExamples) {
  const auto all = NumericalSemigroup::from_generators({1});
  EXPECT_EQ(all.genus(), 0);
  EXPECT_EQ(all.frobenius_number(), -1);

  const auto s47 = NumericalSemigroup::from_generators({4, 7});
  EXPECT_EQ(s47.gaps(), (std::vector<Int>{1, 2, 3, 5, 6, 9, 10, 13, 17}));
  EXPECT_EQ(s47.genus(), 9);
  EXPECT_EQ(s47.frobenius_number(), 17);
  EXPECT_EQ(s47.conductor(), 18);
  EXPECT_EQ(s47.nongap(3), 8);
  EXPECT_EQ(s47.nongaps(5).values(), (std::vector<Int>{0, 4, 7, 8, 11}));

  const auto s23 = NumericalSemigroup::from_generators({2, 3});
  EXPECT_EQ(s23.gaps(), (std::vector<Int>{1}));

  EXPECT_EQ(NumericalSemigroup::from_generators({3, 4}).genus(), 3);
}

TEST(Semigroup, Errors) {
  EXPECT_THROW(NumericalSemigroup::from_generators({4, 6}), MathError);
  EXPECT_THROW(NumericalSemigroup::from_generators({}), std::invalid_argument);
  EXPECT_THROW(NumericalSemigroup::from_generators({0, 1}), std::invalid_argument);
  EXPECT_THROW(NumericalSemigroup::from_generators({1}).nongap(-1), std::invalid_argument);
  EXPECT_THROW(NonGapSequence({1, 2}), std::invalid_argument);
  EXPECT_THROW(OrderSequence({0, 2, 2}), std::invalid_argument);
}

TEST(Semigroup, MembershipMatchesClosureOracle) {
  const std::vector<std::vector<Int>> cases = {{3, 5}, {4, 7}, {5, 6, 9}, {6, 10, 15}, {7, 11, 13}, {9, 10}};
  for (const auto& gens : cases) {
    const auto s = NumericalSemigroup::from_generators(gens);
    const std::vector<long long> lg(gens.begin(), gens.end());
    const auto gaps = oracle::semigroup_gaps(lg);
    EXPECT_EQ(s.gaps(), std::vector<Int>(gaps.begin(), gaps.end()));
    const auto members = oracle::semigroup_members(lg, 300);
    for (Int n = 0; n < 300; ++n) ASSERT_EQ(s.contains(n), members.count(n) == 1) << n;
  }
}

// Sylvester: genus of <a, b> is (a - 1)(b - 1)/2 for coprime a < b <= 30.
TEST(SemigroupProperties, SylvesterGenus) {
  for (Int a = 2; a <= 30; ++a) {
    for (Int b = a + 1; b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto s = NumericalSemigroup::from_generators({a, b});
      ASSERT_EQ(s.genus(), (a - 1) * (b - 1) / 2) << a << "," << b;
      ASSERT_EQ(s.frobenius_number(), a * b - a - b);
    }
  }
}

TEST(SemigroupProperties, NongapIndexingAgreesWithEnumeration) {
  const auto s = NumericalSemigroup::from_generators({5, 7, 11});
  const auto members = oracle::semigroup_members({5, 7, 11}, 200);
  std::vector<Int> listed(members.begin(), members.end());
  for (std::size_t i = 0; i < 60; ++i) ASSERT_EQ(s.nongap(static_cast<Int>(i)), listed[i]);
}

TEST(Duality, SpecExamples) {
  EXPECT_EQ(orders_from_nongaps(4, NonGapSequence({0, 4, 5}), 2).values(), (std::vector<Int>{0, 1, 5}));
  EXPECT_EQ(orders_from_nongaps(7, NonGapSequence({0, 4, 7, 8}), 3).values(), (std::vector<Int>{0, 1, 4, 8}));
  EXPECT_EQ(orders_from_nongaps(11, NonGapSequence({0, 4, 8, 11, 12}), 4).values(),
            (std::vector<Int>{0, 1, 4, 8, 12}));
  EXPECT_THROW(orders_from_nongaps(4, NonGapSequence({0, 3, 4}), 2), MathError);
  EXPECT_THROW(orders_from_nongaps(4, NonGapSequence({0, 4}), 2), std::invalid_argument);
}

// The two readings of the q = 11 orders example are two different curves:
// y^11 + y = x^4 (N = 4, orders 0,1,4,8,12) and y^11 + y = x^3, whose
// orders (q+1)/4, 2(q+1)/4, 3(q+1)/4 = 3, 6, 9 appear with N = 5.
TEST(Duality, QuarterOrdersBelongToExponentThree) {
  const auto as4 = semigroup_crosscheck(CurveFamily::artin_schreier(11, 4));
  ASSERT_TRUE(as4 && as4->orders);
  EXPECT_EQ(as4->orders->values(), (std::vector<Int>{0, 1, 4, 8, 12}));

  const auto as3 = semigroup_crosscheck(CurveFamily::artin_schreier(11, 3));
  ASSERT_TRUE(as3 && as3->orders);
  EXPECT_EQ(as3->dim_DX, 5);
  EXPECT_EQ(as3->nongaps.values(), (std::vector<Int>{0, 3, 6, 9, 11, 12}));
  EXPECT_EQ(as3->orders->values(), (std::vector<Int>{0, 1, 3, 6, 9, 12}));
  EXPECT_TRUE(as3->genus_matches);
  EXPECT_EQ(as3->family_genus, (11 - 1) * (11 - 3) / 8);
}

TEST(NongapProfile, SpecExamples) {
  EXPECT_TRUE(check_nongap_profile(4, 2, NonGapSequence({0, 4, 5})));
  EXPECT_TRUE(check_nongap_profile(7, 3, NonGapSequence({0, 4, 7, 8})));
  EXPECT_FALSE(check_nongap_profile(4, 2, NonGapSequence({0, 3, 5})));
}

TEST(NongapCase, SpecExamples) {
  const auto a = classify_nongap_case(11, 4, 4);
  EXPECT_EQ(a.tag, NonGapCase::Tag::kQPlusOne);
  EXPECT_EQ(a.genus, Rational(15));
  const auto b = classify_nongap_case(8, 3, 4);
  EXPECT_EQ(b.tag, NonGapCase::Tag::kQ);
  EXPECT_EQ(b.genus, Rational(12));
  const auto c = classify_nongap_case(7, 3, 5);
  EXPECT_EQ(c.tag, NonGapCase::Tag::kNeither);
  EXPECT_FALSE(c.genus);
  EXPECT_STREQ(to_string(c.tag), "neither");
}

// Over every family instance with semigroup data (q <= 13): generator genus
// equals the family genus, the non-gap profile holds, the orders start 0, 1
// and end at q + 1, and applying the duality twice is the identity.
TEST(SemigroupProperties, FamilyInstances) {
  int checked = 0;
  for (Int q = 2; q <= 13; ++q) {
    if (!PrimePower::try_from_value(q)) continue;
    for (const auto& f : families_at(q)) {
      const auto check = semigroup_crosscheck(f);
      if (!check) continue;
      ++checked;
      const std::vector<long long> lg(check->generators.begin(), check->generators.end());
      EXPECT_EQ(static_cast<Int>(oracle::semigroup_gaps(lg).size()), family_genus(f)) << f.id();
      EXPECT_TRUE(check->genus_matches) << f.id();
      EXPECT_TRUE(check->nongap_profile_holds) << f.id();
      ASSERT_TRUE(check->orders) << f.id();
      const auto& j = check->orders->values();
      EXPECT_EQ(j[0], 0);
      EXPECT_EQ(j[1], 1) << f.id();
      EXPECT_EQ(j.back(), q + 1);
      EXPECT_EQ(nongaps_from_orders(q, *check->orders), check->nongaps) << f.id();
    }
  }
  EXPECT_GE(checked, 20);
}
