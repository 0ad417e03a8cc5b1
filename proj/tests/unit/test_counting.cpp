#include "formcount/counting.hpp"
#include "formcount/oracle.hpp"

#include <gtest/gtest.h>

using namespace formcount;

TEST(KRSplit, Examples) {
  const auto a = kr_split(4, 2);
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(a.r, 2);
  const auto b = kr_split(6, 2);
  EXPECT_EQ(b.k, 3);
  EXPECT_EQ(b.r, 1);
  const auto c = kr_split(3, 3);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.r, 1);
  const auto d = kr_split(72, 6);  // 72/6 = 12 = 1 * 12
  EXPECT_EQ(d.k, 1);
  EXPECT_EQ(d.r, 12);
  EXPECT_THROW(kr_split(6, 4), std::invalid_argument);
}

TEST(KRSplit, Invariants) {
  for (std::int64_t n = 1; n <= 120; ++n) {
    for (auto e : divisors(n)) {
      const auto s = kr_split(n, e);
      EXPECT_EQ(s.e * s.k * s.r, n);
      EXPECT_EQ(std::gcd(s.k, e), 1);
      for (auto q : prime_factors(s.r)) EXPECT_EQ(e % q, 0);
    }
  }
}

TEST(CountS, Examples) {
  EXPECT_EQ(count_S(5, 4), 150);
  EXPECT_EQ(count_S(2, 4), 3);
  EXPECT_EQ(count_S(2, 1), 2);  // the formula value, not the p+1 linear forms
  EXPECT_THROW(count_S(4, 3), std::invalid_argument);
}

TEST(FuncB, Examples) {
  EXPECT_EQ(func_B(5, 4), 0);
  EXPECT_EQ(func_B(5, 5), 4);
  EXPECT_EQ(func_B(2, 4), 1);
  EXPECT_THROW(func_B(5, 0), std::invalid_argument);
}

TEST(FuncA, Examples) {
  EXPECT_EQ(func_A(5, 4, 2), 6);
  EXPECT_EQ(func_A(5, 4, 4), 2);
  EXPECT_EQ(func_A(7, 3, 3), 4);
  EXPECT_THROW(func_A(5, 4, 3), std::invalid_argument);
  EXPECT_THROW(func_A(5, 6, 3), std::invalid_argument);
  EXPECT_THROW(func_A(5, 4, 1), std::invalid_argument);
}

TEST(FuncC, Examples) {
  EXPECT_EQ(func_C(5, 4, 2), 6);
  EXPECT_EQ(func_C(3, 4, 4), 2);
  EXPECT_EQ(func_C(5, 3, 3), 4);
  EXPECT_THROW(func_C(5, 4, 4), std::invalid_argument);
}

TEST(OrbitCount, Examples) {
  const auto r = orbit_count(5, 4);
  ASSERT_TRUE(r.terms.has_value());
  EXPECT_EQ(r.terms->a, 600);
  EXPECT_EQ(r.terms->b, 0);
  EXPECT_EQ(r.terms->c, 600);
  EXPECT_EQ(r.terms->d, 240);
  EXPECT_EQ(r.group_order, 480);
  EXPECT_EQ(r.orbit_count, 3);
  EXPECT_EQ(orbit_count(5, 5).orbit_count, 6);
  EXPECT_EQ(orbit_count(2, 4).orbit_count, 1);
  EXPECT_EQ(orbit_count(11, 5).orbit_count, 26);
  EXPECT_EQ(orbit_count(3, 6).orbit_count, 7);
}

TEST(OrbitCount, SmallDegreesAreSpecialCased) {
  for (std::int64_t n : {1, 2}) {
    const auto r = orbit_count(7, n);
    EXPECT_TRUE(r.special_case());
    EXPECT_EQ(r.orbit_count, 1);
    EXPECT_EQ(r.group_order, gl2_order(7));
  }
  EXPECT_THROW(orbit_count(7, 0), std::invalid_argument);
  EXPECT_THROW(orbit_count(9, 3), std::invalid_argument);
}

TEST(OrbitCount, ClosedFormsForSmallDegrees) {
  for (auto pi : primes_between(3, 300)) {
    const auto p = static_cast<std::uint64_t>(pi);
    EXPECT_EQ(orbit_count(p, 3).orbit_count, 1);
    EXPECT_EQ(orbit_count(p, 4).orbit_count, (pi + 1) / 2);
    if (pi != 5) {
      EXPECT_EQ(orbit_count(p, 5).orbit_count, (pi * pi - 1 + 2 * std::gcd<std::int64_t>(pi * pi - 1, 5)) / 5);
    }
  }
}

TEST(OrbitCount, LargeParametersStayExact) {
  // p^n far beyond 64 bits
  const auto r = orbit_count(1'000'003, 30);
  EXPECT_GT(r.orbit_count, BigInt(1) << 400);
}

TEST(OrbitCount, BoundsFromOrbitSizes) {
  // every orbit has at most |PGL(2,p)| forms, so orbits >= |S| / |PGL(2,p)|
  for (auto pi : primes_between(2, 50)) {
    const auto p = static_cast<std::uint64_t>(pi);
    const BigInt pgl = gl2_order(p) / (pi - 1);
    for (std::int64_t n = 3; n <= 12; ++n) {
      const auto orbits = orbit_count(p, n).orbit_count;
      EXPECT_GE(orbits * pgl, count_S(p, n));
      EXPECT_LE(orbits, count_S(p, n));
    }
  }
}

TEST(PredictedFix, Examples) {
  const auto fams = class_families(5);
  auto find = [&](ClassKind k, std::uint64_t e) {
    for (const auto& f : fams) {
      if (f.kind == k && f.e == e) return f;
    }
    throw std::logic_error("missing family");
  };
  EXPECT_EQ(predicted_fix(5, 4, find(ClassKind::Central, 1)), 150);
  EXPECT_EQ(predicted_fix(5, 4, find(ClassKind::SplitSemisimple, 4)), 2);
  EXPECT_EQ(predicted_fix(5, 4, find(ClassKind::Anisotropic, 3)), 0);
}

TEST(PredictedFix, MatchesBruteForceBeyondAcceptanceRange) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 7}, {2, 8}, {3, 7}, {5, 6}, {7, 6}, {11, 4}, {13, 4}}) {
    const auto forms = enumerate_irreducible_forms(p, n);
    for (const auto& fam : class_families(p)) {
      EXPECT_EQ(predicted_fix(p, n, fam), Rational(fix_count(forms, fam.representative, n)))
          << "p=" << p << " n=" << n << " " << to_string(fam.kind) << " e=" << fam.e;
    }
  }
}

TEST(GroupCount, Examples) {
  EXPECT_EQ(indecomposable_group_count(3, 7), 1);
  EXPECT_EQ(indecomposable_group_count(7, 8), 6);
  EXPECT_EQ(indecomposable_group_count(5, 8), 5);
  EXPECT_EQ(indecomposable_group_count(3, 4), 2);
  EXPECT_THROW(indecomposable_group_count(3, 2), std::invalid_argument);
}
