#include "formcount/forms.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace formcount;

namespace {
BinaryForm form(std::uint64_t p, std::vector<std::uint64_t> c) { return {PrimeField(p), std::move(c)}; }

Mat2 random_gl2(const PrimeField& f) {
  const auto p = f.p();
  while (true) {
    const auto a = oracle::uniform(0, p - 1), b = oracle::uniform(0, p - 1), c = oracle::uniform(0, p - 1),
               d = oracle::uniform(0, p - 1);
    if ((a * d + p * p - b * c % p) % p != 0) {
      return {f, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c),
              static_cast<std::int64_t>(d)};
    }
  }
}
}  // namespace

TEST(BinaryForm, NormalizesProjectively) {
  const auto f = form(5, {2, 4, 1});
  EXPECT_EQ(f.coefficients(), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(form(5, {0, 3, 1}).coefficients(), (std::vector<std::uint64_t>{0, 1, 2}));
  EXPECT_EQ(form(3, {1, 2, 2}).to_string(), "x^2+2xy+2y^2");
  EXPECT_EQ(form(2, {1, 0, 1, 0, 1}).to_string(), "x^4+x^2y^2+y^4");
  EXPECT_THROW(form(5, {0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(form(5, {1}), std::invalid_argument);
}

TEST(Act, Examples) {
  const PrimeField f3(3);
  const auto f = form(3, {1, 0, 1});
  EXPECT_EQ(act(f, Mat2(f3, 0, 1, 1, 0)), f);
  EXPECT_EQ(act(f, Mat2(f3, 1, 1, 0, 1)), form(3, {1, 2, 2}));
  EXPECT_EQ(act(f, Mat2::identity(f3)), f);
}

TEST(Act, MatchesDirectSubstitution) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 100; ++trial) {
      const unsigned n = static_cast<unsigned>(oracle::uniform(1, 6));
      std::vector<std::uint64_t> c(n + 1);
      for (auto& v : c) v = oracle::uniform(0, p - 1);
      c[0] = 1;
      const auto g = random_gl2(f);
      EXPECT_EQ(act(BinaryForm(f, c), g), BinaryForm(f, oracle::substitute(c, g.a(), g.b(), g.c(), g.d(), p)));
    }
  }
}

TEST(Act, IsARightActionPreservingIrreducibility) {
  for (std::uint64_t p : {3, 5, 7}) {
    const PrimeField f(p);
    const auto forms = enumerate_irreducible_forms(p, 4);
    for (int trial = 0; trial < 100; ++trial) {
      const auto& phi = forms[oracle::uniform(0, forms.size() - 1)];
      const auto g = random_gl2(f), h = random_gl2(f);
      EXPECT_EQ(act(act(phi, g), h), act(phi, g * h));
      EXPECT_TRUE(is_irreducible_form(act(phi, g)));
    }
  }
}

TEST(Irreducibility, Examples) {
  EXPECT_TRUE(is_irreducible_form(form(2, {1, 1, 1})));
  EXPECT_FALSE(is_irreducible_form(form(5, {1, 0, 0, 0})));  // x^3 has factor x
  EXPECT_FALSE(is_irreducible_form(form(5, {0, 1, 0, 0})));  // x^2 y
  EXPECT_FALSE(is_irreducible_form(form(5, {1, 0, 1})));
  EXPECT_TRUE(is_irreducible_form(form(5, {0, 1})));
}

TEST(Enumeration, Examples) {
  const auto q2 = enumerate_irreducible_forms(2, 4);
  ASSERT_EQ(q2.size(), 3U);
  EXPECT_EQ(q2[0].coefficients(), (std::vector<std::uint64_t>{1, 0, 0, 1, 1}));
  EXPECT_EQ(q2[1].coefficients(), (std::vector<std::uint64_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(q2[2].coefficients(), (std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(enumerate_irreducible_forms(3, 2).size(), 3U);
  const auto q22 = enumerate_irreducible_forms(2, 2);
  ASSERT_EQ(q22.size(), 1U);
  EXPECT_EQ(q22[0], form(2, {1, 1, 1}));
  EXPECT_THROW(enumerate_irreducible_forms(5, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_irreducible_forms(7, 8, 1000), BoundExceeded);
}

TEST(Enumeration, SieveAgreesWithTrialDivision) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 8}, {3, 5}, {5, 4}, {7, 3}, {11, 3}}) {
    const auto forms = enumerate_irreducible_forms(p, n);
    EXPECT_EQ(BigInt(forms.size()), count_monic_irreducible(p, n));
    std::set<std::vector<std::uint64_t>> listed;
    for (const auto& f : forms) {
      listed.insert(f.coefficients());
      EXPECT_TRUE(oracle::irreducible_by_trial_division({f.coefficients().rbegin(), f.coefficients().rend()}, p));
    }
    EXPECT_EQ(listed.size(), forms.size());
    EXPECT_TRUE(std::is_sorted(forms.begin(), forms.end()));
  }
}

TEST(PowerForm, Examples) {
  EXPECT_EQ(power_form(form(2, {1, 1, 1}), 2), form(2, {1, 0, 1, 0, 1}));
  EXPECT_EQ(power_form(form(7, {1, 3, 5}), 1), form(7, {1, 3, 5}));
  EXPECT_EQ(power_form(form(3, {1, 1}), 2), form(3, {1, 2, 1}));
  EXPECT_THROW(power_form(form(3, {1, 1}), 0), std::invalid_argument);
}

TEST(TransvectionBasis, Examples) {
  const auto b22 = transvection_fixed_basis(2, 2);
  ASSERT_EQ(b22.size(), 2U);
  EXPECT_EQ(b22[0], form(2, {1, 1, 0}));
  EXPECT_EQ(b22[1], form(2, {0, 0, 1}));
  EXPECT_EQ(transvection_fixed_basis(2, 4).size(), 3U);
  const auto b33 = transvection_fixed_basis(3, 3);
  EXPECT_EQ(b33[0], form(3, {1, 0, 2, 0}));
  EXPECT_EQ(b33[1], form(3, {0, 0, 0, 1}));
  EXPECT_THROW(transvection_fixed_basis(3, 4), std::invalid_argument);
}

TEST(TransvectionBasis, ElementsAreFixedByTheTransvection) {
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 6}, {5, 10}, {7, 7}}) {
    const PrimeField f(p);
    const Substitution t(Mat2(f, 1, 1, 0, 1), n);
    for (const auto& b : transvection_fixed_basis(p, n)) EXPECT_EQ(t.apply(b), b);
  }
}

TEST(Substitution, FixesMeansProjectivelyEqual) {
  const PrimeField f5(5);
  const auto phi = form(5, {1, 0, 2});
  const Substitution s(Mat2::scalar(f5, 2), 2);  // scales every quadratic by 4
  EXPECT_TRUE(s.fixes(phi));
  EXPECT_THROW(s.apply(form(5, {1, 0, 0, 2})), std::invalid_argument);
}
