#include <gtest/gtest.h>

#include "starkit/formulas.hpp"

using namespace starkit;

namespace {

std::uint64_t fact(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * fact(n - 1); }

}  // namespace

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa_nkstar_formula(4, 2, 2), (FormulaResult{3, Branch::split_bound}));
  EXPECT_EQ(kappa_nkstar_formula(4, 2, 1), (FormulaResult{3, Branch::low_h_vertex}));
  EXPECT_EQ(kappa_nkstar_formula(5, 3, 2), (FormulaResult{6, Branch::split_bound}));
  EXPECT_EQ(kappa_nkstar_formula(5, 3, 1).value, 5u);
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda_nkstar_formula(5, 3, 1), (FormulaResult{6, Branch::low_h_edge_min}));
  EXPECT_EQ(lambda_nkstar_formula(4, 2, 1), (FormulaResult{3, Branch::low_h_edge_flat}));
  EXPECT_EQ(lambda_nkstar_formula(5, 2, 3), (FormulaResult{4, Branch::split_bound}));
}

TEST(Star, Examples) {
  EXPECT_EQ(star_formula(4, 0), (FormulaResult{3, Branch::star}));
  EXPECT_EQ(star_formula(4, 1).value, 4u);
  EXPECT_EQ(star_formula(4, 2).value, 6u);
  EXPECT_THROW(star_formula(4, 3), DomainError);
}

TEST(Alternating, Examples) {
  EXPECT_EQ(an_formula(5, 2), (FormulaResult{6, Branch::alternating}));
  EXPECT_EQ(an_formula(5, 3), (FormulaResult{12, Branch::alternating}));
  EXPECT_EQ(an_formula(4, 2), (FormulaResult{3, Branch::alternating}));
  EXPECT_THROW(an_formula(3, 1), DomainError);
}

TEST(Alternating, MatchesTwelveTimesNMinusFourAtH3) {
  for (int n = 5; n <= 15; ++n) EXPECT_EQ(an_formula(n, 3).value, 12u * static_cast<std::uint64_t>(n - 4));
}

TEST(Alternating, AgreesWithNkStarAtKEqualsNMinusTwo) {
  for (int n = 4; n <= 12; ++n)
    for (int h = 0; h <= n - 2; ++h)
      for (auto m : {Measure::kappa, Measure::lambda})
        EXPECT_EQ(an_formula(n, h, m).value, nkstar_formula(m, n, n - 2, h).value) << n << "," << h;
}

TEST(Domain, Rejections) {
  EXPECT_THROW(kappa_nkstar_formula(4, 1, 0), DomainError);
  EXPECT_THROW(kappa_nkstar_formula(4, 4, 0), DomainError);
  EXPECT_THROW(kappa_nkstar_formula(4, 2, 3), DomainError);
  EXPECT_THROW(lambda_nkstar_formula(4, 2, -1), DomainError);
  EXPECT_THROW(parse_measure("mu"), DomainError);
}

TEST(Property, BranchesAgreeAtBoundaryUpToTwelve) {
  for (int n = 3; n <= 12; ++n)
    for (int k = 2; k <= n - 1; ++k) {
      const int h = n - k;
      EXPECT_NO_THROW(kappa_nkstar_formula(n, k, h)) << n << "," << k;
      EXPECT_NO_THROW(lambda_nkstar_formula(n, k, h)) << n << "," << k;
      EXPECT_EQ(kappa_nkstar_formula(n, k, h).branch, Branch::split_bound);
      EXPECT_EQ(kappa_nkstar_formula(n, k, h).value, lambda_nkstar_formula(n, k, h).value);
    }
}

TEST(Property, HighRegimeMatchesClosedForm) {
  for (int n = 3; n <= 12; ++n)
    for (int k = 2; k <= n - 1; ++k)
      for (int h = n - k; h <= n - 2; ++h) {
        const auto expected = fact(h + 1) / fact(n - k) * static_cast<std::uint64_t>(n - h - 1);
        EXPECT_EQ(kappa_nkstar_formula(n, k, h).value, expected);
        EXPECT_EQ(lambda_nkstar_formula(n, k, h).value, expected);
      }
}

TEST(Names, BranchIds) {
  EXPECT_EQ(to_string(Branch::low_h_vertex), "eq1_1");
  EXPECT_EQ(to_string(Branch::low_h_edge_min), "eq1_2_low");
  EXPECT_EQ(to_string(Branch::low_h_edge_flat), "eq1_2_high");
  EXPECT_EQ(to_string(Branch::split_bound), "eq3_5");
  EXPECT_EQ(to_string(Branch::star), "lemma2_1");
  EXPECT_EQ(to_string(Branch::alternating), "cor3_5");
}
