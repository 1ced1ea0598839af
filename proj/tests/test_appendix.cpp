#include <gtest/gtest.h>

#include "oracles.hpp"
#include "regseq/appendix.hpp"
#include "regseq/symfunc.hpp"

using namespace regseq;

namespace {

BigRat rewritten_sum(long h) {
  BigRat s;
  for (const auto& t : case_rewrite(h)) s += t.value;
  return s;
}

}  // namespace

TEST(SumA1, Examples) {
  EXPECT_TRUE(sum_A1(3).is_zero());
  EXPECT_EQ(sum_A1(1), BigRat(-1));
  EXPECT_EQ(sum_A1(4), BigRat("-5/12"));
  EXPECT_THROW(sum_A1(0), std::invalid_argument);
}

TEST(SumA1, LinksToACoefficient) {
  for (long h = 1; h <= 100; ++h) {
    EXPECT_EQ(a_coefficient(static_cast<unsigned>(2 * h)), BigRat(2 * h) * sum_A1(h)) << h;
  }
}

TEST(CaseRewrite, TagsAndSums) {
  EXPECT_EQ(case_of(6), CaseTag::Case1);
  EXPECT_EQ(case_of(12), CaseTag::Case1Special);
  EXPECT_EQ(case_of(7), CaseTag::Case2);
  EXPECT_EQ(case_of(8), CaseTag::Case3);
  EXPECT_EQ(case_of(5), CaseTag::Case3Special);
  EXPECT_EQ(case_of(14), CaseTag::Case3Special);
  EXPECT_THROW(case_of(3), std::invalid_argument);
  for (long h : {6L, 7L, 8L}) {
    EXPECT_EQ(case_k(h), 2);
    EXPECT_EQ(rewritten_sum(h), sum_A1(h)) << h;
  }
  for (long h = 4; h <= 300; ++h) EXPECT_EQ(rewritten_sum(h), sum_A1(h)) << h;
}

TEST(CaseRewrite, SummandValuationsAreExact) {
  for (long h = 4; h <= 60; ++h) {
    for (const auto& t : case_rewrite(h)) {
      if (t.value.is_zero()) continue;
      EXPECT_EQ(t.valuation.value(), oracle::valuation(t.value, 3)) << h << " b=" << t.b;
    }
  }
}

TEST(CombinedTerm, Examples) {
  // h = 12, k = 4: -(2^3 / 3^4) * 3 * 37 / 4 = -74/27, valuation 1 - 4
  const BigRat t12 = combined_term(12);
  EXPECT_EQ(t12, BigRat("-74/27"));
  EXPECT_EQ(t12, -(BigRat(8) / BigRat(81)) * BigRat(3 * 37) / BigRat(4));
  EXPECT_EQ(combined_closed_form(12), t12);
  EXPECT_EQ(padic_valuation(t12, 3), PadicVal::finite(-3));

  EXPECT_EQ(combined_term(21), combined_closed_form(21));
  EXPECT_EQ(padic_valuation(combined_term(21), 3), PadicVal::finite(-6));
  EXPECT_EQ(combined_term(14), combined_closed_form(14));
  EXPECT_EQ(padic_valuation(combined_term(14), 3), PadicVal::finite(-2));

  EXPECT_THROW(combined_term(6), std::invalid_argument);
  EXPECT_THROW(combined_term(7), std::invalid_argument);
}

TEST(CombinedTerm, ClosedFormsAndValuationsUpTo2000) {
  for (long h = 5; h <= 2000; ++h) {
    const CaseTag tag = case_of(h);
    if (tag != CaseTag::Case1Special && tag != CaseTag::Case3Special) continue;
    const long k = case_k(h);
    const long f = oracle::valuation(BigRat(tag == CaseTag::Case1Special ? k - 1 : 2 * k + 1), 3);
    const BigRat t = combined_term(h);
    ASSERT_EQ(t, combined_closed_form(h)) << h;
    ASSERT_EQ(oracle::valuation(t, 3), f - k) << h;
  }
}

TEST(Dominance, Examples) {
  const auto p6 = dominance_check(6);
  EXPECT_EQ(p6.summands.size(), 3U);
  EXPECT_TRUE(p6.dominance);
  EXPECT_LE(p6.leading_valuation, PadicVal::finite(-2));
  EXPECT_EQ(p6.summands[0].valuation, p6.leading_valuation);

  const auto p12 = dominance_check(12);
  EXPECT_EQ(p12.f, 1);
  for (std::size_t b = 2; b < p12.summands.size(); ++b) EXPECT_GT(p12.summands[b].valuation, PadicVal::finite(-3));
  EXPECT_TRUE(p12.others_claim);

  const auto p5 = dominance_check(5);
  EXPECT_EQ(p5.tag, CaseTag::Case3Special);
  ASSERT_TRUE(p5.combined_valuation.has_value());
  EXPECT_TRUE(p5.dominance);
  EXPECT_EQ(p5.sum_valuation, *p5.combined_valuation);
}

TEST(Dominance, ImpliesNonvanishingAndUltrametricEquality) {
  for (long h = 4; h <= 400; ++h) {
    const auto p = dominance_check(h);
    ASSERT_TRUE(p.leading_claim && p.others_claim && p.dominance) << h;
    EXPECT_FALSE(sum_A1(h).is_zero());
    EXPECT_EQ(p.sum_valuation, p.leading_valuation) << h;
    // a_{2h} = 2h S(h) and 3 does not divide... only through 2h: v(a_{2h}) = v(2h) + v(S)
    EXPECT_EQ(padic_valuation(a_coefficient(static_cast<unsigned>(2 * h)), 3),
              PadicVal::finite(oracle::valuation(BigRat(2 * h), 3)) + p.leading_valuation)
        << h;
  }
}

TEST(CarryBound, CaseThreeHolds) {
  const auto r = carry_bound_check(14);
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.holds);
  for (long h = 5; h <= 2000; h += 3) ASSERT_TRUE(carry_bound_check(h).holds) << h;
}

TEST(CarryBound, CarryCountsMatchKummer) {
  for (long h : {12L, 14L, 21L, 95L, 302L}) {
    for (const auto& row : carry_bound_check(h).rows) {
      const long k = case_k(h);
      const bool case1 = h % 3 == 0;
      const std::uint64_t m = case1 ? 3 * row.b : 3 * row.b + 2;
      const std::uint64_t n = 2 * k - 2 * row.b;
      EXPECT_EQ(row.carries, oracle::binomial_valuation(m, n, 3)) << h << " b=" << row.b;
    }
  }
}

TEST(CarryBound, ZeroEReducesToTheMaxTerm) {
  for (long h : {12L, 39L, 66L}) {
    for (const auto& row : carry_bound_check(h).rows) {
      if (row.e != 0) continue;
      EXPECT_EQ(row.bound, std::max(0L, row.f - row.s + (row.s != 1 ? 1 : 0))) << h << " b=" << row.b;
    }
  }
}

// The displayed lower bound for h = 3 (mod 9) counts one carry too many whenever
// 3 | 2k + b: at h = 12, b = 4 we have e = v_3(12) = 1, yet 12 + 0 has no carries.
// Counting from the second ternary digit (e - 1 in place of e) the bound holds.
TEST(CarryBound, CaseOneDisplayedBoundIsTooStrong) {
  const auto r12 = carry_bound_check(12);
  ASSERT_TRUE(r12.applicable);
  EXPECT_FALSE(r12.holds);
  const auto bad = std::find_if(r12.rows.begin(), r12.rows.end(), [](const CarryRow& row) { return !row.holds; });
  ASSERT_NE(bad, r12.rows.end());
  EXPECT_EQ(bad->b, 4);
  EXPECT_EQ(bad->carries, 0);
  EXPECT_EQ(bad->bound, 1);
  for (long h = 12; h <= 2000; h += 9) {
    const auto r = carry_bound_check(h);
    ASSERT_TRUE(r.shifted_holds) << h;
  }
  // The claim the bound was meant to support still holds (see Dominance tests).
  EXPECT_TRUE(dominance_check(12).others_claim);
}

TEST(Nonvanishing, ScanTo100) {
  const auto r = verify_nonvanishing(100);
  EXPECT_TRUE(r.h3_is_zero);
  EXPECT_TRUE(r.nonvanishing());
  EXPECT_TRUE(r.zero_sums.empty());
  EXPECT_TRUE(r.rewrite_mismatches.empty());
  EXPECT_TRUE(r.combined_mismatches.empty());
  EXPECT_TRUE(r.dominance_anomalies.empty());
  EXPECT_TRUE(r.ultrametric_mismatches.empty());
  EXPECT_TRUE(r.a_link_mismatches.empty());
  EXPECT_TRUE(r.shifted_carry_failures.empty());
  EXPECT_EQ(r.carry_failures, (std::vector<long>{12, 21, 30, 39, 48, 57, 66, 75, 84, 93}));
  EXPECT_THROW(verify_nonvanishing(3), std::invalid_argument);
}
