#include <gtest/gtest.h>

#include "oracles.hpp"
#include "regseq/symfunc.hpp"

using namespace regseq;

namespace {

MultiPoly x(std::size_t arity, std::size_t i) { return MultiPoly::variable(arity, i); }

// e-basis polynomial with e_1 set to zero, as a string over e1..e3.
std::string mod_e1(unsigned m) { return power_in_e_basis(m, 3).poly.set_zero(0).to_string("e"); }

}  // namespace

TEST(Generators, SmallExamples) {
  EXPECT_EQ(power_sum(2, 2), x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1));
  EXPECT_EQ(power_sum(1, 3), x(3, 0) + x(3, 1) + x(3, 2));
  EXPECT_EQ(elementary(2, 3), x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) + x(3, 1) * x(3, 2));
  EXPECT_EQ(complete(2, 2), x(2, 0) * x(2, 0) + x(2, 0) * x(2, 1) + x(2, 1) * x(2, 1));
  EXPECT_EQ(monomial_sym(Partition({1, 2}), 2), x(2, 0) * x(2, 0) * x(2, 1) + x(2, 0) * x(2, 1) * x(2, 1));
  EXPECT_TRUE(elementary(4, 3).is_zero());
  EXPECT_EQ(elementary(0, 3), MultiPoly::constant(3, BigRat(1)));
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(monomial_sym(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST(Generators, CompleteIsSumOfMonomialSymmetric) {
  // h_3(3) = m_3 + m_21 + m_111
  const MultiPoly h3 = monomial_sym(Partition({3}), 3) + monomial_sym(Partition({2, 1}), 3) +
                       monomial_sym(Partition({1, 1, 1}), 3);
  EXPECT_EQ(complete(3, 3), h3);
}

TEST(Newton, ResidualVanishes) {
  EXPECT_TRUE(newton_residual(2, 0).is_zero());
  EXPECT_TRUE(newton_residual(3, 1).is_zero());
  EXPECT_TRUE(newton_residual(4, 2).is_zero());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned h = 0; h <= 5; ++h) EXPECT_TRUE(newton_residual(n, h).is_zero()) << n << " " << h;
  }
}

TEST(EBasis, ExpansionRecoversGenerators) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (unsigned m = 1; m <= 8; ++m) {
      EXPECT_EQ(expand_e_basis(power_in_e_basis(m, n)), power_sum(m, n)) << "p" << m << "(" << n << ")";
      EXPECT_EQ(expand_e_basis(complete_in_e_basis(m, n)), complete(m, n)) << "h" << m << "(" << n << ")";
    }
  }
}

TEST(EBasis, Examples) {
  const MultiPoly p2 = power_in_e_basis(2, 3).poly;
  EXPECT_EQ(p2, x(3, 0) * x(3, 0) - x(3, 1) * BigRat(2));
  EXPECT_EQ(power_in_e_basis(6, 3).poly.set_zero(0),
            x(3, 1).pow(3) * BigRat(-2) + x(3, 2).pow(2) * BigRat(3));
  EXPECT_EQ(power_in_e_basis(7, 3).poly.set_zero(0), x(3, 1).pow(2) * x(3, 2) * BigRat(7));
  EXPECT_FALSE(mod_e1(6).empty());
}

TEST(EBasis, MonomialsOfWeight) {
  const auto w4 = e_monomials(4, 3);
  // e1^4, e1^2 e2, e2^2, e1 e3
  EXPECT_EQ(w4.size(), 4U);
  for (const auto& m : w4) EXPECT_EQ(m[0] + 2 * m[1] + 3 * m[2], 4U);
  EXPECT_TRUE(std::is_sorted(w4.begin(), w4.end()));
}

TEST(ModE1, Classification) {
  const auto c4 = classify_mod_e1(4);
  EXPECT_TRUE(c4.is_monomial);
  EXPECT_FALSE(c4.unit.is_zero());
  EXPECT_EQ(c4.e2_exp, 2U);
  EXPECT_EQ(c4.e3_exp, 0U);
  const auto c5 = classify_mod_e1(5);
  EXPECT_TRUE(c5.is_monomial);
  EXPECT_EQ(c5.e2_exp, 1U);
  EXPECT_EQ(c5.e3_exp, 1U);
  EXPECT_FALSE(classify_mod_e1(6).is_monomial);
  for (unsigned t : {2U, 3U, 4U, 5U, 7U}) EXPECT_TRUE(classify_mod_e1(t).is_monomial) << t;
}

TEST(Reductions, ModP1P6) {
  const auto r2 = reduce_mod_p1_p6(2);
  EXPECT_EQ(r2.coefficient, BigRat(-2));
  EXPECT_EQ(r2.e2_exp, 1U);
  EXPECT_EQ(r2.e3_exp, 0U);
  const auto r8 = reduce_mod_p1_p6(8);
  EXPECT_EQ(r8.coefficient, BigRat("-10/3"));
  EXPECT_EQ(r8.e2_exp, 4U);
  EXPECT_TRUE(reduce_mod_p1_p6(6).coefficient.is_zero());
  // shape: e2^h for m = 2h, e2^{h-1} e3 for m = 2h + 1
  for (unsigned m = 2; m <= 40; ++m) {
    const auto r = reduce_mod_p1_p6(m);
    if (r.coefficient.is_zero()) continue;
    EXPECT_EQ(r.e3_exp, m % 2);
    EXPECT_EQ(r.e2_exp, m % 2 == 0 ? m / 2 : (m - 1) / 2 - 1);
  }
}

TEST(Reductions, ModP2P3MatchesGeneratingRecurrence) {
  // p_d = c_d p_1^d modulo (p_2, p_3)
  for (unsigned d = 1; d <= 25; ++d) EXPECT_EQ(reduce_mod_p2_p3(d), c_coefficient(d)) << d;
}

TEST(Coefficients, AgreeWithReductionOracle) {
  EXPECT_EQ(a_coefficient(2), BigRat(-2));
  EXPECT_EQ(a_coefficient(8), BigRat("-10/3"));
  EXPECT_TRUE(a_coefficient(6).is_zero());
  for (unsigned m = 2; m <= 80; ++m) {
    const BigRat oracle_value = oracle::a_by_reduction(m);
    EXPECT_EQ(a_coefficient(m), oracle_value) << m;
    EXPECT_EQ(reduce_mod_p1_p6(m).coefficient, oracle_value) << m;
  }
}

TEST(Coefficients, FPolynomial) {
  const UniPoly f8 = f_polynomial(8);
  EXPECT_EQ(f8, UniPoly({BigRat(2), BigRat(-8)}));
  EXPECT_EQ(f8.evaluate(BigRat("2/3")), a_coefficient(8));
  for (unsigned m = 2; m <= 200; ++m) {
    const UniPoly f = f_polynomial(m);
    EXPECT_TRUE(f.has_integer_coeffs()) << m;
    EXPECT_EQ(f.evaluate(BigRat("2/3")), a_coefficient(m)) << m;
  }
  EXPECT_THROW(a_coefficient(1), std::invalid_argument);
}

TEST(Coefficients, CSequence) {
  EXPECT_EQ(c_coefficient(1), BigRat(1));
  EXPECT_TRUE(c_coefficient(2).is_zero());
  EXPECT_TRUE(c_coefficient(3).is_zero());
  EXPECT_EQ(c_coefficient(4), BigRat("1/6"));
  EXPECT_EQ(c_coefficient(6), BigRat("1/12"));
  for (unsigned d = 4; d <= 60; ++d) {
    EXPECT_EQ(c_coefficient(d), c_coefficient(d - 1) - c_coefficient(d - 2) / BigRat(2) + c_coefficient(d - 3) / BigRat(6));
    EXPECT_EQ(c_coefficient_sign(d), 1);
  }
}

TEST(Coefficients, GrowthCheck) {
  const auto g = c_growth_check(10);
  EXPECT_TRUE(g.exact_positive);
  EXPECT_TRUE(g.ratio_in_range);
  EXPECT_NEAR(g.ratio4, 2.17, 0.01);
  EXPECT_TRUE(g.dominance);
  EXPECT_TRUE(g.power_sum_matches);
  // alpha is the real root of x^3 - x^2 + x/2 - 1/6
  EXPECT_NEAR(((g.alpha - 1) * g.alpha + 0.5) * g.alpha - 1.0 / 6.0, 0.0, 1e-12);
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(gaussian_binomial(1, 2), UniPoly({BigRat(1), BigRat(1), BigRat(1)}));
  EXPECT_EQ(gaussian_binomial(2, 2), UniPoly({BigRat(1), BigRat(1), BigRat(2), BigRat(1), BigRat(1)}));
}

TEST(Gaussian, CoefficientsCountPartitions) {
  for (unsigned d = 0; d <= 6; ++d) {
    for (unsigned n = 1; n <= 6; ++n) {
      const UniPoly g = gaussian_binomial(d, n);
      for (unsigned k = 0; k <= d * n; ++k) {
        EXPECT_EQ(g.coeff(k), BigRat(oracle::bounded_partitions(k, n, d))) << d << " " << n << " " << k;
        EXPECT_EQ(partition_count(k, n, d), oracle::bounded_partitions(k, n, d));
      }
    }
  }
}
