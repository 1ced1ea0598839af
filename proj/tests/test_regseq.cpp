#include <gtest/gtest.h>

#include "oracles.hpp"
#include "regseq/conjectures.hpp"
#include "regseq/criteria.hpp"
#include "regseq/engine.hpp"
#include "regseq/filters.hpp"
#include "regseq/rank_test.hpp"
#include "regseq/symfunc.hpp"
#include "regseq/witness.hpp"

using namespace regseq;

namespace {

DegreeSet P(std::vector<std::uint32_t> d) {
  const std::size_t n = d.size();
  return DegreeSet(Family::Power, n, std::move(d));
}
DegreeSet H(std::vector<std::uint32_t> d) {
  const std::size_t n = d.size();
  return DegreeSet(Family::Complete, n, std::move(d));
}

EngineOptions rank_only(Strategy s = Strategy::Strict) {
  EngineOptions o;
  o.use_filters = false;
  o.use_closed_form = false;
  o.rank.strategy = s;
  return o;
}

// Floating-point check that every generator vanishes at the witness.
bool numerically_zero(const Witness& w, const GeneratorSet& a) {
  const auto z = oracle::numeric_point(w);
  for (auto d : a.degrees()) {
    const auto v = a.family() == Family::Power ? oracle::numeric_power_sum(d, z) : oracle::numeric_complete(d, z);
    if (std::abs(v) > 1e-9) return false;
  }
  return true;
}

}  // namespace

TEST(DegreeSet, Validation) {
  EXPECT_EQ(P({8, 1, 6}).degrees(), (std::vector<std::uint32_t>{1, 6, 8}));
  EXPECT_THROW(P({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(P({0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(DegreeSet(Family::Power, 3, {1, 2}), std::invalid_argument);
  EXPECT_THROW(parse_family("q"), std::invalid_argument);
  EXPECT_EQ(parse_family("h"), Family::Complete);
  EXPECT_EQ(P({1, 6, 8}).to_string(), "p{1,6,8}");
}

TEST(DegreeSet, NormalizeAndCriticalDegree) {
  const auto [d, reduced] = normalize(P({2, 4, 6}));
  EXPECT_EQ(d, 2U);
  EXPECT_EQ(reduced, P({1, 2, 3}));
  EXPECT_EQ(normalize(P({1, 6, 8})).d, 1U);
  EXPECT_EQ(normalize(P({6, 10, 15})).reduced, P({6, 10, 15}));
  EXPECT_THROW(normalize(H({2, 4, 6})), std::invalid_argument);
  EXPECT_EQ(critical_degree(P({1, 2, 3})), 4U);
  EXPECT_EQ(critical_degree(P({1, 6, 8})), 13U);
  EXPECT_EQ(critical_degree(P({1, 2, 3, 4})), 7U);
}

TEST(Filters, Factorial) {
  EXPECT_FALSE(factorial_filter(P({1, 3, 5})).passed);
  EXPECT_TRUE(factorial_filter(P({1, 2, 3})).passed);
  EXPECT_TRUE(factorial_filter(P({1, 3, 5, 8})).passed);
}

TEST(Filters, HilbertIntegrality) {
  EXPECT_FALSE(hilbert_integrality_filter(P({1, 3, 5})).passed);
  const auto ok = hilbert_integrality_filter(P({1, 2, 3}));
  ASSERT_TRUE(ok.passed);
  EXPECT_EQ(*ok.quotient, UniPoly::constant(1));
  const auto g = hilbert_integrality_filter(P({3, 4, 5}));
  ASSERT_TRUE(g.passed);
  EXPECT_EQ(*g.quotient, gaussian_binomial(2, 3));
}

TEST(Filters, RootsOfUnity) {
  const auto f = roots_of_unity_filter(P({1, 3, 5, 7}));
  ASSERT_FALSE(f.passed);
  EXPECT_EQ(f.modulus, 2U);
  ASSERT_TRUE(f.witness.has_value());
  EXPECT_TRUE(witness_verify(*f.witness, P({1, 3, 5, 7})));
  EXPECT_TRUE(numerically_zero(*f.witness, P({1, 3, 5, 7})));
  EXPECT_TRUE(roots_of_unity_filter(P({1, 2, 3})).passed);
  EXPECT_TRUE(roots_of_unity_filter(P({1, 3, 4, 12})).passed);
}

TEST(Filters, NFourSpecific) {
  EXPECT_FALSE(even_part_filter(P({1, 3, 4, 12})).passed);
  EXPECT_TRUE(even_part_filter(P({1, 2, 5, 12})).passed);
  EXPECT_TRUE(even_part_filter(P({1, 2, 3, 4})).passed);
  EXPECT_FALSE(subset_125_filter(P({1, 2, 5, 12})).passed);
  EXPECT_FALSE(subset_125_filter(P({2, 4, 10, 11})).passed);
  EXPECT_TRUE(subset_125_filter(P({1, 2, 3, 4})).passed);
  EXPECT_THROW(even_part_filter(P({1, 2, 3})), std::invalid_argument);
  const auto e = even_part_filter(P({1, 3, 4, 12}));
  ASSERT_TRUE(e.witness.has_value());
  EXPECT_TRUE(witness_verify(*e.witness, P({1, 3, 4, 12})));
}

TEST(Filters, CompleteFamily) {
  const auto c = h_congruence_filter(H({1, 2, 4}));
  ASSERT_FALSE(c.passed);
  EXPECT_EQ(c.modulus, 3U);
  EXPECT_TRUE(witness_verify(*c.witness, H({1, 2, 4})));
  EXPECT_TRUE(numerically_zero(*c.witness, H({1, 2, 4})));
  EXPECT_TRUE(h_congruence_filter(H({1, 2, 3})).passed);
  EXPECT_TRUE(h_congruence_filter(H({2, 3, 4})).passed);
  EXPECT_EQ(h_congruence_filter(H({2, 3, 10})).modulus, 4U);  // 4, 5, 12 are 0 or 1 mod 4

  const auto g = h_gcd_filter(H({1, 3}));
  ASSERT_FALSE(g.passed);
  EXPECT_TRUE(witness_verify(*g.witness, H({1, 3})));
  EXPECT_TRUE(h_gcd_filter(H({1, 2})).passed);
  const auto g3 = h_gcd_filter(H({1, 3, 5}));
  ASSERT_FALSE(g3.passed);
  EXPECT_TRUE(witness_verify(*g3.witness, H({1, 3, 5})));
  EXPECT_THROW(h_gcd_filter(P({1, 2})), std::invalid_argument);
}

TEST(Witness, ExamplesAndLifting) {
  const Witness pm({Witness::root(0, 1), Witness::root(1, 2)});
  EXPECT_TRUE(witness_verify(pm, P({3, 5})));
  EXPECT_FALSE(witness_verify(pm, P({2, 5})));
  const Witness rho({Witness::root(0, 1), Witness::root(1, 3), Witness::root(2, 3), Witness::zero()});
  // (1, rho, rho^2, 0) kills every p_b with 3 not dividing b, and no other.
  EXPECT_TRUE(witness_verify(rho, GeneratorSet(Family::Power, 4, {1, 2, 4, 5})));
  EXPECT_FALSE(witness_verify(rho, GeneratorSet(Family::Power, 4, {1, 3})));
  const Witness hx({Witness::root(1, 2), Witness::root(0, 1)});
  EXPECT_TRUE(witness_verify(hx, H({1, 3})));
  EXPECT_THROW(Witness({Witness::zero(), Witness::zero()}), std::invalid_argument);
  EXPECT_THROW(witness_verify(pm, P({1, 2, 3})), std::invalid_argument);

  // A common zero for {1, 3} lifts to one for {2, 6}.
  const Witness lifted = pm.root_of(2);
  EXPECT_TRUE(witness_verify(lifted, P({6, 10})));
  EXPECT_EQ(lifted.conductor(), 4);
}

TEST(Witness, PowerSumZeroBlocks) {
  for (const auto& d : std::vector<std::vector<std::uint32_t>>{{1, 3, 5, 7}, {1, 2, 5}, {1, 3}, {2, 3, 5, 7, 11}}) {
    const auto w = power_sum_zero(d, d.size());
    if (!w) continue;
    const GeneratorSet g(Family::Power, d.size(), d);
    EXPECT_TRUE(witness_verify(*w, g));
    EXPECT_TRUE(numerically_zero(*w, g));
  }
}

TEST(PairClosedForm, Examples) {
  const auto v = check_pair(P({3, 5}));
  EXPECT_EQ(v.status, Status::NotRegular);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(witness_verify(*v.witness, P({3, 5})));
  EXPECT_TRUE(check_pair(P({2, 4})).regular());
  EXPECT_TRUE(check_pair(H({1, 2})).regular());
  EXPECT_THROW(check_pair(P({1, 2, 3})), std::invalid_argument);
}

TEST(PairClosedForm, WitnessesLiftThroughTheGcd) {
  for (std::uint32_t a = 1; a <= 12; ++a) {
    for (std::uint32_t b = a + 1; b <= 12; ++b) {
      for (auto fam : {Family::Power, Family::Complete}) {
        const DegreeSet s(fam, 2, {a, b});
        const auto v = check_pair(s);
        if (v.regular()) continue;
        ASSERT_TRUE(v.witness) << s.to_string();
        EXPECT_TRUE(witness_verify(*v.witness, s)) << s.to_string();
      }
    }
  }
}

TEST(Engine, Examples) {
  EXPECT_TRUE(is_regular(P({3, 4, 5})).regular());
  const auto f = is_regular(P({1, 3, 5}));
  EXPECT_EQ(f.status, Status::NotRegular);
  EXPECT_EQ(f.method, Method::FactorialFilter);
  EXPECT_TRUE(is_regular(P({2, 3, 10})).regular());
  EXPECT_TRUE(is_regular(P({1, 6, 8})).regular());
  EXPECT_EQ(is_regular(P({1, 6, 8})).critical_degree, 13U);
}

TEST(Engine, NormalizationKeepsVerdicts) {
  for (const auto& d : std::vector<std::vector<std::uint32_t>>{{1, 2, 3}, {1, 3, 5}, {1, 2, 5}, {2, 3, 4}}) {
    const auto base = is_regular(P(d));
    std::vector<std::uint32_t> scaled = d;
    for (auto& x : scaled) x *= 3;
    const auto v = is_regular(P(scaled));
    EXPECT_EQ(v.status, base.status);
    EXPECT_EQ(v.normalized_by, 3U);
    if (v.witness) EXPECT_TRUE(witness_verify(*v.witness, P(scaled)));
  }
}

TEST(Engine, FiltersAgreeWithRank) {
  // Filter-decided negatives are confirmed by exact rank deficiency.
  for (const auto& d : std::vector<std::vector<std::uint32_t>>{{1, 3, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}}) {
    for (auto fam : {Family::Power, Family::Complete}) {
      const DegreeSet s(fam, 3, d);
      const auto with_filters = is_regular(s);
      const auto rank = is_regular(s, rank_only());
      EXPECT_EQ(with_filters.regular(), rank.regular()) << s.to_string();
    }
  }
}

TEST(Engine, InvariantAndMonomialRoutesAgree) {
  for (const auto& d : std::vector<std::vector<std::uint32_t>>{{1, 3, 5}, {1, 2, 4}, {2, 3, 4}, {1, 4, 6}}) {
    for (auto fam : {Family::Power, Family::Complete}) {
      const DegreeSet s(fam, 3, d);
      RankOptions mono{Strategy::Strict, 3, kDefaultSeed, Route::Monomial};
      RankOptions inv{Strategy::Strict, 3, kDefaultSeed, Route::Invariant};
      const auto a = rank_test(s, mono);
      const auto b = rank_test(s, inv);
      EXPECT_EQ(a.outcome, b.outcome) << s.to_string();
      EXPECT_EQ(a.rank, b.rank) << s.to_string();
      EXPECT_EQ(a.expected_rank, b.expected_rank);
    }
  }
}

TEST(Engine, StrictConfirmsNegatives) {
  const auto v = is_regular(P({1, 3, 5}), rank_only(Strategy::Strict));
  EXPECT_EQ(v.status, Status::NotRegular);
  EXPECT_EQ(v.method, Method::RankExact);
  const auto fast = is_regular(P({1, 3, 5}), rank_only(Strategy::Fast));
  EXPECT_EQ(fast.status, Status::ProbablyNotRegular);
  EXPECT_EQ(fast.primes.size(), 3U);
}

TEST(Engine, SeedIsRecordedAndDeterministic) {
  EngineOptions o = rank_only(Strategy::Fast);
  o.rank.seed = 1234;
  const auto a = is_regular(P({1, 2, 4}), o);
  const auto b = is_regular(P({1, 2, 4}), o);
  EXPECT_EQ(a.seed, 1234U);
  EXPECT_EQ(a.primes, b.primes);
  EXPECT_EQ(a.status, b.status);
}

TEST(Hilbert, Examples) {
  const GeneratorSet a(Family::Power, 3, {1, 2, 3});
  EXPECT_EQ(hilbert_function(a, 0), BigInt(1));
  EXPECT_EQ(hilbert_function(a, 4), BigInt(0));
  const GeneratorSet b(Family::Power, 3, {3, 4, 5});
  const auto series = hilbert_series(b, 10);
  const auto expected = oracle::complete_intersection_series({3, 4, 5}, 3, 10);
  EXPECT_EQ(series, expected);
}

TEST(Hilbert, RoutesAgreeOnNonRegularQuotients) {
  const GeneratorSet a(Family::Power, 3, {1, 3, 5});
  for (std::uint32_t k = 0; k <= 9; ++k) {
    EXPECT_EQ(hilbert_function(a, k, Route::Monomial), hilbert_function(a, k, Route::Invariant)) << k;
  }
  // not regular: the quotient is not finite-dimensional at the critical degree
  EXPECT_GT(hilbert_function(a, 7), BigInt(0));
}

TEST(IdealMembership, Examples) {
  EXPECT_TRUE(ideal_membership(power_sum(5, 4), GeneratorSet(Family::Power, 4, {1, 2})));
  EXPECT_FALSE(ideal_membership(power_sum(2, 3), GeneratorSet(Family::Power, 3, {1})));
  EXPECT_TRUE(ideal_membership(power_sum(10, 4), GeneratorSet(Family::Power, 4, {2, 4})));
  EXPECT_FALSE(ideal_membership(power_sum(7, 4), GeneratorSet(Family::Power, 4, {1, 2})));
  EXPECT_THROW(ideal_membership(power_sum(2, 3) + power_sum(1, 3), GeneratorSet(Family::Power, 3, {1})),
               std::invalid_argument);
}

TEST(Criteria, GcdCriterion) {
  EXPECT_TRUE(gcd_criterion_triple(2, 6));
  EXPECT_TRUE(gcd_criterion_triple(3, 4));
  EXPECT_THROW(gcd_criterion_triple(3, 5), std::invalid_argument);
  EXPECT_THROW(gcd_criterion_triple(4, 4), std::invalid_argument);
  // f_b(x) = p_b(x, 1, -1 - x)
  for (std::uint32_t b = 1; b <= 20; ++b) {
    const MultiPoly xv = MultiPoly::variable(1, 0);
    const MultiPoly one = MultiPoly::constant(1, BigRat(1));
    const std::vector<MultiPoly> point = {xv, one, -(xv + one)};
    EXPECT_EQ(to_univariate(substitute(power_sum(b, 3), point)), f_b_polynomial(b)) << b;
  }
}

TEST(Criteria, EisensteinAndModuloOne) {
  EXPECT_TRUE(eisenstein_family_check(1, 0));
  EXPECT_TRUE(eisenstein_family_check(1, 1));
  EXPECT_TRUE(eisenstein_family_check(2, 0));
  EXPECT_THROW(eisenstein_family_check(0, 1), std::invalid_argument);
  EXPECT_TRUE(verify_modulo1(P({1, 6, 8})));
  EXPECT_TRUE(verify_modulo1(P({2, 3, 10})));
  EXPECT_THROW(verify_modulo1(P({1, 2, 4})), std::invalid_argument);
}

TEST(Conjectures, NFourExemplars) {
  const auto a = n4_power_conditions(P({1, 3, 5, 8}));
  EXPECT_FALSE(a.parity_counts);
  const auto b = n4_power_conditions(P({1, 3, 4, 12}));
  EXPECT_TRUE(b.parity_counts);
  EXPECT_FALSE(b.even_part);
  const auto c = n4_power_conditions(P({1, 2, 5, 12}));
  EXPECT_TRUE(c.parity_counts);
  EXPECT_TRUE(c.even_part);
  EXPECT_FALSE(c.no_125);
  EXPECT_TRUE(n4_power_conditions(P({1, 2, 3, 4})).all());
}

TEST(Conjectures, ThreeVariablePredictions) {
  EXPECT_TRUE(n3_power_prediction(P({1, 6, 8})));
  EXPECT_FALSE(n3_power_prediction(P({1, 3, 5})));
  EXPECT_TRUE(n3_complete_conditions(H({1, 2, 3})).all());
  EXPECT_FALSE(n3_complete_conditions(H({1, 2, 4})).congruence);
  EXPECT_FALSE(n3_complete_conditions(H({1, 3, 5})).gcd_shift);
}
