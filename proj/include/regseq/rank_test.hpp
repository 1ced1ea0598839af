#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regseq/degree_set.hpp"
#include "regseq/linalg.hpp"

namespace regseq {

enum class Strategy { Fast, Strict };

// Which ambient space the rank test works in. The invariant route uses that
// C[x] is free over C[e_1..e_n]: the degree-D part of the quotient is a sum of
// shifted copies of the quotient of the invariant ring, which is much smaller.
enum class Route { Auto, Monomial, Invariant };

inline constexpr std::uint64_t kDefaultSeed = 0x5EED2024ULL;

struct RankOptions {
  Strategy strategy = Strategy::Fast;
  std::size_t prime_count = 3;
  std::uint64_t seed = kDefaultSeed;
  Route route = Route::Auto;
};

// Rows (a, mu) for every generator degree a <= D and monomial mu of degree D - a,
// holding the coefficients of mu * g_a; columns are the degree-D monomials in
// ascending grlex order. Generators of degree above D contribute no rows.
IntMatrix build_degree_matrix(const GeneratorSet& a, std::uint32_t degree);
// Same construction in the invariant ring: rows gamma * G_a with G_a written in
// e_1..e_n, columns the e-monomials of the given weight.
IntMatrix build_invariant_matrix(const GeneratorSet& a, std::uint32_t weight);

std::uint64_t monomial_count(std::size_t n, std::uint64_t degree);  // C(D+n-1, n-1)

enum class RankOutcome { Full, Deficient, ProbablyDeficient };

struct RankReport {
  RankOutcome outcome = RankOutcome::Deficient;
  bool exact = false;            // decided by exact elimination
  Route route = Route::Monomial; // route actually used
  std::uint64_t critical_degree = 0;
  std::uint64_t rank = 0;        // rank of the degree matrix at the critical degree
  std::uint64_t expected_rank = 0;
  std::vector<std::uint64_t> primes;
};

// Decide whether the ideal contains every form of the critical degree.
RankReport rank_test(const DegreeSet& a, const RankOptions& opts);

// dim of the degree-k part of C[x]/(generators); always exact.
BigInt hilbert_function(const GeneratorSet& a, std::uint32_t k, Route route = Route::Auto);
std::vector<BigInt> hilbert_series(const GeneratorSet& a, std::uint32_t k_max, Route route = Route::Auto);

// f homogeneous (or zero); true iff f lies in the ideal. Exact.
bool ideal_membership(const MultiPoly& f, const GeneratorSet& a);

}  // namespace regseq
