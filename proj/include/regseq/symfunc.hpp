#pragma once

#include <cstdint>
#include <vector>

#include "regseq/arith.hpp"
#include "regseq/poly.hpp"

namespace regseq {

// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts; throws std::invalid_argument on a zero part.
  explicit Partition(std::vector<std::uint32_t> parts);

  const std::vector<std::uint32_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::uint32_t weight() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> parts_;
};

MultiPoly power_sum(unsigned k, std::size_t n);
// e_k; e_0 = 1 and e_k = 0 for k > n.
MultiPoly elementary(unsigned k, std::size_t n);
// h_k; h_0 = 1.
MultiPoly complete(unsigned k, std::size_t n);
// Orbit sum of x^lambda; throws when lambda has more than n parts.
MultiPoly monomial_sym(const Partition& lambda, std::size_t n);

// sum_{k=0}^{n} (-1)^k e_{n-k} p_{k+h} with p_0 = n. Always zero.
MultiPoly newton_residual(std::size_t n, unsigned h);

// A polynomial in e_1..e_n: variable i-1 of `poly` stands for e_i.
struct EBasisPoly {
  MultiPoly poly;
  std::size_t arity() const { return poly.arity(); }
};

// p_m and h_m written in e_1..e_n via the Newton recursions. Memoized,
// safe for concurrent callers.
EBasisPoly power_in_e_basis(unsigned m, std::size_t n);
EBasisPoly complete_in_e_basis(unsigned m, std::size_t n);

// Replace e_i by elementary(i, n).
MultiPoly expand_e_basis(const EBasisPoly& f);

// Monomials e_1^g1 ... e_n^gn of weight sum i*g_i = weight, ascending grlex
// in the exponent vectors g.
std::vector<Monomial> e_monomials(std::uint32_t weight, std::size_t n);

// Shape of p_t(3) once e_1 is set to zero.
struct ModE1Class {
  bool is_monomial = false;
  BigRat unit;
  std::uint32_t e2_exp = 0;
  std::uint32_t e3_exp = 0;
};
ModE1Class classify_mod_e1(unsigned t);

// c * e_2^{e2_exp} * e_3^{e3_exp}, with e3_exp in {0, 1}.
struct ReducedShape {
  BigRat coefficient;
  std::uint32_t e2_exp = 0;
  std::uint32_t e3_exp = 0;
};
// p_m(3) modulo (p_1, p_6): set e_1 = 0 and rewrite e_3^2 as (2/3) e_2^3.
ReducedShape reduce_mod_p1_p6(unsigned m);

// The constant c with p_d(3) = c * p_1^d modulo (p_2, p_3), by substituting
// e_1 = t, e_2 = t^2/2, e_3 = t^3/6 into the e-basis form.
BigRat reduce_mod_p2_p3(unsigned d);

// Closed-form sums for the coefficient a_m and its polynomial f_m (a_m = f_m(2/3)).
BigRat a_coefficient(unsigned m);
UniPoly f_polynomial(unsigned m);

// c_1 = 1, c_2 = c_3 = 0, c_d = c_{d-1} - c_{d-2}/2 + c_{d-3}/6. Memoized.
BigRat c_coefficient(unsigned d);
// Sign of c_d without building the reduced fraction.
int c_coefficient_sign(unsigned d);

struct GrowthReport {
  unsigned d_max = 0;
  double alpha = 0;       // real root of x^3 - x^2 + x/2 - 1/6
  double beta_abs = 0;    // modulus of the complex pair
  double ratio4 = 0;      // (alpha / |beta|)^4
  bool ratio_in_range = false;   // 2.16 <= ratio4 <= 2.18
  bool dominance = false;        // alpha^d > 2 |beta|^d for 4 <= d <= d_max
  bool power_sum_matches = false;  // c_d ~ alpha^d + 2 Re(beta^d) for small d
  bool exact_positive = false;     // c_d > 0 for 4 <= d <= d_max
  unsigned first_nonpositive = 0;  // 0 when none
};
GrowthReport c_growth_check(unsigned d_max);

// prod_{i=1}^{n} (1 - q^{d+i}) / (1 - q^i), by exact division.
UniPoly gaussian_binomial(unsigned d, unsigned n);
// Partitions of k into at most n parts, each at most d, by enumeration.
BigInt partition_count(unsigned k, unsigned n, unsigned d);

}  // namespace regseq
