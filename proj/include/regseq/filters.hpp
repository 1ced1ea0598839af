#pragma once

#include <optional>
#include <string>

#include "regseq/degree_set.hpp"
#include "regseq/witness.hpp"

namespace regseq {

// Outcome of a necessary condition. A failed filter certifies that the
// sequence is not regular; passing is inconclusive.
struct FilterResult {
  bool passed = true;
  std::string evidence;               // human-readable reason for a failure
  std::optional<std::uint32_t> modulus;  // offending c or t, where meaningful
  std::optional<Witness> witness;     // common zero, where the filter builds one
  std::optional<UniPoly> quotient;    // Hilbert-integrality quotient on success
};

// n! must divide the product of the degrees.
FilterResult factorial_filter(const DegreeSet& a);
// prod (1 - q^{a_i}) / (1 - q^i) must be a polynomial.
FilterResult hilbert_integrality_filter(const DegreeSet& a);
// Power sums: beta_c = #{a : c | a} must be at least floor(n/c) for 2 <= c <= n.
FilterResult roots_of_unity_filter(const DegreeSet& a);
// Power sums, n = 4: the even degrees divided by their gcd must contain an even number.
FilterResult even_part_filter(const DegreeSet& a);
// Power sums, n = 4: no {d, 2d, 5d} inside A.
FilterResult subset_125_filter(const DegreeSet& a);
// Complete family: no t > 2 with a + 2 = 0 or 1 (mod t) for every a.
FilterResult h_congruence_filter(const DegreeSet& a);
// Complete family: gcd of all a + 1 must be 1.
FilterResult h_gcd_filter(const DegreeSet& a);

// Nonzero common zero of p_b(q), b in `degrees`, built from zeros and roots
// of unity; nullopt when the block construction does not reach one.
std::optional<Witness> power_sum_zero(const std::vector<std::uint32_t>& degrees, std::size_t q);

}  // namespace regseq
