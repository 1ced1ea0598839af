#pragma once

#include "regseq/degree_set.hpp"

namespace regseq {

// Three power sums with gcd 1: regular predicted iff 6 | abc.
bool n3_power_prediction(const DegreeSet& a);

// Four power sums with gcd 1.
struct N4Conditions {
  bool parity_counts = false;  // >= 2 even, some multiple of 3, some multiple of 4
  bool even_part = false;      // even degrees over their gcd include an even number
  bool no_125 = false;         // no {d, 2d, 5d} inside
  bool all() const { return parity_counts && even_part && no_125; }
};
N4Conditions n4_power_conditions(const DegreeSet& a);

// Three complete symmetric polynomials.
struct HConditions {
  bool product = false;     // 6 | abc
  bool gcd_shift = false;   // gcd(a+1, b+1, c+1) = 1
  bool congruence = false;  // every t > 2 has some d with d + 2 != 0, 1 (mod t)
  bool all() const { return product && gcd_shift && congruence; }
};
HConditions n3_complete_conditions(const DegreeSet& a);

}  // namespace regseq
