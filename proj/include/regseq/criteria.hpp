#pragma once

#include <cstdint>

#include "regseq/degree_set.hpp"
#include "regseq/poly.hpp"

namespace regseq {

// f_b(x) = 1 + x^b + (-1)^b (x + 1)^b, i.e. p_b at (x, 1, -1 - x).
UniPoly f_b_polynomial(std::uint32_t b);

// For A = {1, a, b} with 1 < a < b and 6 | ab: p_A(3) is regular iff
// gcd(f_a, f_b) = 1. Throws when the preconditions fail.
bool gcd_criterion_triple(std::uint32_t a, std::uint32_t b);

// b = 3^u (3^v + 1); Eisenstein at 3 for f_b(x + 1).
bool eisenstein_family_check(unsigned u, unsigned v);

// A = {a, b, c}, gcd 1, 3 | abc: the generator whose degree is a multiple of 3
// evaluates to 3 at every permutation of (1, rho, rho^2), so those unimodular
// candidates are not common zeros.
bool verify_modulo1(const DegreeSet& a);

}  // namespace regseq
