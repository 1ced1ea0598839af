#include "regseq/criteria.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "regseq/symfunc.hpp"

namespace regseq {

UniPoly f_b_polynomial(std::uint32_t b) {
  std::vector<BigRat> c(b + 1);
  const BigRat sign(b % 2 == 0 ? 1 : -1);
  for (std::uint32_t i = 0; i <= b; ++i) c[i] = sign * BigRat(binomial(static_cast<long>(b), static_cast<long>(i)));
  c[0] += BigRat(1);
  c[b] += BigRat(1);
  return UniPoly(std::move(c));
}

bool gcd_criterion_triple(std::uint32_t a, std::uint32_t b) {
  if (!(1 < a && a < b)) throw std::invalid_argument("gcd criterion needs 1 < a < b");
  if ((static_cast<std::uint64_t>(a) * b) % 6 != 0) throw std::invalid_argument("gcd criterion needs 6 | ab");
  const UniPoly g = up_gcd(f_b_polynomial(a), f_b_polynomial(b));
  return g.degree() == 0U;
}

bool eisenstein_family_check(unsigned u, unsigned v) {
  if (u < 1) throw std::invalid_argument("Eisenstein family needs u >= 1");
  const BigInt b = pow(BigInt(3), u) * (pow(BigInt(3), v) + BigInt(1));
  if (!b.fits_long() || b.to_long() > 100000) throw std::out_of_range("Eisenstein family degree too large");
  const UniPoly shifted = up_shift(f_b_polynomial(static_cast<std::uint32_t>(b.to_long())), BigRat(1));
  return eisenstein_at(shifted, 3);
}

bool verify_modulo1(const DegreeSet& a) {
  if (a.family() != Family::Power || a.n() != 3) throw std::invalid_argument("verify_modulo1 needs three power sums");
  const auto& d = a.degrees();
  if (std::gcd(std::gcd(d[0], d[1]), d[2]) != 1) throw std::invalid_argument("verify_modulo1 needs gcd 1");
  auto multiple = std::find_if(d.begin(), d.end(), [](std::uint32_t x) { return x % 3 == 0; });
  if (multiple == d.end()) throw std::invalid_argument("verify_modulo1 needs a degree divisible by 3");
  const MultiPoly g = power_sum(*multiple, 3);
  std::array<long, 3> exps = {0, 1, 2};
  do {
    const std::vector<CyclotomicElt> point = {CyclotomicElt::root_of_unity(3, exps[0]),
                                              CyclotomicElt::root_of_unity(3, exps[1]),
                                              CyclotomicElt::root_of_unity(3, exps[2])};
    if (mp_eval(g, point) != CyclotomicElt(3, BigRat(3))) return false;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return true;
}

}  // namespace regseq
