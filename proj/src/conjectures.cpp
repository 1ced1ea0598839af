#include "regseq/conjectures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace regseq {

namespace {

std::uint64_t product(const DegreeSet& a) {
  std::uint64_t p = 1;
  for (auto d : a.degrees()) p *= d;
  return p;
}

}  // namespace

bool n3_power_prediction(const DegreeSet& a) {
  if (a.family() != Family::Power || a.n() != 3) throw std::invalid_argument("n = 3 power-sum prediction");
  return product(a) % 6 == 0;
}

N4Conditions n4_power_conditions(const DegreeSet& a) {
  if (a.family() != Family::Power || a.n() != 4) throw std::invalid_argument("n = 4 power-sum conditions");
  const auto& d = a.degrees();
  auto count = [&](std::uint32_t m) { return std::count_if(d.begin(), d.end(), [m](auto x) { return x % m == 0; }); };
  N4Conditions c;
  c.parity_counts = count(2) >= 2 && count(3) >= 1 && count(4) >= 1;
  std::uint32_t g = 0;
  for (auto x : d) {
    if (x % 2 == 0) g = std::gcd(g, x);
  }
  c.even_part = g != 0 && std::any_of(d.begin(), d.end(), [g](auto x) { return x % 2 == 0 && (x / g) % 2 == 0; });
  c.no_125 = std::none_of(d.begin(), d.end(), [&](std::uint64_t x) {
    return std::binary_search(d.begin(), d.end(), 2 * x) && std::binary_search(d.begin(), d.end(), 5 * x);
  });
  return c;
}

HConditions n3_complete_conditions(const DegreeSet& a) {
  if (a.family() != Family::Complete || a.n() != 3) throw std::invalid_argument("n = 3 complete conditions");
  const auto& d = a.degrees();
  HConditions c;
  c.product = product(a) % 6 == 0;
  c.gcd_shift = std::gcd(std::gcd(d[0] + 1, d[1] + 1), d[2] + 1) == 1;
  c.congruence = true;
  for (std::uint32_t t = 3; t <= a.max_degree() + 2; ++t) {
    const bool all = std::all_of(d.begin(), d.end(), [t](auto x) { return (x + 2) % t <= 1; });
    if (all) {
      c.congruence = false;
      break;
    }
  }
  return c;
}

}  // namespace regseq
