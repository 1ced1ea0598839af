#include "regseq/filters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "regseq/rank_test.hpp"
#include "regseq/symfunc.hpp"

namespace regseq {

namespace {

FilterResult fail(std::string evidence) {
  FilterResult r;
  r.passed = false;
  r.evidence = std::move(evidence);
  return r;
}

void require_power(const DegreeSet& a, const char* what) {
  if (a.family() != Family::Power) throw std::invalid_argument(std::string(what) + " applies to power sums");
}

void require_complete(const DegreeSet& a, const char* what) {
  if (a.family() != Family::Complete) {
    throw std::invalid_argument(std::string(what) + " applies to complete symmetric polynomials");
  }
}

bool contains(const std::vector<std::uint32_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

FilterResult factorial_filter(const DegreeSet& a) {
  BigInt product(1);
  for (auto d : a.degrees()) product *= BigInt(static_cast<unsigned long>(d));
  BigInt fact(1);
  for (std::size_t i = 2; i <= a.n(); ++i) fact *= BigInt(static_cast<unsigned long>(i));
  mpz_class r;
  mpz_mod(r.get_mpz_t(), product.raw().get_mpz_t(), fact.raw().get_mpz_t());
  if (r == 0) return {};
  return fail(a.n() == 1 ? "" : std::to_string(a.n()) + "! = " + fact.to_string() +
                                    " does not divide the degree product " + product.to_string());
}

FilterResult hilbert_integrality_filter(const DegreeSet& a) {
  UniPoly num = UniPoly::constant(BigRat(1));
  UniPoly den = UniPoly::constant(BigRat(1));
  for (std::size_t i = 0; i < a.n(); ++i) {
    num = num * UniPoly::one_minus_power(a.degrees()[i]);
    den = den * UniPoly::one_minus_power(i + 1);
  }
  auto q = up_divide_exact(num, den);
  if (!q) return fail("prod (1 - q^a) / prod (1 - q^i) is not a polynomial");
  FilterResult r;
  r.quotient = std::move(*q);
  return r;
}

std::optional<Witness> power_sum_zero(const std::vector<std::uint32_t>& degrees, std::size_t q) {
  if (q == 0) return std::nullopt;
  std::vector<Witness::Coord> point(q, Witness::zero());
  if (degrees.empty()) {
    point[0] = Witness::root(0, 1);
    return Witness(std::move(point));
  }
  if (q >= 2) {
    // (1, zeta_{2d}) kills p_b whenever b/d is odd, d = gcd.
    std::uint32_t d = 0;
    for (auto b : degrees) d = std::gcd(d, b);
    if (std::all_of(degrees.begin(), degrees.end(), [d](std::uint32_t b) { return (b / d) % 2 == 1; })) {
      point[0] = Witness::root(0, 1);
      point[1] = Witness::root(1, 2L * d);
      return Witness(std::move(point));
    }
  }
  // Blocks y_i (1, u, ..., u^{c-1}) kill every p_b with c not dividing b;
  // the remaining degrees must vanish at y.
  for (std::size_t c = 2; c <= q; ++c) {
    std::vector<std::uint32_t> multiples;
    for (auto b : degrees) {
      if (b % c == 0) multiples.push_back(b);
    }
    auto inner = power_sum_zero(multiples, q / c);
    if (!inner) continue;
    for (std::size_t i = 0; i < inner->arity(); ++i) {
      const auto& y = inner->turns()[i];
      for (std::size_t j = 0; j < c; ++j) {
        if (y) point[i * c + j] = *y + BigRat(BigInt(static_cast<unsigned long>(j)), BigInt(static_cast<unsigned long>(c)));
      }
    }
    return Witness(std::move(point));
  }
  return std::nullopt;
}

FilterResult roots_of_unity_filter(const DegreeSet& a) {
  require_power(a, "roots-of-unity filter");
  const std::size_t n = a.n();
  for (std::size_t c = 2; c <= n; ++c) {
    std::vector<std::uint32_t> multiples;
    for (auto d : a.degrees()) {
      if (d % c == 0) multiples.push_back(d);
    }
    const std::size_t q = n / c;
    if (multiples.size() >= q) continue;
    std::ostringstream os;
    os << "beta_" << c << " = " << multiples.size() << " < floor(" << n << "/" << c << ") = " << q;
    FilterResult r = fail(os.str());
    r.modulus = static_cast<std::uint32_t>(c);
    if (auto y = power_sum_zero(multiples, q)) {
      std::vector<Witness::Coord> point(n, Witness::zero());
      for (std::size_t i = 0; i < q; ++i) {
        const auto& yi = y->turns()[i];
        for (std::size_t j = 0; j < c; ++j) {
          if (yi) point[i * c + j] = *yi + BigRat(BigInt(static_cast<unsigned long>(j)), BigInt(static_cast<unsigned long>(c)));
        }
      }
      r.witness = Witness(std::move(point));
    }
    return r;
  }
  return {};
}

FilterResult even_part_filter(const DegreeSet& a) {
  require_power(a, "even-part filter");
  if (a.n() != 4) throw std::invalid_argument("even-part filter is stated for n = 4");
  std::vector<std::uint32_t> even;
  for (auto d : a.degrees()) {
    if (d % 2 == 0) even.push_back(d);
  }
  if (even.empty()) {
    FilterResult r = fail("no even degrees");
    r.witness = Witness({Witness::root(0, 1), Witness::root(1, 2), Witness::zero(), Witness::zero()});
    return r;
  }
  std::uint32_t d = 0;
  for (auto e : even) d = std::gcd(d, e);
  if (std::any_of(even.begin(), even.end(), [d](std::uint32_t e) { return (e / d) % 2 == 0; })) return {};
  FilterResult r = fail("even degrees divided by their gcd " + std::to_string(d) + " are all odd");
  r.modulus = d;
  // (x, -x, y, -y) with x = 1, y^d = -1.
  r.witness = Witness({Witness::root(0, 1), Witness::root(1, 2), Witness::root(1, 2L * d),
                       BigRat(BigInt(1), BigInt(2L * d)) + BigRat(BigInt(1), BigInt(2))});
  return r;
}

FilterResult subset_125_filter(const DegreeSet& a) {
  require_power(a, "{d,2d,5d} filter");
  if (a.n() != 4) throw std::invalid_argument("{d,2d,5d} filter is stated for n = 4");
  for (auto d : a.degrees()) {
    if (!contains(a.degrees(), 2ULL * d) || !contains(a.degrees(), 5ULL * d)) continue;
    // p_5 in (p_1, p_2) in four variables; substituting x_i -> x_i^d scales it.
    static const bool base_identity =
        ideal_membership(power_sum(5, 4), GeneratorSet(Family::Power, 4, {1, 2}));
    if (!base_identity) throw std::logic_error("p_5 is not in (p_1, p_2) in four variables");
    FilterResult r = fail("p_" + std::to_string(5 * d) + " lies in (p_" + std::to_string(d) + ", p_" +
                          std::to_string(2 * d) + "): membership of p_5 in (p_1, p_2) checked by rank, scaled by x -> x^" +
                          std::to_string(d));
    r.modulus = d;
    return r;
  }
  return {};
}

FilterResult h_congruence_filter(const DegreeSet& a) {
  require_complete(a, "h-congruence filter");
  if (a.n() < 3) return {};
  // For t > max + 2 every a + 2 is a residue >= 3, so the search is finite.
  for (std::uint32_t t = 3; t <= a.max_degree() + 2; ++t) {
    const bool all = std::all_of(a.degrees().begin(), a.degrees().end(), [t](std::uint32_t d) {
      const auto r = (d + 2) % t;
      return r == 0 || r == 1;
    });
    if (!all) continue;
    FilterResult r = fail("a + 2 = 0 or 1 (mod " + std::to_string(t) + ") for every degree");
    r.modulus = t;
    std::vector<Witness::Coord> point(a.n(), Witness::zero());
    for (std::size_t i = 0; i < 3; ++i) point[i] = Witness::root(static_cast<long>(i), t);
    r.witness = Witness(std::move(point));
    return r;
  }
  return {};
}

FilterResult h_gcd_filter(const DegreeSet& a) {
  require_complete(a, "h-gcd filter");
  if (a.n() < 2) return {};
  std::uint32_t t = 0;
  for (auto d : a.degrees()) t = std::gcd(t, d + 1);
  if (t == 1) return {};
  FilterResult r = fail("gcd of a + 1 is " + std::to_string(t));
  r.modulus = t;
  // (x, 1, 0, ...) with x^t = 1, x != 1: h_a(x, 1) = (x^{a+1} - 1) / (x - 1).
  std::vector<Witness::Coord> point(a.n(), Witness::zero());
  point[0] = Witness::root(1, t);
  point[1] = Witness::root(0, 1);
  r.witness = Witness(std::move(point));
  return r;
}

}  // namespace regseq
