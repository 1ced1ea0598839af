#include <map>
#include <mutex>
#include <stdexcept>

#include "regseq/poly.hpp"

namespace regseq {

const UniPoly& cyclotomic_polynomial(int c) {
  if (c < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mu;
  static std::map<int, UniPoly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(c); it != cache.end()) return it->second;
  // x^c - 1 divided by Phi_d for every proper divisor d. Built bottom-up so
  // the recursion never re-enters the lock.
  for (int d = 1; d <= c; ++d) {
    if (c % d != 0 || cache.count(d) != 0) continue;
    UniPoly phi = UniPoly::monomial(static_cast<std::size_t>(d)) - UniPoly::constant(BigRat(1));
    for (int e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      auto q = up_divide_exact(phi, cache.at(e));
      if (!q) throw std::logic_error("cyclotomic division not exact");
      phi = std::move(*q);
    }
    cache.emplace(d, std::move(phi));
  }
  return cache.at(c);
}

CyclotomicElt::CyclotomicElt(int conductor, const BigRat& value)
    : CyclotomicElt(conductor, UniPoly::constant(value)) {}

CyclotomicElt::CyclotomicElt(int conductor, UniPoly residue) : conductor_(conductor) {
  const UniPoly& phi = cyclotomic_polynomial(conductor);
  residue_ = residue.degree().value_or(0) >= *phi.degree() ? up_divmod(residue, phi).remainder
                                                          : std::move(residue);
}

CyclotomicElt CyclotomicElt::root_of_unity(int conductor, long k) {
  if (conductor < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  long e = k % conductor;
  if (e < 0) e += conductor;
  return CyclotomicElt(conductor, UniPoly::monomial(static_cast<std::size_t>(e)));
}

std::optional<BigRat> CyclotomicElt::as_rational() const {
  if (residue_.degree().value_or(0) > 0) return std::nullopt;
  return residue_.coeff(0);
}

void CyclotomicElt::check_conductor(const CyclotomicElt& o) const {
  if (o.conductor_ != conductor_) {
    throw std::invalid_argument("cyclotomic conductor mismatch: " + std::to_string(conductor_) + " vs " +
                                std::to_string(o.conductor_));
  }
}

CyclotomicElt& CyclotomicElt::operator+=(const CyclotomicElt& o) {
  check_conductor(o);
  residue_ += o.residue_;
  return *this;
}

CyclotomicElt& CyclotomicElt::operator-=(const CyclotomicElt& o) {
  check_conductor(o);
  residue_ -= o.residue_;
  return *this;
}

CyclotomicElt& CyclotomicElt::operator*=(const CyclotomicElt& o) {
  check_conductor(o);
  *this = CyclotomicElt(conductor_, residue_ * o.residue_);
  return *this;
}

CyclotomicElt operator-(const CyclotomicElt& a) {
  return CyclotomicElt(a.conductor_, a.residue_ * BigRat(-1));
}

CyclotomicElt CyclotomicElt::pow(unsigned long exponent) const {
  CyclotomicElt result(conductor_, BigRat(1));
  CyclotomicElt base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string CyclotomicElt::to_string() const {
  return residue_.to_string("z" + std::to_string(conductor_));
}

CyclotomicElt mp_eval(const MultiPoly& f, std::span<const CyclotomicElt> point) {
  if (point.size() != f.arity()) throw std::invalid_argument("evaluation point has wrong length");
  const int c = point.empty() ? 1 : point.front().conductor();
  for (const auto& z : point) {
    if (z.conductor() != c) throw std::invalid_argument("evaluation point mixes conductors");
  }
  std::vector<std::vector<CyclotomicElt>> powers(point.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const CyclotomicElt& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(c, BigRat(1));
    while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
    return cache[e];
  };
  CyclotomicElt acc(c);
  for (const auto& [m, coeff] : f.terms()) {
    CyclotomicElt term(c, coeff);
    for (std::size_t i = 0; i < point.size() && !term.is_zero(); ++i) {
      if (m[i] != 0) term *= power(i, m[i]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace regseq
