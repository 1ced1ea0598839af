#include <sstream>
#include <stdexcept>

#include "regseq/poly.hpp"

namespace regseq {

UniPoly::UniPoly(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(std::size_t degree, const BigRat& c) {
  std::vector<BigRat> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::one_minus_power(std::size_t k) {
  if (k == 0) return UniPoly();
  std::vector<BigRat> v(k + 1);
  v[0] = 1;
  v[k] = -1;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigRat& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool UniPoly::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRat& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<BigRat> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(r));
}

BigRat UniPoly::evaluate(const BigRat& x) const {
  BigRat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt den(1);
  for (const auto& c : coeffs_) den = lcm(den, c.denominator());
  BigInt content(0);
  for (const auto& c : coeffs_) content = gcd(content, (c * BigRat(den)).numerator());
  BigRat scale(den, content);
  if (leading().sign() < 0) scale = -scale;
  return *this * scale;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].to_string();
    if (i >= 1) os << " * " << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

UniDivision up_divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<BigRat> rem = f.coeffs();
  const std::size_t dg = *g.degree();
  if (rem.size() <= dg) return {UniPoly(), f};
  std::vector<BigRat> quo(rem.size() - dg);
  const BigRat lead_inv = g.leading().inverse();
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    const BigRat factor = rem[i] * lead_inv;
    quo[i - dg] = factor;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] -= factor * g.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::optional<UniPoly> up_divide_exact(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = up_divmod(f, g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly up_gcd(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  UniPoly a = f.primitive_part();
  UniPoly b = g.primitive_part();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (*a.degree() < *b.degree()) std::swap(a, b);
  // Primitive remainder sequence: each remainder is replaced by its primitive part.
  while (!b.is_zero()) {
    UniPoly r = up_divmod(a, b).remainder.primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly up_shift(const UniPoly& f, const BigRat& c) {
  const UniPoly x_plus_c({c, BigRat(1)});
  UniPoly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * x_plus_c + UniPoly::constant(*it);
  }
  return acc;
}

bool eisenstein_at(const UniPoly& f, long p) {
  if (!is_prime(p)) throw std::invalid_argument("Eisenstein test needs a prime");
  if (!f.has_integer_coeffs()) throw std::invalid_argument("Eisenstein test needs integer coefficients");
  if (f.is_zero() || *f.degree() < 1) throw std::invalid_argument("Eisenstein test needs degree >= 1");
  const auto& c = f.coeffs();
  const BigInt prime(p);
  auto divisible = [](const BigInt& v, const BigInt& d) { return mpz_divisible_p(v.raw().get_mpz_t(), d.raw().get_mpz_t()) != 0; };
  if (divisible(c.back().numerator(), prime)) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (!divisible(c[i].numerator(), prime)) return false;
  }
  return !divisible(c[0].numerator(), prime * prime);
}

UniPoly to_univariate(const MultiPoly& f) {
  if (f.arity() != 1) throw std::invalid_argument("to_univariate needs arity 1");
  std::vector<BigRat> c;
  for (const auto& [m, v] : f.terms()) {
    if (c.size() <= m[0]) c.resize(m[0] + 1);
    c[m[0]] = v;
  }
  return UniPoly(std::move(c));
}

}  // namespace regseq
