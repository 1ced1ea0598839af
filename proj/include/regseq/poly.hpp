#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regseq/arith.hpp"

namespace regseq {

// Exponent vector of a monomial. Ordered graded-lexicographically.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);
  static Monomial one(std::size_t arity) { return Monomial(std::vector<std::uint32_t>(arity, 0)); }
  static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lex: total degree first, then lexicographic on exponents.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

// All monomials of the given total degree in `arity` variables, ascending grlex.
std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree);

class CyclotomicElt;

// Sparse multivariate polynomial over Q. No stored zero coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, BigRat>;

  explicit MultiPoly(std::size_t arity = 0) : arity_(arity) {}
  static MultiPoly constant(std::size_t arity, const BigRat& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly term(const Monomial& m, const BigRat& c);

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Maximal total degree; nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const;
  bool is_homogeneous() const;
  BigRat coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const BigRat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const BigRat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigRat& c) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a) { return a * BigRat(-1); }
  MultiPoly mul_monomial(const Monomial& m) const;
  MultiPoly pow(unsigned exponent) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  // Drop every term that involves variable `index` (i.e. set it to zero).
  MultiPoly set_zero(std::size_t index) const;

  // "c * x1^e1*x2^e2 + ..." in descending grlex order; "0" for zero.
  std::string to_string(const std::string& var = "x") const;

 private:
  void check_arity(const MultiPoly& o) const;

  std::size_t arity_;
  Terms terms_;
};

// Replace variable i of f by values[i]; all values share one arity.
MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> values);

// Dense univariate polynomial over Q, coefficients low to high.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRat> coeffs);
  static UniPoly constant(const BigRat& c) { return UniPoly({c}); }
  static UniPoly monomial(std::size_t degree, const BigRat& c = BigRat(1));
  // 1 - q^k
  static UniPoly one_minus_power(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree; nullopt is the zero polynomial's sentinel.
  std::optional<std::size_t> degree() const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  BigRat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }
  const BigRat& leading() const;
  bool has_integer_coeffs() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const BigRat& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigRat& c) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  BigRat evaluate(const BigRat& x) const;
  UniPoly monic() const;
  // Content-free integer multiple with positive leading coefficient.
  UniPoly primitive_part() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRat> coeffs_;
};

struct UniDivision {
  UniPoly quotient;
  UniPoly remainder;
};
UniDivision up_divmod(const UniPoly& f, const UniPoly& g);
// q with f = q*g, or nullopt when the remainder is nonzero.
std::optional<UniPoly> up_divide_exact(const UniPoly& f, const UniPoly& g);
// Monic gcd over Q; throws when both inputs are zero.
UniPoly up_gcd(const UniPoly& f, const UniPoly& g);
// f(x + c)
UniPoly up_shift(const UniPoly& f, const BigRat& c);
// Eisenstein's criterion at p for an integer polynomial of degree >= 1.
bool eisenstein_at(const UniPoly& f, long p);
// Arity-1 MultiPoly to UniPoly.
UniPoly to_univariate(const MultiPoly& f);

// Element of Q(zeta_c), stored as a residue polynomial modulo Phi_c.
class CyclotomicElt {
 public:
  CyclotomicElt() : CyclotomicElt(1) {}
  explicit CyclotomicElt(int conductor, const BigRat& value = BigRat(0));
  // zeta_c^k for the fixed primitive root zeta_c = exp(2 pi i / c).
  static CyclotomicElt root_of_unity(int conductor, long k = 1);

  int conductor() const { return conductor_; }
  const UniPoly& residue() const { return residue_; }
  bool is_zero() const { return residue_.is_zero(); }
  std::optional<BigRat> as_rational() const;

  CyclotomicElt& operator+=(const CyclotomicElt& o);
  CyclotomicElt& operator-=(const CyclotomicElt& o);
  CyclotomicElt& operator*=(const CyclotomicElt& o);
  friend CyclotomicElt operator+(CyclotomicElt a, const CyclotomicElt& b) { return a += b; }
  friend CyclotomicElt operator-(CyclotomicElt a, const CyclotomicElt& b) { return a -= b; }
  friend CyclotomicElt operator*(CyclotomicElt a, const CyclotomicElt& b) { return a *= b; }
  friend CyclotomicElt operator-(const CyclotomicElt& a);
  friend bool operator==(const CyclotomicElt&, const CyclotomicElt&) = default;
  CyclotomicElt pow(unsigned long exponent) const;

  std::string to_string() const;

 private:
  CyclotomicElt(int conductor, UniPoly residue);
  void check_conductor(const CyclotomicElt& o) const;

  int conductor_;
  UniPoly residue_;
};

// The c-th cyclotomic polynomial, from x^c - 1 = prod_{d|c} Phi_d. Cached.
const UniPoly& cyclotomic_polynomial(int c);

// Exact value of f at a point of Q(zeta_c)^n; all coordinates share a conductor.
CyclotomicElt mp_eval(const MultiPoly& f, std::span<const CyclotomicElt> point);

}  // namespace regseq
