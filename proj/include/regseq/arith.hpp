#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace regseq {

// Arbitrary-precision signed integer. Thin value wrapper over GMP.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
  BigInt(long v) : v_(v) {}                     // NOLINT(google-explicit-constructor)
  BigInt(long long v) : BigInt(static_cast<long>(v)) {}  // NOLINT
  BigInt(unsigned long v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  BigInt(unsigned v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT
  explicit BigInt(mpz_class v) : v_(std::move(v)) {}
  explicit BigInt(std::string_view decimal);

  const mpz_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  std::size_t bit_length() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }
  std::string to_string() const { return v_.get_str(); }

  // Residue in [0, m).
  std::uint64_t mod_u64(std::uint64_t m) const;

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(mpz_class(-a.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }
  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.v_; }

 private:
  mpz_class v_;
};

BigInt abs(const BigInt& v);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);
// Exact quotient; throws std::domain_error if b does not divide a.
BigInt divide_exact(const BigInt& a, const BigInt& b);

// Rational number, always in lowest terms with positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(int v) : v_(v) {}           // NOLINT(google-explicit-constructor)
  BigRat(long v) : v_(v) {}          // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den);
  explicit BigRat(mpq_class v);
  // Accepts "n" or "n/d".
  explicit BigRat(std::string_view text);

  const mpq_class& raw() const { return v_; }

  BigInt numerator() const { return BigInt(mpz_class(v_.get_num())); }
  BigInt denominator() const { return BigInt(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string to_string() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }
  BigRat inverse() const;

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) { return BigRat(mpq_class(-a.v_)); }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }
  friend std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.v_; }

 private:
  mpq_class v_;
};

BigRat pow(const BigRat& base, long exponent);

// p-adic valuation; +infinity represents the valuation of zero.
class PadicVal {
 public:
  static PadicVal infinity() { return PadicVal(); }
  static PadicVal finite(long v) { return PadicVal(v); }

  bool is_infinite() const { return !v_.has_value(); }
  long value() const;
  std::string to_string() const { return v_ ? std::to_string(*v_) : "inf"; }

  friend PadicVal operator+(const PadicVal& a, const PadicVal& b);
  friend bool operator==(const PadicVal&, const PadicVal&) = default;
  friend std::strong_ordering operator<=>(const PadicVal& a, const PadicVal& b);
  friend std::ostream& operator<<(std::ostream& os, const PadicVal& v) {
    return os << v.to_string();
  }

 private:
  PadicVal() = default;
  explicit PadicVal(long v) : v_(v) {}
  std::optional<long> v_;
};

// Trial division; adequate for the small primes valuations are taken at.
bool is_prime(long p);

PadicVal padic_valuation(const BigRat& x, long p);
PadicVal padic_valuation(const BigInt& x, long p);
long padic_valuation(std::uint64_t x, long p);  // x > 0

// Number of carries when adding m and n in base p.
long carries_base_p(const BigInt& m, const BigInt& n, long p);
long carries_base_p(std::uint64_t m, std::uint64_t n, long p);

// C(m, n); zero when n < 0 or n > m.
BigInt binomial(const BigInt& m, const BigInt& n);
BigInt binomial(long m, long n);

}  // namespace regseq
