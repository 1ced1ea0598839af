#include "regseq/arith.hpp"

#include <stdexcept>

namespace regseq {

namespace {

void require_prime(long p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("valuation base must be prime, got " + std::to_string(p));
  }
}

}  // namespace

BigInt::BigInt(std::string_view decimal) {
  if (v_.set_str(std::string(decimal), 10) != 0) {
    throw std::invalid_argument("not an integer: " + std::string(decimal));
  }
}

long BigInt::to_long() const {
  if (!fits_long()) throw std::overflow_error("BigInt does not fit in long");
  return v_.get_si();
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v_.get_mpz_t(), m);
}

BigInt abs(const BigInt& v) { return BigInt(mpz_class(::abs(v.raw()))); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
  return BigInt(std::move(r));
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()) == 0) {
    throw std::domain_error("inexact integer division");
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

BigRat::BigRat(const BigInt& num, const BigInt& den) : v_(num.raw(), den.raw()) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

BigRat::BigRat(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("zero denominator");
  v_.canonicalize();
}

BigRat::BigRat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    v_ = mpq_class(BigInt(text).raw());
  } else {
    *this = BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  }
}

BigRat BigRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return BigRat(mpq_class(1 / v_));
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

BigRat pow(const BigRat& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  const auto e = static_cast<unsigned long>(exponent);
  return BigRat(pow(base.numerator(), e), pow(base.denominator(), e));
}

long PadicVal::value() const {
  if (!v_) throw std::logic_error("valuation is infinite");
  return *v_;
}

PadicVal operator+(const PadicVal& a, const PadicVal& b) {
  if (a.is_infinite() || b.is_infinite()) return PadicVal::infinity();
  return PadicVal(*a.v_ + *b.v_);
}

std::strong_ordering operator<=>(const PadicVal& a, const PadicVal& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.v_ <=> *b.v_;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PadicVal padic_valuation(const BigInt& x, long p) {
  require_prime(p);
  if (x.is_zero()) return PadicVal::infinity();
  mpz_class rest;
  const mpz_class base(p);
  const auto v = mpz_remove(rest.get_mpz_t(), x.raw().get_mpz_t(), base.get_mpz_t());
  return PadicVal::finite(static_cast<long>(v));
}

PadicVal padic_valuation(const BigRat& x, long p) {
  if (x.is_zero()) {
    require_prime(p);
    return PadicVal::infinity();
  }
  return PadicVal::finite(padic_valuation(x.numerator(), p).value() -
                          padic_valuation(x.denominator(), p).value());
}

long padic_valuation(std::uint64_t x, long p) {
  if (x == 0) throw std::invalid_argument("machine valuation of zero");
  const auto base = static_cast<std::uint64_t>(p);
  long v = 0;
  while (x % base == 0) {
    x /= base;
    ++v;
  }
  return v;
}

long carries_base_p(const BigInt& m, const BigInt& n, long p) {
  require_prime(p);
  if (m.sign() < 0 || n.sign() < 0) throw std::invalid_argument("carries of negative operand");
  if (m.fits_long() && n.fits_long()) {
    return carries_base_p(static_cast<std::uint64_t>(m.to_long()),
                          static_cast<std::uint64_t>(n.to_long()), p);
  }
  mpz_class a = m.raw(), b = n.raw();
  const auto base = static_cast<unsigned long>(p);
  long carries = 0;
  unsigned long carry = 0;
  while (a != 0 || b != 0) {
    const unsigned long da = mpz_fdiv_q_ui(a.get_mpz_t(), a.get_mpz_t(), base);
    const unsigned long db = mpz_fdiv_q_ui(b.get_mpz_t(), b.get_mpz_t(), base);
    carry = (da + db + carry >= base) ? 1 : 0;
    carries += static_cast<long>(carry);
  }
  return carries;
}

long carries_base_p(std::uint64_t m, std::uint64_t n, long p) {
  const auto base = static_cast<std::uint64_t>(p);
  long carries = 0;
  std::uint64_t carry = 0;
  while (m != 0 || n != 0) {
    carry = (m % base + n % base + carry >= base) ? 1 : 0;
    carries += static_cast<long>(carry);
    m /= base;
    n /= base;
  }
  return carries;
}

BigInt binomial(const BigInt& m, const BigInt& n) {
  if (m.sign() < 0) throw std::invalid_argument("binomial with negative top");
  if (n.sign() < 0 || n > m) return BigInt(0);
  if (!n.fits_long()) throw std::overflow_error("binomial lower argument too large");
  const BigInt k = std::min(n, m - n);
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), m.raw().get_mpz_t(), static_cast<unsigned long>(k.to_long()));
  return BigInt(std::move(r));
}

BigInt binomial(long m, long n) {
  if (m < 0) throw std::invalid_argument("binomial with negative top");
  if (n < 0 || n > m) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(std::min(n, m - n)));
  return BigInt(std::move(r));
}

}  // namespace regseq
