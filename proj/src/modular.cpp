#include "regseq/modular.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace regseq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are exact for all n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> draw_primes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 61, (1ULL << 62) - 1);
  std::vector<std::uint64_t> primes;
  while (primes.size() < count) {
    std::uint64_t candidate = dist(gen) | 1ULL;
    while (!is_prime_u64(candidate)) candidate += 2;
    if (candidate >= (1ULL << 62)) continue;
    if (std::find(primes.begin(), primes.end(), candidate) == primes.end()) {
      primes.push_back(candidate);
    }
  }
  return primes;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0 || p >= (1ULL << 63)) {
    throw std::invalid_argument("PrimeField needs an odd modulus below 2^63");
  }
  // Newton iteration for p^{-1} mod 2^64.
  std::uint64_t inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  p_inv_neg_ = ~inv + 1;
  const std::uint64_t r1 = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
  r2_ = mulmod(r1, r1, p);
  one_ = r1;
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem r = one_;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in prime field");
  return pow(a, p_ - 2);
}

}  // namespace regseq
