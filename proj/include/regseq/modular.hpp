#pragma once

#include <cstdint>
#include <vector>

namespace regseq {

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Distinct primes in [2^61, 2^62) drawn from a generator seeded with `seed`.
// The same seed always yields the same sequence.
std::vector<std::uint64_t> draw_primes(std::uint64_t seed, std::size_t count);

// Arithmetic modulo an odd prime p < 2^63 in Montgomery representation.
// Elements handed out by to_field()/mul() are Montgomery residues; from_field()
// converts back to the canonical residue.
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem to_field(std::uint64_t canonical) const { return mul(canonical % p_, r2_); }
  std::uint64_t from_field(Elem a) const { return reduce(a); }

  Elem add(Elem a, Elem b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return reduce(static_cast<unsigned __int128>(a) * b);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;

 private:
  Elem reduce(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * p_inv_neg_;
    const unsigned __int128 u = t + static_cast<unsigned __int128>(m) * p_;
    std::uint64_t r = static_cast<std::uint64_t>(u >> 64);
    return r >= p_ ? r - p_ : r;
  }

  std::uint64_t p_;
  std::uint64_t p_inv_neg_;  // -p^{-1} mod 2^64
  std::uint64_t r2_;         // 2^128 mod p
  Elem one_;
};

}  // namespace regseq
