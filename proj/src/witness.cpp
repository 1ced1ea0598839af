#include "regseq/witness.hpp"

#include <sstream>
#include <stdexcept>

namespace regseq {

namespace {

// Representative of t modulo 1 in [0, 1).
BigRat fractional_part(const BigRat& t) {
  const mpz_class& num = t.raw().get_num();
  const mpz_class& den = t.raw().get_den();
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return BigRat(BigInt(r), BigInt(den));
}

}  // namespace

Witness::Witness(std::vector<Coord> turns) : turns_(std::move(turns)) {
  if (turns_.empty()) throw std::invalid_argument("witness needs at least one coordinate");
  bool nonzero = false;
  for (auto& t : turns_) {
    if (t) {
      *t = fractional_part(*t);
      nonzero = true;
    }
  }
  if (!nonzero) throw std::invalid_argument("witness must be a nonzero point");
}

int Witness::conductor() const {
  BigInt c(1);
  for (const auto& t : turns_) {
    if (t) c = lcm(c, t->denominator());
  }
  if (!c.fits_long() || c.to_long() > (1L << 20)) throw std::out_of_range("witness conductor too large");
  return static_cast<int>(c.to_long());
}

std::vector<CyclotomicElt> Witness::coordinates() const {
  const int c = conductor();
  std::vector<CyclotomicElt> out;
  out.reserve(turns_.size());
  for (const auto& t : turns_) {
    if (!t) {
      out.emplace_back(c);
    } else {
      const BigRat k = *t * BigRat(c);
      out.push_back(CyclotomicElt::root_of_unity(c, k.numerator().to_long()));
    }
  }
  return out;
}

Witness Witness::root_of(std::uint32_t d) const {
  if (d == 0) throw std::invalid_argument("root index must be positive");
  std::vector<Coord> turns = turns_;
  for (auto& t : turns) {
    if (t) *t = *t * BigRat(BigInt(1), BigInt(d));
  }
  return Witness(std::move(turns));
}

std::string Witness::to_string() const {
  const int c = conductor();
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < turns_.size(); ++i) {
    if (i) os << ", ";
    if (!turns_[i]) {
      os << 0;
      continue;
    }
    const long k = (*turns_[i] * BigRat(c)).numerator().to_long();
    if (k == 0) {
      os << 1;
    } else {
      os << 'z' << c << '^' << k;
    }
  }
  os << ')';
  return os.str();
}

bool witness_verify(const Witness& w, const GeneratorSet& a) {
  if (w.arity() != a.n()) {
    throw std::invalid_argument("witness has " + std::to_string(w.arity()) + " coordinates, expected " +
                                std::to_string(a.n()));
  }
  const auto point = w.coordinates();
  for (auto deg : a.degrees()) {
    if (!mp_eval(a.generator(deg), point).is_zero()) return false;
  }
  return true;
}

}  // namespace regseq
