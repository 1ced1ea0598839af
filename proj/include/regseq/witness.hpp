#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regseq/degree_set.hpp"
#include "regseq/poly.hpp"

namespace regseq {

// A nonzero point whose coordinates are 0 or roots of unity exp(2 pi i t).
// Each root is stored by its turn t in [0, 1); nullopt is the coordinate 0.
class Witness {
 public:
  using Coord = std::optional<BigRat>;

  // Throws std::invalid_argument for an empty or all-zero point.
  explicit Witness(std::vector<Coord> turns);

  static Coord zero() { return std::nullopt; }
  static Coord root(long k, long order) { return BigRat(BigInt(k), BigInt(order)); }

  std::size_t arity() const { return turns_.size(); }
  const std::vector<Coord>& turns() const { return turns_; }
  // lcm of the orders of the roots that occur.
  int conductor() const;
  std::vector<CyclotomicElt> coordinates() const;

  // A point whose coordinatewise d-th power is this one.
  Witness root_of(std::uint32_t d) const;

  // "(1, z6^1, 0)" style, with z<c> the chosen primitive root.
  std::string to_string() const;

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<Coord> turns_;
};

// Every generator evaluates to exactly zero at w. Throws on arity mismatch.
bool witness_verify(const Witness& w, const GeneratorSet& a);

}  // namespace regseq
