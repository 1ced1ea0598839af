#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "regseq/poly.hpp"

namespace regseq {

enum class Family { Power, Complete };

std::string_view family_name(Family f);  // "power" / "complete"
// Accepts "p", "power", "h", "complete".
Family parse_family(std::string_view text);

// Generator degrees of one family in n variables: sorted, distinct, positive,
// any (nonzero) count.
class GeneratorSet {
 public:
  GeneratorSet(Family family, std::size_t n, std::vector<std::uint32_t> degrees);

  Family family() const { return family_; }
  std::size_t n() const { return n_; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  std::uint32_t max_degree() const { return degrees_.back(); }
  std::uint64_t degree_sum() const;

  // The generator of degree a in this family.
  MultiPoly generator(std::uint32_t a) const;

  // "p{1,6,8}" / "h{1,2}"
  std::string to_string() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
  friend auto operator<=>(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  Family family_;
  std::size_t n_;
  std::vector<std::uint32_t> degrees_;
};

// A query: exactly n generators in n variables.
class DegreeSet : public GeneratorSet {
 public:
  DegreeSet(Family family, std::size_t n, std::vector<std::uint32_t> degrees);
};

MultiPoly family_generator(Family family, std::uint32_t degree, std::size_t n);

// Sum of degrees - n + 1.
std::uint64_t critical_degree(const DegreeSet& a);

// d = gcd of the degrees and the set divided by d (power family only).
struct Normalized {
  std::uint32_t d;
  DegreeSet reduced;
};
Normalized normalize(const DegreeSet& a);

}  // namespace regseq
