#include "regseq/degree_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "regseq/symfunc.hpp"

namespace regseq {

std::string_view family_name(Family f) { return f == Family::Power ? "power" : "complete"; }

Family parse_family(std::string_view text) {
  if (text == "p" || text == "power") return Family::Power;
  if (text == "h" || text == "complete") return Family::Complete;
  throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected p or h)");
}

GeneratorSet::GeneratorSet(Family family, std::size_t n, std::vector<std::uint32_t> degrees)
    : family_(family), n_(n), degrees_(std::move(degrees)) {
  if (n_ == 0) throw std::invalid_argument("need at least one variable");
  if (degrees_.empty()) throw std::invalid_argument("empty degree set");
  std::sort(degrees_.begin(), degrees_.end());
  if (degrees_.front() == 0) throw std::invalid_argument("degrees must be positive");
  if (std::adjacent_find(degrees_.begin(), degrees_.end()) != degrees_.end()) {
    throw std::invalid_argument("degrees must be distinct");
  }
}

std::uint64_t GeneratorSet::degree_sum() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), std::uint64_t{0});
}

MultiPoly GeneratorSet::generator(std::uint32_t a) const { return family_generator(family_, a, n_); }

std::string GeneratorSet::to_string() const {
  std::ostringstream os;
  os << (family_ == Family::Power ? 'p' : 'h') << '{';
  for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
  os << '}';
  return os.str();
}

DegreeSet::DegreeSet(Family family, std::size_t n, std::vector<std::uint32_t> degrees)
    : GeneratorSet(family, n, std::move(degrees)) {
  if (size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " degrees, got " + std::to_string(size()));
  }
}

MultiPoly family_generator(Family family, std::uint32_t degree, std::size_t n) {
  return family == Family::Power ? power_sum(degree, n) : complete(degree, n);
}

std::uint64_t critical_degree(const DegreeSet& a) { return a.degree_sum() - a.n() + 1; }

Normalized normalize(const DegreeSet& a) {
  if (a.family() != Family::Power) throw std::invalid_argument("normalization applies to power sums");
  std::uint32_t d = 0;
  for (auto v : a.degrees()) d = std::gcd(d, v);
  std::vector<std::uint32_t> reduced;
  for (auto v : a.degrees()) reduced.push_back(v / d);
  return {d, DegreeSet(a.family(), a.n(), std::move(reduced))};
}

}  // namespace regseq
