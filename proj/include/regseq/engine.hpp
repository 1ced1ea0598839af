#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regseq/degree_set.hpp"
#include "regseq/rank_test.hpp"
#include "regseq/witness.hpp"

namespace regseq {

enum class Status { Regular, NotRegular, ProbablyNotRegular };

enum class Method {
  Trivial,             // n = 1
  FactorialFilter,
  HilbertIntegrality,
  RootsOfUnity,
  EvenPart,
  Subset125,
  HCongruence,
  HGcd,
  ClosedForm,          // n = 2 classification
  GcdCriterion,        // {1, a, b} in three variables
  RankModular,
  RankExact,
};

std::string_view status_name(Status s);  // "regular", "not-regular", "probably-not-regular"
std::string_view method_name(Method m);  // "factorial-filter", "rank-modular", ...
Status parse_status(std::string_view text);
Method parse_method(std::string_view text);

struct Verdict {
  Status status = Status::NotRegular;
  Method method = Method::Trivial;
  std::optional<Witness> witness;  // for the original degrees, not the normalized ones
  std::string evidence;
  std::uint32_t normalized_by = 1;  // gcd divided out before deciding
  std::uint64_t critical_degree = 0;
  std::optional<std::uint64_t> rank;
  std::optional<std::uint64_t> expected_rank;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = kDefaultSeed;
  double elapsed_ms = 0;

  bool regular() const { return status == Status::Regular; }
};

struct EngineOptions {
  RankOptions rank;
  bool use_filters = true;
  bool use_closed_form = true;
  bool use_gcd_criterion = false;
};

// n = 2 classification: power sums are regular iff a/d or b/d is even,
// complete ones iff gcd(a + 1, b + 1) = 1. Carries a witness when not regular.
Verdict check_pair(const DegreeSet& a);

// Full pipeline: normalization (power sums), certified filters in cost order,
// the n = 2 closed form, then the rank test at the critical degree.
Verdict is_regular(const DegreeSet& a, const EngineOptions& opts = {});

}  // namespace regseq
