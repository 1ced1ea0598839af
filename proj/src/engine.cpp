#include "regseq/engine.hpp"

#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "regseq/criteria.hpp"
#include "regseq/filters.hpp"

namespace regseq {

namespace {

constexpr std::array<std::pair<Status, std::string_view>, 3> kStatusNames = {{
    {Status::Regular, "regular"},
    {Status::NotRegular, "not-regular"},
    {Status::ProbablyNotRegular, "probably-not-regular"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 12> kMethodNames = {{
    {Method::Trivial, "trivial"},
    {Method::FactorialFilter, "factorial-filter"},
    {Method::HilbertIntegrality, "hilbert-integrality"},
    {Method::RootsOfUnity, "roots-of-unity"},
    {Method::EvenPart, "even-part"},
    {Method::Subset125, "subset-125"},
    {Method::HCongruence, "h-congruence"},
    {Method::HGcd, "h-gcd"},
    {Method::ClosedForm, "closed-form"},
    {Method::GcdCriterion, "gcd-criterion"},
    {Method::RankModular, "rank-modular"},
    {Method::RankExact, "rank-exact"},
}};

Verdict from_filter(Method method, const FilterResult& f, std::uint32_t d) {
  Verdict v;
  v.status = Status::NotRegular;
  v.method = method;
  v.evidence = f.evidence;
  if (f.witness) v.witness = d == 1 ? *f.witness : f.witness->root_of(d);
  if (d != 1) v.evidence += " (after dividing the degrees by " + std::to_string(d) + ")";
  return v;
}

void apply_rank(Verdict& v, const RankReport& r) {
  v.rank = r.rank;
  v.expected_rank = r.expected_rank;
  v.primes = r.primes;
  switch (r.outcome) {
    case RankOutcome::Full:
      v.status = Status::Regular;
      v.method = r.exact ? Method::RankExact : Method::RankModular;
      break;
    case RankOutcome::Deficient:
      v.status = Status::NotRegular;
      v.method = Method::RankExact;
      break;
    case RankOutcome::ProbablyDeficient:
      v.status = Status::ProbablyNotRegular;
      v.method = Method::RankModular;
      break;
  }
  v.evidence = std::string(r.route == Route::Invariant ? "invariant" : "monomial") + " route, rank " +
               std::to_string(r.rank) + " of " + std::to_string(r.expected_rank) + " at degree " +
               std::to_string(r.critical_degree);
}

std::optional<Verdict> run_power_filters(const DegreeSet& b, std::uint32_t d) {
  if (auto f = factorial_filter(b); !f.passed) return from_filter(Method::FactorialFilter, f, d);
  if (auto f = hilbert_integrality_filter(b); !f.passed) return from_filter(Method::HilbertIntegrality, f, d);
  if (auto f = roots_of_unity_filter(b); !f.passed) return from_filter(Method::RootsOfUnity, f, d);
  if (b.n() == 4) {
    if (auto f = even_part_filter(b); !f.passed) return from_filter(Method::EvenPart, f, d);
    if (auto f = subset_125_filter(b); !f.passed) return from_filter(Method::Subset125, f, d);
  }
  return std::nullopt;
}

std::optional<Verdict> run_complete_filters(const DegreeSet& a) {
  if (auto f = factorial_filter(a); !f.passed) return from_filter(Method::FactorialFilter, f, 1);
  if (auto f = h_gcd_filter(a); !f.passed) return from_filter(Method::HGcd, f, 1);
  if (auto f = h_congruence_filter(a); !f.passed) return from_filter(Method::HCongruence, f, 1);
  if (auto f = hilbert_integrality_filter(a); !f.passed) return from_filter(Method::HilbertIntegrality, f, 1);
  return std::nullopt;
}

// {1, a, b} with 6 | ab after normalization.
std::optional<std::pair<std::uint32_t, std::uint32_t>> gcd_criterion_shape(const DegreeSet& b) {
  if (b.n() != 3 || b.degrees()[0] != 1) return std::nullopt;
  const std::uint64_t x = b.degrees()[1];
  const std::uint64_t y = b.degrees()[2];
  if ((x * y) % 6 != 0) return std::nullopt;
  return std::pair{b.degrees()[1], b.degrees()[2]};
}

Verdict decide(const DegreeSet& a, const EngineOptions& opts) {
  if (a.n() == 1) {
    Verdict v;
    v.status = Status::Regular;
    v.method = Method::Trivial;
    v.evidence = "a single power of one variable";
    return v;
  }
  if (a.family() == Family::Power) {
    const auto [d, b] = normalize(a);
    if (opts.use_filters) {
      if (auto v = run_power_filters(b, d)) {
        v->normalized_by = d;
        return *v;
      }
    }
    if (opts.use_closed_form && a.n() == 2) return check_pair(a);
    if (opts.use_gcd_criterion) {
      if (auto shape = gcd_criterion_shape(b)) {
        Verdict v;
        const bool coprime = gcd_criterion_triple(shape->first, shape->second);
        v.status = coprime ? Status::Regular : Status::NotRegular;
        v.method = Method::GcdCriterion;
        v.evidence = std::string("gcd(f_") + std::to_string(shape->first) + ", f_" +
                     std::to_string(shape->second) + (coprime ? ") = 1" : ") != 1");
        v.normalized_by = d;
        return v;
      }
    }
    Verdict v;
    apply_rank(v, rank_test(b, opts.rank));
    if (d != 1) v.evidence += " for the degrees divided by " + std::to_string(d);
    v.normalized_by = d;
    return v;
  }
  if (opts.use_filters) {
    if (auto v = run_complete_filters(a)) return *v;
  }
  if (opts.use_closed_form && a.n() == 2) return check_pair(a);
  Verdict v;
  apply_rank(v, rank_test(a, opts.rank));
  return v;
}

}  // namespace

std::string_view status_name(Status s) {
  for (const auto& [k, name] : kStatusNames) {
    if (k == s) return name;
  }
  throw std::logic_error("unknown status");
}

std::string_view method_name(Method m) {
  for (const auto& [k, name] : kMethodNames) {
    if (k == m) return name;
  }
  throw std::logic_error("unknown method");
}

Status parse_status(std::string_view text) {
  for (const auto& [k, name] : kStatusNames) {
    if (name == text) return k;
  }
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  for (const auto& [k, name] : kMethodNames) {
    if (name == text) return k;
  }
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

Verdict check_pair(const DegreeSet& a) {
  if (a.n() != 2) throw std::invalid_argument("check_pair needs n = 2");
  const std::uint32_t x = a.degrees()[0];
  const std::uint32_t y = a.degrees()[1];
  Verdict v;
  v.method = Method::ClosedForm;
  v.critical_degree = critical_degree(a);
  if (a.family() == Family::Power) {
    const std::uint32_t d = std::gcd(x, y);
    v.normalized_by = d;
    if ((x / d) % 2 == 0 || (y / d) % 2 == 0) {
      v.status = Status::Regular;
      v.evidence = "a/d or b/d is even (d = " + std::to_string(d) + ")";
    } else {
      v.status = Status::NotRegular;
      v.evidence = "a/d and b/d are both odd (d = " + std::to_string(d) + ")";
      // (1, -1) for the reduced pair; its d-th root (1, zeta_{2d}) for the original.
      v.witness = Witness({Witness::root(0, 1), Witness::root(1, 2L * d)});
    }
    return v;
  }
  const std::uint32_t t = std::gcd(x + 1, y + 1);
  if (t == 1) {
    v.status = Status::Regular;
    v.evidence = "gcd(a+1, b+1) = 1";
  } else {
    v.status = Status::NotRegular;
    v.evidence = "gcd(a+1, b+1) = " + std::to_string(t);
    v.witness = Witness({Witness::root(1, t), Witness::root(0, 1)});
  }
  return v;
}

Verdict is_regular(const DegreeSet& a, const EngineOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = decide(a, opts);
  v.seed = opts.rank.seed;
  v.critical_degree = critical_degree(a);
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

}  // namespace regseq
