#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "regseq/appendix.hpp"
#include "regseq/degree_set.hpp"
#include "regseq/engine.hpp"
#include "regseq/record.hpp"
#include "regseq/symfunc.hpp"

namespace regseq {

enum class OutputFormat { Jsonl, Csv, Table };
OutputFormat parse_format(std::string_view text);

struct RunConfig {
  Strategy strategy = Strategy::Fast;
  std::size_t primes = 3;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::filesystem::path> cache;
  OutputFormat format = OutputFormat::Jsonl;
  unsigned jobs = 1;
};

// Defaults overridden by REGSEQ_CACHE, REGSEQ_SEED and REGSEQ_PRIMES; command-line
// flags are applied on top by the caller. Malformed values throw std::invalid_argument.
using EnvLookup = std::function<const char*(const char*)>;
RunConfig config_from_env(const EnvLookup& lookup);

EngineOptions engine_options(const RunConfig& cfg);

// The open conjectures' iff predictions where one applies: three power sums
// (6 | abc after dividing out the gcd), four power sums (all three conditions),
// three complete sums (all three conditions). nullopt otherwise.
std::optional<bool> conjecture_prediction(const DegreeSet& a);

// Prints one record (with a header for csv/table output).
ResultRecord cmd_check(const DegreeSet& a, const RunConfig& cfg, std::ostream& out);

enum class ScanTarget { N3Power, N4Power, N3Complete };
std::string_view scan_target_name(ScanTarget t);  // "n3-power", "n4-power", "n3-complete"
ScanTarget parse_scan_target(std::string_view text);

struct ScanJob {
  ScanTarget target = ScanTarget::N3Power;
  std::uint32_t bound = 0;  // maximum degree, at least n
  RunConfig config;
};

// Every qualifying set in lexicographic order: gcd-1 sets for power sums, all sets for complete ones.
std::vector<DegreeSet> scan_sets(ScanTarget target, std::uint32_t bound);

struct ScanSummary {
  std::size_t total = 0;
  std::size_t regular = 0;
  std::size_t not_regular = 0;
  std::size_t probably_not_regular = 0;
  std::size_t from_cache = 0;
  std::vector<std::string> disagreements;  // to_string() of each disagreeing set

  bool ok() const { return disagreements.empty(); }
};

// Records go to `out` in scan order; progress and the summary go to `log`.
ScanSummary cmd_scan(const ScanJob& job, std::ostream& out, std::ostream& log);

// Exact identities must hold and no sum may vanish for h != 3; dominance and
// carry-bound anomalies are reported as warnings. Returns the full report.
NonvanishingReport cmd_appendix(long h_max, OutputFormat format, std::ostream& out);
bool appendix_ok(const NonvanishingReport& r);

// a_m and f_m are tabulated from m = 2 (a_1 is trivially zero).
struct CoeffsSummary {
  unsigned m_max = 0;
  std::vector<unsigned> zero_a;           // m with a_m = 0
  std::vector<unsigned> nonintegral_f;    // m with f_m not in Z[x]
  std::vector<unsigned> nonpositive_c;    // 3 < d with c_d <= 0
  GrowthReport growth;

  // a_m vanishes exactly at m = 6; f_m integral; c_d > 0 for d > 3.
  bool ok() const;
};
CoeffsSummary cmd_coeffs(unsigned m_max, unsigned d_max, OutputFormat format, std::ostream& out);

// dim (R/I)_k for k = 0..k_max, next to the Hilbert series of a regular sequence of the same degrees.
void cmd_hilbert(const GeneratorSet& a, std::uint32_t k_max, OutputFormat format, std::ostream& out);

// Decimal or 0x-prefixed hexadecimal.
std::uint64_t parse_seed(std::string_view text);

// "1,6,8" -> {1, 6, 8}; throws std::invalid_argument on malformed input.
std::vector<std::uint32_t> parse_degree_list(std::string_view text);

}  // namespace regseq
