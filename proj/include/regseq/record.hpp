#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regseq/degree_set.hpp"
#include "regseq/engine.hpp"

namespace regseq {

std::string_view strategy_name(Strategy s);  // "fast" / "strict"
Strategy parse_strategy(std::string_view text);

// One verdict as it appears in scan output and in the cache.
struct ResultRecord {
  Family family = Family::Power;
  std::size_t n = 0;
  std::vector<std::uint32_t> degrees;
  Status status = Status::NotRegular;
  Method method = Method::Trivial;
  std::optional<bool> predicted;  // absent when no conjecture covers the set
  std::optional<bool> agree;
  std::uint64_t critical_degree = 0;
  std::optional<std::uint64_t> rank;
  std::optional<std::uint64_t> expected_rank;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = kDefaultSeed;
  double elapsed_ms = 0;
  // Beyond the fixed schema: how the verdict was reached.
  Strategy strategy = Strategy::Fast;
  std::string evidence;
  std::optional<std::string> witness;

  // A modular rank deficiency that exact elimination has not confirmed.
  bool unconfirmed() const { return status == Status::ProbablyNotRegular; }

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

// agree compares regularity with the prediction; probably-not-regular counts as not regular.
ResultRecord make_record(const DegreeSet& a, const Verdict& v, Strategy strategy,
                         std::optional<bool> predicted = std::nullopt);

std::string to_jsonl(const ResultRecord& r);  // single line, no trailing newline
ResultRecord parse_jsonl(std::string_view line);  // throws std::invalid_argument

std::string csv_header();
std::string to_csv(const ResultRecord& r);
std::string table_header();
std::string to_table_row(const ResultRecord& r);

}  // namespace regseq
