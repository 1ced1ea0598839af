#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <tuple>
#include <vector>

#include "regseq/record.hpp"

namespace regseq {

struct CacheKey {
  Family family;
  std::size_t n;
  std::vector<std::uint32_t> degrees;
  Strategy strategy;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};
CacheKey key_of(const ResultRecord& r);

// Append-only JSONL verdict store. The whole file is indexed on construction;
// later lines override earlier ones, and a strict verdict answers fast lookups too.
class VerdictCache {
 public:
  // Corrupt lines are skipped and reported on `warnings`.
  explicit VerdictCache(std::filesystem::path path, std::ostream* warnings = nullptr);

  std::optional<ResultRecord> get(const CacheKey& key) const;
  void put(const ResultRecord& r);  // appends and flushes one line

  std::size_t size() const;
  std::size_t skipped_lines() const { return skipped_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<CacheKey, ResultRecord> index_;
  std::size_t skipped_ = 0;
};

}  // namespace regseq
