#include "regseq/cache.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace regseq {

CacheKey key_of(const ResultRecord& r) { return {r.family, r.n, r.degrees, r.strategy}; }

VerdictCache::VerdictCache(std::filesystem::path path, std::ostream* warnings) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      ResultRecord r = parse_jsonl(line);
      index_.insert_or_assign(key_of(r), std::move(r));
    } catch (const std::exception& e) {
      ++skipped_;
      if (warnings) *warnings << "warning: " << path_.string() << ":" << lineno << ": skipped (" << e.what() << ")\n";
    }
  }
}

std::optional<ResultRecord> VerdictCache::get(const CacheKey& key) const {
  std::lock_guard lock(mu_);
  CacheKey strict = key;
  strict.strategy = Strategy::Strict;
  if (auto it = index_.find(strict); it != index_.end()) return it->second;
  if (key.strategy == Strategy::Fast) {
    if (auto it = index_.find(key); it != index_.end()) return it->second;
  }
  return std::nullopt;
}

void VerdictCache::put(const ResultRecord& r) {
  std::lock_guard lock(mu_);
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache " + path_.string());
  out << to_jsonl(r) << '\n';
  out.flush();
  index_.insert_or_assign(key_of(r), r);
}

std::size_t VerdictCache::size() const {
  std::lock_guard lock(mu_);
  return index_.size();
}

}  // namespace regseq
