#include "regseq/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "regseq/cache.hpp"
#include "regseq/conjectures.hpp"
#include "regseq/rank_test.hpp"
#include "regseq/symfunc.hpp"

namespace regseq {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t v = 0;
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    base = 16;
  }
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return v;
}

void emit_header(OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Csv) out << csv_header() << '\n';
  if (format == OutputFormat::Table) out << table_header() << '\n';
}

void emit(const ResultRecord& r, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Jsonl: out << to_jsonl(r) << '\n'; break;
    case OutputFormat::Csv: out << to_csv(r) << '\n'; break;
    case OutputFormat::Table: out << to_table_row(r) << '\n'; break;
  }
}

std::uint32_t gcd_of(const std::vector<std::uint32_t>& d) {
  return std::accumulate(d.begin(), d.end(), 0U, [](std::uint32_t g, std::uint32_t x) { return std::gcd(g, x); });
}

// Coefficients of prod (1 - q^a) / (1 - q)^n up to q^k_max.
std::vector<BigInt> regular_series(const GeneratorSet& a, std::uint32_t k_max) {
  std::vector<BigInt> s(k_max + 1);
  for (std::uint32_t k = 0; k <= k_max; ++k) s[k] = binomial(static_cast<long>(k + a.n() - 1), static_cast<long>(a.n() - 1));
  for (auto deg : a.degrees()) {
    for (std::uint32_t k = k_max; k >= deg; --k) s[k] -= s[k - deg];
  }
  return s;
}

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out.empty() ? "-" : out;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "jsonl") return OutputFormat::Jsonl;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

RunConfig config_from_env(const EnvLookup& lookup) {
  RunConfig cfg;
  if (const char* v = lookup("REGSEQ_CACHE"); v && *v) cfg.cache = std::filesystem::path(v);
  if (const char* v = lookup("REGSEQ_SEED"); v && *v) cfg.seed = parse_u64(v, "REGSEQ_SEED");
  if (const char* v = lookup("REGSEQ_PRIMES"); v && *v) {
    cfg.primes = parse_u64(v, "REGSEQ_PRIMES");
    if (cfg.primes == 0) throw std::invalid_argument("REGSEQ_PRIMES must be positive");
  }
  return cfg;
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions opts;
  opts.rank.strategy = cfg.strategy;
  opts.rank.prime_count = cfg.primes;
  opts.rank.seed = cfg.seed;
  return opts;
}

std::optional<bool> conjecture_prediction(const DegreeSet& a) {
  if (a.family() == Family::Power && a.n() == 3) return n3_power_prediction(normalize(a).reduced);
  if (a.family() == Family::Power && a.n() == 4) return n4_power_conditions(normalize(a).reduced).all();
  if (a.family() == Family::Complete && a.n() == 3) return n3_complete_conditions(a).all();
  return std::nullopt;
}

ResultRecord cmd_check(const DegreeSet& a, const RunConfig& cfg, std::ostream& out) {
  const Verdict v = is_regular(a, engine_options(cfg));
  ResultRecord r = make_record(a, v, cfg.strategy, conjecture_prediction(a));
  emit_header(cfg.format, out);
  emit(r, cfg.format, out);
  return r;
}

std::string_view scan_target_name(ScanTarget t) {
  switch (t) {
    case ScanTarget::N3Power: return "n3-power";
    case ScanTarget::N4Power: return "n4-power";
    case ScanTarget::N3Complete: return "n3-complete";
  }
  throw std::logic_error("unknown scan target");
}

ScanTarget parse_scan_target(std::string_view text) {
  for (auto t : {ScanTarget::N3Power, ScanTarget::N4Power, ScanTarget::N3Complete}) {
    if (scan_target_name(t) == text) return t;
  }
  throw std::invalid_argument("unknown scan target '" + std::string(text) + "'");
}

std::vector<DegreeSet> scan_sets(ScanTarget target, std::uint32_t bound) {
  const std::size_t n = target == ScanTarget::N4Power ? 4 : 3;
  const Family family = target == ScanTarget::N3Complete ? Family::Complete : Family::Power;
  if (bound < n) throw std::invalid_argument("scan bound must be at least n");
  std::vector<DegreeSet> out;
  std::vector<std::uint32_t> d(n);
  // Odometer over strictly increasing tuples, which is lexicographic order.
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<std::uint32_t>(i + 1);
  while (true) {
    if (family == Family::Complete || gcd_of(d) == 1) out.emplace_back(family, n, d);
    std::size_t i = n;
    while (i > 0 && d[i - 1] == bound - (n - i)) --i;
    if (i == 0) break;
    ++d[i - 1];
    for (std::size_t j = i; j < n; ++j) d[j] = d[j - 1] + 1;
  }
  return out;
}

ScanSummary cmd_scan(const ScanJob& job, std::ostream& out, std::ostream& log) {
  const std::vector<DegreeSet> sets = scan_sets(job.target, job.bound);
  std::optional<VerdictCache> cache;
  if (job.config.cache) cache.emplace(*job.config.cache, &log);
  const EngineOptions opts = engine_options(job.config);

  struct Slot {
    std::optional<ResultRecord> record;
    bool cached = false;
    std::exception_ptr error;
    bool done = false;
  };
  std::vector<Slot> slots(sets.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto solve = [&](std::size_t i) {
    Slot slot;
    try {
      const DegreeSet& a = sets[i];
      const auto predicted = conjecture_prediction(a);
      if (cache) {
        if (auto c = cache->get({a.family(), a.n(), a.degrees(), job.config.strategy})) {
          c->predicted = predicted;
          c->agree = predicted ? std::optional<bool>(*predicted == (c->status == Status::Regular)) : std::nullopt;
          slot.record = std::move(c);
          slot.cached = true;
        }
      }
      if (!slot.record) {
        slot.record = make_record(a, is_regular(a, opts), job.config.strategy, predicted);
        if (cache) cache->put(*slot.record);
      }
    } catch (...) {
      slot.error = std::current_exception();
    }
    slot.done = true;
    std::lock_guard lock(mu);
    slots[i] = std::move(slot);
    ready.notify_all();
  };

  const unsigned jobs = std::max(1U, job.config.jobs);
  std::vector<std::jthread> pool;
  if (jobs > 1) {
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < sets.size(); i = next++) solve(i);
      });
    }
  }

  ScanSummary summary;
  emit_header(job.config.format, out);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (jobs == 1) {
      solve(i);
    } else {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return slots[i].done; });
    }
    if (slots[i].error) {
      next = sets.size();  // stop handing out work
      std::rethrow_exception(slots[i].error);
    }
    const ResultRecord& r = *slots[i].record;
    emit(r, job.config.format, out);
    ++summary.total;
    if (slots[i].cached) ++summary.from_cache;
    switch (r.status) {
      case Status::Regular: ++summary.regular; break;
      case Status::NotRegular: ++summary.not_regular; break;
      case Status::ProbablyNotRegular: ++summary.probably_not_regular; break;
    }
    if (r.agree && !*r.agree) summary.disagreements.push_back(sets[i].to_string());
  }

  log << "scan " << scan_target_name(job.target) << " bound " << job.bound << ": " << summary.total << " sets, "
      << summary.regular << " regular, " << summary.not_regular << " not regular, " << summary.probably_not_regular
      << " unconfirmed, " << summary.from_cache << " from cache, " << summary.disagreements.size()
      << " disagreements\n";
  for (const auto& s : summary.disagreements) log << "  disagreement: " << s << '\n';
  return summary;
}

bool appendix_ok(const NonvanishingReport& r) {
  return r.nonvanishing() && r.rewrite_mismatches.empty() && r.combined_mismatches.empty() &&
         r.ultrametric_mismatches.empty() && r.a_link_mismatches.empty();
}

NonvanishingReport cmd_appendix(long h_max, OutputFormat format, std::ostream& out) {
  const NonvanishingReport r = verify_nonvanishing(h_max);
  if (format == OutputFormat::Jsonl) {
    nlohmann::ordered_json j;
    j["h_max"] = r.h_max;
    j["h3_is_zero"] = r.h3_is_zero;
    j["nonvanishing"] = r.nonvanishing();
    j["zero_sums"] = r.zero_sums;
    j["rewrite_mismatches"] = r.rewrite_mismatches;
    j["combined_mismatches"] = r.combined_mismatches;
    j["ultrametric_mismatches"] = r.ultrametric_mismatches;
    j["a_link_mismatches"] = r.a_link_mismatches;
    j["dominance_anomalies"] = r.dominance_anomalies;
    j["carry_failures"] = r.carry_failures;
    j["shifted_carry_failures"] = r.shifted_carry_failures;
    j["ok"] = appendix_ok(r);
    j["all_claims"] = r.passed();
    out << j.dump() << '\n';
  } else {
    const char sep = format == OutputFormat::Csv ? ',' : ' ';
    auto line = [&](std::string_view name, const std::string& value) { out << name << sep << value << '\n'; };
    if (format == OutputFormat::Csv) out << "check,value\n";
    line("h_max", std::to_string(r.h_max));
    line("h3_is_zero", r.h3_is_zero ? "true" : "false");
    line("zero_sums", join_longs(r.zero_sums));
    line("rewrite_mismatches", join_longs(r.rewrite_mismatches));
    line("combined_mismatches", join_longs(r.combined_mismatches));
    line("ultrametric_mismatches", join_longs(r.ultrametric_mismatches));
    line("a_link_mismatches", join_longs(r.a_link_mismatches));
    line("dominance_anomalies", join_longs(r.dominance_anomalies));
    line("carry_failures", join_longs(r.carry_failures));
    line("shifted_carry_failures", join_longs(r.shifted_carry_failures));
    line("ok", appendix_ok(r) ? "true" : "false");
  }
  return r;
}

bool CoeffsSummary::ok() const {
  const std::vector<unsigned> expected_zeros = m_max >= 6 ? std::vector<unsigned>{6} : std::vector<unsigned>{};
  return zero_a == expected_zeros && nonintegral_f.empty() && nonpositive_c.empty() &&
         growth.exact_positive && growth.ratio_in_range;
}

CoeffsSummary cmd_coeffs(unsigned m_max, unsigned d_max, OutputFormat format, std::ostream& out) {
  if (m_max < 2) throw std::invalid_argument("coeffs needs mmax >= 2");
  if (d_max < 4) throw std::invalid_argument("coeffs needs dmax >= 4");
  CoeffsSummary s;
  s.m_max = m_max;
  if (format == OutputFormat::Csv) out << "kind,index,value,flag\n";
  auto row = [&](const char* kind, unsigned index, const std::string& value, bool flag) {
    switch (format) {
      case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["index"] = index;
        j["value"] = value;
        j[std::string(kind) == "a" ? "f_integral" : "positive"] = flag;
        out << j.dump() << '\n';
        break;
      }
      case OutputFormat::Csv: out << kind << ',' << index << ',' << value << ',' << (flag ? 1 : 0) << '\n'; break;
      case OutputFormat::Table: out << kind << ' ' << index << ' ' << value << (flag ? "" : "  !") << '\n'; break;
    }
  };
  for (unsigned m = 2; m <= m_max; ++m) {
    const BigRat a = a_coefficient(m);
    const UniPoly f = f_polynomial(m);
    const bool integral = f.has_integer_coeffs();
    if (a.is_zero()) s.zero_a.push_back(m);
    if (!integral) s.nonintegral_f.push_back(m);
    row("a", m, a.to_string(), integral);
  }
  for (unsigned d = 1; d <= d_max; ++d) {
    const int sign = c_coefficient_sign(d);
    if (d > 3 && sign <= 0) s.nonpositive_c.push_back(d);
    // c_d itself has thousands of digits at the top of the range; the sign is what matters.
    row("c", d, d <= 30 ? c_coefficient(d).to_string() : (sign > 0 ? "+" : sign < 0 ? "-" : "0"), sign > 0);
  }
  s.growth = c_growth_check(d_max);
  return s;
}

void cmd_hilbert(const GeneratorSet& a, std::uint32_t k_max, OutputFormat format, std::ostream& out) {
  const std::vector<BigInt> actual = hilbert_series(a, k_max);
  const std::vector<BigInt> regular = regular_series(a, k_max);
  if (format == OutputFormat::Csv) out << "k,dim,regular_series\n";
  if (format == OutputFormat::Table) out << "k  dim  regular_series\n";
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    switch (format) {
      case OutputFormat::Jsonl: {
        nlohmann::ordered_json j;
        j["generators"] = a.to_string();
        j["k"] = k;
        j["dim"] = actual[k].to_string();
        j["regular_series"] = regular[k].to_string();
        out << j.dump() << '\n';
        break;
      }
      case OutputFormat::Csv: out << k << ',' << actual[k].to_string() << ',' << regular[k].to_string() << '\n'; break;
      case OutputFormat::Table:
        out << k << "  " << actual[k].to_string() << "  " << regular[k].to_string() << '\n';
        break;
    }
  }
}

std::uint64_t parse_seed(std::string_view text) { return parse_u64(text, "seed"); }

std::vector<std::uint32_t> parse_degree_list(std::string_view text) {
  const std::string original(text);
  std::vector<std::uint32_t> out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("malformed degree list '" + original + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace regseq
