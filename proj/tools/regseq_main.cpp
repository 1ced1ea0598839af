// regseq: decide regularity of power-sum / complete symmetric sequences and run
// the conjecture scans and coefficient checks from the command line.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "regseq/commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;  // I/O or internal error

struct Flags {
  bool strict = false;
  std::optional<std::size_t> primes;
  std::optional<std::string> seed;
  std::optional<std::string> cache;
  std::string format = "jsonl";
  unsigned jobs = 1;
};

void add_run_flags(CLI::App* cmd, Flags& f) {
  cmd->add_flag("--strict", f.strict, "confirm every negative by exact elimination");
  cmd->add_option("--primes", f.primes, "number of random primes for the modular rank")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "seed for prime selection (decimal or 0x hex)");
  cmd->add_option("--cache", f.cache, "JSONL verdict cache");
  cmd->add_option("--format", f.format, "jsonl, csv or table")->check(CLI::IsMember({"jsonl", "csv", "table"}));
  cmd->add_option("--jobs", f.jobs, "worker threads for scans")->check(CLI::PositiveNumber);
}

// flags > environment > defaults
regseq::RunConfig resolve(const Flags& f) {
  regseq::RunConfig cfg = regseq::config_from_env([](const char* name) { return std::getenv(name); });
  if (f.strict) cfg.strategy = regseq::Strategy::Strict;
  if (f.primes) cfg.primes = *f.primes;
  if (f.seed) cfg.seed = regseq::parse_seed(*f.seed);
  if (f.cache) cfg.cache = *f.cache;
  cfg.format = regseq::parse_format(f.format);
  cfg.jobs = f.jobs;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularity of sequences of symmetric polynomials"};
  app.require_subcommand(1);

  Flags flags;
  std::string family;
  std::size_t n = 0;
  std::string degrees;

  auto* check = app.add_subcommand("check", "decide one degree set");
  check->add_option("-f,--family", family, "p (power sums) or h (complete)")->required();
  check->add_option("-n", n, "number of variables")->required()->check(CLI::PositiveNumber);
  check->add_option("-A", degrees, "comma-separated degrees")->required();
  add_run_flags(check, flags);

  std::string target;
  std::uint32_t bound = 0;
  auto* scan = app.add_subcommand("scan", "scan all degree sets up to a bound against a conjecture");
  scan->add_option("target", target, "n3-power, n4-power or n3-complete")
      ->required()
      ->check(CLI::IsMember({"n3-power", "n4-power", "n3-complete"}));
  scan->add_option("--max", bound, "largest degree")->required();
  add_run_flags(scan, flags);

  long h_max = 2000;
  auto* appendix = app.add_subcommand("appendix", "exact 3-adic nonvanishing check");
  appendix->add_option("--hmax", h_max, "largest h")->check(CLI::Range(4L, 1000000L));
  appendix->add_option("--format", flags.format)->check(CLI::IsMember({"jsonl", "csv", "table"}));

  unsigned m_max = 200;
  unsigned d_max = 10000;
  auto* coeffs = app.add_subcommand("coeffs", "a_m, f_m and c_d tables");
  coeffs->add_option("--mmax", m_max, "largest m")->check(CLI::PositiveNumber);
  coeffs->add_option("--dmax", d_max, "largest d")->check(CLI::Range(4U, 1000000U));
  coeffs->add_option("--format", flags.format)->check(CLI::IsMember({"jsonl", "csv", "table"}));

  std::optional<std::uint32_t> k_max;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the quotient ring");
  hilbert->add_option("-f,--family", family, "p or h")->required();
  hilbert->add_option("-n", n, "number of variables")->required()->check(CLI::PositiveNumber);
  hilbert->add_option("-A", degrees, "comma-separated degrees")->required();
  hilbert->add_option("--kmax", k_max, "largest degree k (default: the critical degree)");
  hilbert->add_option("--format", flags.format)->check(CLI::IsMember({"jsonl", "csv", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  regseq::RunConfig cfg;
  try {
    cfg = resolve(flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*check) {
      const regseq::DegreeSet a(regseq::parse_family(family), n, regseq::parse_degree_list(degrees));
      regseq::cmd_check(a, cfg, std::cout);
      return kExitOk;
    }
    if (*scan) {
      const regseq::ScanJob job{regseq::parse_scan_target(target), bound, cfg};
      const auto summary = regseq::cmd_scan(job, std::cout, std::cerr);
      return summary.ok() ? kExitOk : kExitDisagreement;
    }
    if (*appendix) {
      const auto report = regseq::cmd_appendix(h_max, cfg.format, std::cout);
      if (!report.carry_failures.empty() || !report.dominance_anomalies.empty()) {
        std::cerr << "warning: " << report.carry_failures.size() << " h with a violated carry bound, "
                  << report.dominance_anomalies.size() << " dominance anomalies (sums are still nonzero)\n";
      }
      return regseq::appendix_ok(report) ? kExitOk : kExitDisagreement;
    }
    if (*coeffs) {
      const auto summary = regseq::cmd_coeffs(m_max, d_max, cfg.format, std::cout);
      std::cerr << "(alpha/|beta|)^4 = " << summary.growth.ratio4 << '\n';
      return summary.ok() ? kExitOk : kExitDisagreement;
    }
    if (*hilbert) {
      const regseq::GeneratorSet a(regseq::parse_family(family), n, regseq::parse_degree_list(degrees));
      std::uint64_t top = 1;
      for (auto d : a.degrees()) top += d - 1;
      regseq::cmd_hilbert(a, k_max.value_or(static_cast<std::uint32_t>(top)), cfg.format, std::cout);
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
