#include "regseq/record.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace regseq {

using nlohmann::json;

namespace {

std::string join(const auto& values, char sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string opt_text(const std::optional<bool>& v) {
  if (!v) return "";
  return *v ? "true" : "false";
}

std::string opt_text(const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : ""; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string_view strategy_name(Strategy s) { return s == Strategy::Strict ? "strict" : "fast"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "fast") return Strategy::Fast;
  if (text == "strict") return Strategy::Strict;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
}

ResultRecord make_record(const DegreeSet& a, const Verdict& v, Strategy strategy, std::optional<bool> predicted) {
  ResultRecord r;
  r.family = a.family();
  r.n = a.n();
  r.degrees = a.degrees();
  r.status = v.status;
  r.method = v.method;
  r.predicted = predicted;
  if (predicted) r.agree = v.regular() == *predicted;
  r.critical_degree = v.critical_degree;
  r.rank = v.rank;
  r.expected_rank = v.expected_rank;
  r.primes = v.primes;
  r.seed = v.seed;
  r.elapsed_ms = v.elapsed_ms;
  r.strategy = strategy;
  r.evidence = v.evidence;
  if (v.witness) r.witness = v.witness->to_string();
  return r;
}

std::string to_jsonl(const ResultRecord& r) {
  // ordered_json keeps the schema's field order stable across runs.
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(r.family));
  j["n"] = r.n;
  j["degrees"] = r.degrees;
  j["status"] = std::string(status_name(r.status));
  j["method"] = std::string(method_name(r.method));
  j["predicted"] = opt(r.predicted);
  j["agree"] = opt(r.agree);
  j["critical_degree"] = r.critical_degree;
  j["rank"] = opt(r.rank);
  j["expected_rank"] = opt(r.expected_rank);
  j["primes"] = r.primes;
  j["seed"] = r.seed;
  j["elapsed_ms"] = r.elapsed_ms;
  j["strategy"] = std::string(strategy_name(r.strategy));
  j["evidence"] = r.evidence;
  j["witness"] = opt(r.witness);
  return j.dump();
}

ResultRecord parse_jsonl(std::string_view line) {
  try {
    const json j = json::parse(line);
    ResultRecord r;
    r.family = parse_family(j.at("family").get<std::string>());
    r.n = j.at("n").get<std::size_t>();
    r.degrees = j.at("degrees").get<std::vector<std::uint32_t>>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    r.predicted = get_opt<bool>(j, "predicted");
    r.agree = get_opt<bool>(j, "agree");
    r.critical_degree = j.at("critical_degree").get<std::uint64_t>();
    r.rank = get_opt<std::uint64_t>(j, "rank");
    r.expected_rank = get_opt<std::uint64_t>(j, "expected_rank");
    r.primes = j.at("primes").get<std::vector<std::uint64_t>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.strategy = parse_strategy(j.value("strategy", std::string("fast")));
    r.evidence = j.value("evidence", std::string());
    r.witness = get_opt<std::string>(j, "witness");
    // Validates the degree list against n.
    DegreeSet(r.family, r.n, r.degrees);
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
}

std::string csv_header() {
  return "family,n,degrees,status,method,predicted,agree,critical_degree,rank,expected_rank,primes,seed,elapsed_ms,"
         "strategy,evidence,witness";
}

std::string to_csv(const ResultRecord& r) {
  std::ostringstream os;
  os << family_name(r.family) << ',' << r.n << ',' << join(r.degrees, ' ') << ',' << status_name(r.status) << ','
     << method_name(r.method) << ',' << opt_text(r.predicted) << ',' << opt_text(r.agree) << ','
     << r.critical_degree << ',' << opt_text(r.rank) << ',' << opt_text(r.expected_rank) << ','
     << join(r.primes, ' ') << ',' << r.seed << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << ','
     << strategy_name(r.strategy) << ',' << csv_quote(r.evidence) << ',' << csv_quote(r.witness.value_or(""));
  return os.str();
}

std::string table_header() {
  std::ostringstream os;
  os << std::left << std::setw(10) << "family" << std::setw(20) << "degrees" << std::setw(22) << "status"
     << std::setw(20) << "method" << std::setw(10) << "predicted" << std::setw(7) << "agree" << std::right
     << std::setw(8) << "D" << std::setw(14) << "rank" << std::setw(12) << "ms";
  return os.str();
}

std::string to_table_row(const ResultRecord& r) {
  std::ostringstream os;
  std::string rank = r.rank ? opt_text(r.rank) + "/" + opt_text(r.expected_rank) : "-";
  os << std::left << std::setw(10) << family_name(r.family) << std::setw(20) << "{" + join(r.degrees, ',') + "}"
     << std::setw(22) << status_name(r.status) << std::setw(20) << method_name(r.method) << std::setw(10)
     << (r.predicted ? opt_text(r.predicted) : "-") << std::setw(7) << (r.agree ? opt_text(r.agree) : "-")
     << std::right << std::setw(8) << r.critical_degree << std::setw(14) << rank << std::setw(12) << std::fixed
     << std::setprecision(2) << r.elapsed_ms;
  return os.str();
}

}  // namespace regseq
