// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// icx: command-line front end over the C API.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "icx/icx.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int code;
  std::string message;
};

struct Config {
  std::string table_path;
  std::string limit_text;
  std::string format;
  unsigned threads = 0;
  bool huge = false;
  bool timestamp = false;
};

void check(icx_status status) {
  if (status != ICX_OK) {
    throw Failure{kExitUsage, std::string(icx_status_name(status)) + ": " + icx_last_error()};
  }
}

std::string normalize(const std::string& text) {
  char* out = nullptr;
  check(icx_parse_integer(text.c_str(), &out));
  std::string s(out);
  icx_string_free(out);
  return s;
}

std::uint64_t to_u64(const std::string& text) {
  const std::string digits = normalize(text);
  if (digits.size() > 20) throw Failure{kExitUsage, "value too large: " + text};
  errno = 0;
  const unsigned long long v = std::strtoull(digits.c_str(), nullptr, 10);
  if (errno == ERANGE) throw Failure{kExitUsage, "value too large: " + text};
  return v;
}

std::vector<std::uint64_t> to_grid(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(to_u64(item));
  return out;
}

Json take_json(icx_status status, char*& raw) {
  check(status);
  Json j = Json::parse(raw);
  icx_string_free(raw);
  return j;
}

using TablePtr = std::unique_ptr<icx_table, decltype(&icx_table_free)>;

// Loads --table (or ICX_TABLE) when given, otherwise builds in memory up to
// max(--limit, needed).
TablePtr acquire_table(const Config& cfg, std::uint64_t needed,
                       std::uint64_t fallback_limit) {
  icx_table* raw = nullptr;
  std::string path = cfg.table_path;
  if (path.empty()) {
    if (const char* env = std::getenv("ICX_TABLE")) path = env;
  }
  if (!path.empty()) {
    check(icx_table_load(path.c_str(), &raw));
    TablePtr table(raw, icx_table_free);
    if (icx_table_limit(raw) < needed) {
      throw Failure{kExitUsage, "table " + path + " has limit " +
                                    std::to_string(icx_table_limit(raw)) + ", need " +
                                    std::to_string(needed)};
    }
    return table;
  }
  std::uint64_t limit = cfg.limit_text.empty() ? fallback_limit : to_u64(cfg.limit_text);
  if (limit < needed) limit = needed;
  check(icx_table_build(limit, &raw));
  return TablePtr(raw, icx_table_free);
}

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt(v.get<double>());
  return v.dump();
}

// Prints an array of flat objects as CSV with the given columns.
void print_csv(const Json& rows, const std::vector<std::string>& columns) {
  std::string header;
  for (const auto& c : columns) header += (header.empty() ? "" : ",") + c;
  std::cout << header << "\n";
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) line += ',';
      line += csv_field(scalar(row.at(columns[i])));
    }
    std::cout << line << "\n";
  }
}

class Output {
 public:
  explicit Output(const Config& cfg) : cfg_(cfg) {}

  std::string format(const char* fallback) const {
    return cfg_.format.empty() ? fallback : cfg_.format;
  }

  void json(Json j) const {
    if (cfg_.timestamp) {
      const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      char buf[32];
      std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
      j["timestamp"] = buf;
    }
    std::cout << j.dump(2) << "\n";
  }

 private:
  const Config& cfg_;
};

int run_build(const Config& cfg, const std::string& out_path) {
  if (cfg.limit_text.empty()) throw Failure{kExitUsage, "build needs --limit"};
  const std::string path = out_path.empty() ? cfg.table_path : out_path;
  if (path.empty()) throw Failure{kExitUsage, "build needs --out or --table"};
  icx_table* raw = nullptr;
  check(icx_table_build(to_u64(cfg.limit_text), &raw));
  TablePtr table(raw, icx_table_free);
  check(icx_table_save(raw, path.c_str()));
  const Output out(cfg);
  const std::string f = out.format("text");
  if (f == "json") {
    out.json({{"limit", icx_table_limit(raw)}, {"path", path}});
  } else if (f == "csv") {
    std::cout << "limit,path\n" << icx_table_limit(raw) << "," << csv_field(path) << "\n";
  } else {
    std::cout << "wrote " << path << " (limit " << icx_table_limit(raw) << ")\n";
  }
  return kExitOk;
}

int run_query(const Config& cfg, const std::vector<std::string>& args) {
  std::vector<std::uint64_t> ns;
  std::uint64_t top = 1;
  for (const auto& a : args) {
    ns.push_back(to_u64(a));
    top = std::max(top, ns.back());
  }
  const TablePtr table = acquire_table(cfg, top, top);
  Json rows = Json::array();
  for (std::uint64_t n : ns) {
    int cost = 0;
    check(icx_query(table.get(), n, &cost));
    rows.push_back({{"n", n}, {"cost", cost}});
  }
  const Output out(cfg);
  const std::string f = out.format("text");
  if (f == "json") {
    out.json(rows.size() == 1 ? rows[0] : rows);
  } else if (f == "csv") {
    print_csv(rows, {"n", "cost"});
  } else {
    for (const auto& r : rows) std::cout << r["cost"].get<int>() << "\n";
  }
  return kExitOk;
}

int run_expr(const Config& cfg, const std::vector<std::string>& args,
             const std::string& parse_text) {
  Json rows = Json::array();
  if (!parse_text.empty()) {
    char* raw = nullptr;
    rows.push_back(take_json(icx_parse(parse_text.c_str(), &raw), raw));
  }
  if (!args.empty()) {
    std::vector<std::uint64_t> ns;
    std::uint64_t top = 1;
    for (const auto& a : args) {
      ns.push_back(to_u64(a));
      top = std::max(top, ns.back());
    }
    const TablePtr table = acquire_table(cfg, top, top);
    for (std::uint64_t n : ns) {
      char* raw = nullptr;
      rows.push_back(take_json(icx_expr(table.get(), n, &raw), raw));
    }
  }
  if (rows.empty()) throw Failure{kExitUsage, "expr needs N or --parse TEXT"};
  const Output out(cfg);
  const std::string f = out.format("text");
  if (f == "json") {
    out.json(rows.size() == 1 ? rows[0] : rows);
  } else if (f == "csv") {
    const bool parsed = rows[0].contains("value");
    print_csv(rows, parsed ? std::vector<std::string>{"expression", "ones", "value"}
                           : std::vector<std::string>{"n", "ones", "expression"});
  } else {
    for (const auto& r : rows) {
      if (r.contains("value")) {
        std::cout << r["value"].get<std::string>() << " " << r["ones"] << "\n";
      } else {
        std::cout << r["expression"].get<std::string>() << "\n";
      }
    }
  }
  return kExitOk;
}

int run_defect(const Config& cfg, const std::vector<std::string>& args, double sigma) {
  std::vector<std::uint64_t> ns;
  std::uint64_t top = 1;
  for (const auto& a : args) {
    ns.push_back(to_u64(a));
    top = std::max(top, ns.back());
  }
  const TablePtr table = acquire_table(cfg, top, top);
  Json rows = Json::array();
  for (std::uint64_t n : ns) {
    char* raw = nullptr;
    rows.push_back(take_json(icx_defect(table.get(), n, sigma, &raw), raw));
  }
  const Output out(cfg);
  const std::string f = out.format("text");
  if (f == "json") {
    out.json(rows.size() == 1 ? rows[0] : rows);
  } else if (f == "csv") {
    print_csv(rows, {"n", "cost", "defect", "leader", "class"});
  } else {
    for (const auto& r : rows) {
      std::cout << "n " << r["n"] << " cost " << r["cost"] << " defect "
                << fmt(r["defect"].get<double>(), 9) << " leader "
                << (r["leader"].get<bool>() ? "yes" : "no") << " class " << r["class"]
                << "\n";
    }
  }
  return kExitOk;
}

int run_census(const Config& cfg, double sigma, int k_max, int m_max) {
  std::uint64_t top = 1;
  for (int i = 0; i < m_max && i < 40; ++i) top *= 3;
  const TablePtr table = acquire_table(cfg, top, top);
  char* raw = nullptr;
  const Json j = take_json(icx_census(table.get(), sigma, k_max, m_max, &raw), raw);
  const Output out(cfg);
  const std::string f = out.format("json");
  if (f == "json") {
    out.json(j);
  } else if (f == "csv") {
    print_csv(j["cells"], {"k", "m", "leaders", "all"});
  } else {
    for (const auto& c : j["cells"]) {
      std::cout << "k " << c["k"] << " m " << c["m"] << " leaders " << c["leaders"]
                << " all " << c["all"] << "\n";
    }
  }
  return kExitOk;
}

void print_checks_text(const Json& report) {
  std::cout << "suite " << report["suite"].get<std::string>() << "\n";
  for (const auto& c : report["checks"]) {
    std::cout << "[" << c["status"].get<std::string>() << "] "
              << c["check_id"].get<std::string>() << " "
              << c["description"].get<std::string>() << "\n"
              << "    expected " << c["expected"].get<std::string>() << "\n"
              << "    actual   " << c["actual"].get<std::string>() << "\n";
    for (const auto& w : c["witnesses"]) std::cout << "    " << w.get<std::string>() << "\n";
  }
  if (report.contains("discard_thresholds")) {
    std::string list;
    for (const auto& m : report["discard_thresholds"]) list += (list.empty() ? "" : ",") + m.dump();
    std::cout << "discard thresholds k=3..9: " << list << "\n";
  }
}

int run_verify(const Config& cfg, const std::string& suite, double sigma) {
  if (suite != "paper" && suite != "constants" && suite != "all") {
    throw Failure{kExitUsage, "unknown suite " + suite};
  }
  Json reports = Json::array();
  bool passed = true;
  if (suite == "paper" || suite == "all") {
    const std::uint64_t scan =
        cfg.limit_text.empty() ? std::uint64_t{1594323} : to_u64(cfg.limit_text);
    const TablePtr table = acquire_table(cfg, scan, scan);
    char* raw = nullptr;
    int ok = 0;
    reports.push_back(take_json(icx_verify_sets(table.get(), sigma, scan, &raw, &ok), raw));
    passed = passed && ok != 0;
  }
  if (suite == "constants" || suite == "all") {
    char* raw = nullptr;
    int ok = 0;
    reports.push_back(take_json(icx_verify_constants(&raw, &ok), raw));
    passed = passed && ok != 0;
  }
  const Output out(cfg);
  const std::string f = out.format("json");
  if (f == "json") {
    out.json(reports.size() == 1 ? reports[0] : Json{{"passed", passed}, {"suites", reports}});
  } else if (f == "csv") {
    Json rows = Json::array();
    for (const auto& r : reports) {
      for (auto c : r["checks"]) {
        c["suite"] = r["suite"];
        rows.push_back(c);
      }
    }
    print_csv(rows, {"suite", "check_id", "status", "expected", "actual"});
  } else {
    for (const auto& r : reports) print_checks_text(r);
    std::cout << (passed ? "all checks passed" : "some checks failed") << "\n";
  }
  return passed ? kExitOk : kExitCheckFailed;
}

int run_drb(const Config& cfg, std::uint64_t base) {
  const std::uint64_t estimate = icx_digit_memory_estimate(base);
  if (cfg.huge) {
    std::cerr << "base " << base << ": about " << estimate
              << " bytes of divisor tables\n";
  }
  const TablePtr table = acquire_table(cfg, base, base);
  char* raw = nullptr;
  const Json j = take_json(icx_digit_bounds(table.get(), base, cfg.huge ? 1 : 0, &raw), raw);
  const Output out(cfg);
  const std::string f = out.format("text");
  if (f == "json") {
    out.json(j);
  } else if (f == "csv") {
    print_csv(j["bounds"], {"base", "r", "bound", "witness"});
  } else {
    std::cout << "base " << j["base"] << "\n"
              << "sum " << j["sum"] << "\n"
              << "constant " << fmt(j["constant"].get<double>()) << "\n";
    for (const auto& row : j["bounds"]) {
      std::cout << "r " << row["r"] << " bound " << row["bound"] << " witness "
                << row["witness"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int run_synth(const Config& cfg, const std::string& n_text, std::uint64_t base,
              std::uint64_t k_min, std::uint64_t k_max) {
  const std::string n = normalize(n_text);
  const TablePtr table = acquire_table(cfg, std::max(base, k_max > 0 ? k_max - 1 : 1), 1);
  char* raw = nullptr;
  const Json j = take_json(icx_synth(table.get(), n.c_str(), base, k_min, k_max, &raw), raw);
  const Output out(cfg);
  const std::string f = out.format("json");
  if (f == "json") {
    out.json(j);
  } else if (f == "csv") {
    Json row = j;
    std::string digits;
    for (const auto& d : j["digits"]) digits += (digits.empty() ? "" : " ") + d.dump();
    row["digits"] = digits;
    print_csv(Json::array({row}), {"n", "base", "k", "r", "digits", "cost",
                                   "ratio_cost_over_log_n", "expression"});
  } else {
    std::cout << "n " << j["n"].get<std::string>() << "\nbase " << j["base"] << "\nk "
              << j["k"] << "\nr " << j["r"] << "\ncost " << j["cost"] << "\nratio "
              << fmt(j["ratio_cost_over_log_n"].get<double>()) << "\nexpression "
              << j["expression"].get<std::string>() << "\n";
  }
  return j["evaluates_to_n"].get<bool>() ? kExitOk : kExitCheckFailed;
}

int run_params(const Config& cfg, const std::string& n_text) {
  const std::string n = normalize(n_text);
  char* raw = nullptr;
  const Json j = take_json(icx_params(n.c_str(), &raw), raw);
  const Output out(cfg);
  const std::string f = out.format("json");
  if (f == "json") {
    out.json(j);
  } else if (f == "csv") {
    print_csv(Json::array({j}), {"n", "log_n", "p", "K"});
  } else {
    std::cout << "n " << j["n"].get<std::string>() << "\nlog_n "
              << fmt(j["log_n"].get<double>()) << "\np " << j["p"] << "\nK " << j["K"]
              << "\n";
  }
  return kExitOk;
}

struct StatsArgs {
  std::string kind;
  std::string grid_text;
  double t = 3.06;
  double r = 0.48;
  std::string n_text;
  std::uint64_t m = 2;
  std::uint64_t j = 20;
  std::uint64_t big_k = 64;
};

int run_stats(const Config& cfg, const StatsArgs& a) {
  const Output out(cfg);
  Json j;
  char* raw = nullptr;
  int code = kExitOk;
  if (a.kind == "discrepancy") {
    if (a.n_text.empty()) throw Failure{kExitUsage, "stats discrepancy needs N"};
    const std::string n = normalize(a.n_text);
    j = take_json(icx_stats_discrepancy(n.c_str(), a.m, a.j, a.big_k, &raw), raw);
  } else if (a.kind == "density" || a.kind == "growth") {
    const std::vector<std::uint64_t> grid =
        a.grid_text.empty() ? std::vector<std::uint64_t>{} : to_grid(a.grid_text);
    const std::uint64_t top = grid.empty() ? 1 : grid.back();
    const TablePtr table = acquire_table(cfg, top, top);
    j = take_json(a.kind == "density"
                      ? icx_stats_density(table.get(), a.t, grid.data(), grid.size(), &raw)
                      : icx_stats_growth(table.get(), a.r, grid.data(), grid.size(), &raw),
                  raw);
  } else if (a.kind == "ratio" || a.kind == "conjecture") {
    const std::uint64_t n = cfg.limit_text.empty() ? std::uint64_t{1000000}
                                                   : to_u64(cfg.limit_text);
    const TablePtr table = acquire_table(cfg, n, n);
    j = take_json(a.kind == "ratio" ? icx_stats_ratio(table.get(), n, &raw)
                                    : icx_stats_conjecture(table.get(), n, &raw),
                  raw);
    if (a.kind == "conjecture" && !j["passed"].get<bool>()) code = kExitCheckFailed;
  } else {
    throw Failure{kExitUsage, "unknown stats kind " + a.kind};
  }

  const std::string f = out.format("text");
  if (f == "json") {
    out.json(j);
  } else if (a.kind == "density") {
    if (f == "csv") {
      print_csv(j["rows"], {"N", "count", "fraction"});
    } else {
      for (const auto& row : j["rows"]) {
        std::cout << "N " << row["N"] << " count " << row["count"] << " fraction "
                  << fmt(row["fraction"].get<double>(), 9) << "\n";
      }
    }
  } else if (a.kind == "growth") {
    if (f == "csv") {
      print_csv(j["rows"], {"N", "r", "count"});
    } else {
      for (const auto& row : j["rows"]) {
        std::cout << "N " << row["N"] << " r " << fmt(row["r"].get<double>(), 4)
                  << " count " << row["count"] << "\n";
      }
      const auto& e = j["fitted_exponent"];
      std::cout << "fitted exponent " << (e.is_null() ? "n/a" : fmt(e.get<double>(), 4))
                << "\n";
    }
  } else if (a.kind == "ratio") {
    if (f == "csv") {
      print_csv(Json::array({j}), {"n", "cost", "ratio"});
    } else {
      std::cout << "n " << j["n"] << " cost " << j["cost"] << " ratio "
                << fmt(j["ratio"].get<double>()) << "\n";
    }
  } else if (a.kind == "discrepancy") {
    if (f == "csv") {
      print_csv(Json::array({j}), {"n", "m", "j", "K", "star", "extreme"});
    } else {
      std::cout << "K " << j["K"] << " star " << fmt(j["star"].get<double>(), 9)
                << " extreme " << fmt(j["extreme"].get<double>(), 9) << "\n";
    }
  } else {
    if (f == "csv") {
      print_csv(j["violations"], {"a", "b", "c", "n", "cost", "expected"});
    } else {
      std::cout << "candidates " << j["candidates"] << " violations "
                << j["violations"].size() << "\n";
      for (const auto& v : j["violations"]) {
        std::cout << "n " << v["n"] << " cost " << v["cost"] << " expected "
                  << v["expected"] << "\n";
      }
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"icx: exact integer complexity tables and experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--table", cfg.table_path, "Table file (default: $ICX_TABLE)");
  app.add_option("--limit", cfg.limit_text, "Table limit or scan bound, e.g. 1e7, 3^13");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", cfg.threads, "Worker thread cap (0 = all cores)");
  app.add_flag("--huge", cfg.huge, "Allow large digit bases");
  app.add_flag("--timestamp", cfg.timestamp, "Stamp JSON output with the current time");

  std::string out_path;
  auto* build = app.add_subcommand("build", "Build a table and save it");
  build->add_option("--out", out_path, "Output file (default: --table)");

  std::vector<std::string> values;
  auto* query = app.add_subcommand("query", "Print ||n||");
  query->add_option("n", values)->required();

  std::string parse_text;
  auto* expr = app.add_subcommand("expr", "Optimal expression of n, or parse one");
  expr->add_option("n", values);
  expr->add_option("--parse", parse_text, "Expression to parse and evaluate");

  double sigma = 0.48;
  auto* defect = app.add_subcommand("defect", "Defect, leader flag and class of n");
  defect->add_option("n", values)->required();
  defect->add_option("--sigma", sigma);

  int k_max = 3, m_max = 10;
  auto* census = app.add_subcommand("census", "Leader counts per class and interval");
  census->add_option("--sigma", sigma);
  census->add_option("--kmax", k_max);
  census->add_option("--mmax", m_max);

  std::string suite = "paper";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"paper", "constants", "all"}));
  verify->add_option("--sigma", sigma);

  std::string base_text = "24";
  auto* drb = app.add_subcommand("drb", "Certified digit bounds for a base");
  drb->add_option("--base", base_text);

  std::string n_text, kmin_text = "1", kmax_text = "64";
  auto* synth = app.add_subcommand("synth", "Synthesize an expression for a large n");
  synth->add_option("n", n_text)->required();
  synth->add_option("--base", base_text);
  synth->add_option("--kmin", kmin_text, "Smallest multiplier");
  synth->add_option("--kmax", kmax_text, "Multipliers run over [kmin, kmax)");

  auto* params = app.add_subcommand("params", "Asymptotic p and K for n");
  params->add_option("n", n_text)->required();

  StatsArgs stats_args;
  std::string m_text = "2", j_text = "20", bigk_text = "64";
  auto* stats = app.add_subcommand("stats", "Empirical scans");
  stats->add_option("kind", stats_args.kind)
      ->required()
      ->check(CLI::IsMember({"density", "growth", "ratio", "discrepancy", "conjecture"}));
  stats->add_option("n", stats_args.n_text, "n for discrepancy");
  stats->add_option("--grid", stats_args.grid_text, "Comma-separated N values");
  stats->add_option("--t", stats_args.t, "Density threshold");
  stats->add_option("--r", stats_args.r, "Defect bound");
  stats->add_option("--m", m_text);
  stats->add_option("--j", j_text);
  stats->add_option("--K", bigk_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    icx_set_threads(cfg.threads);
    if (*build) return run_build(cfg, out_path);
    if (*query) return run_query(cfg, values);
    if (*expr) return run_expr(cfg, values, parse_text);
    if (*defect) return run_defect(cfg, values, sigma);
    if (*census) return run_census(cfg, sigma, k_max, m_max);
    if (*verify) return run_verify(cfg, suite, sigma);
    if (*drb) return run_drb(cfg, to_u64(base_text));
    if (*synth) {
      return run_synth(cfg, n_text, to_u64(base_text), to_u64(kmin_text),
                       to_u64(kmax_text));
    }
    if (*params) return run_params(cfg, n_text);
    if (*stats) {
      stats_args.m = to_u64(m_text);
      stats_args.j = to_u64(j_text);
      stats_args.big_k = to_u64(bigk_text);
      return run_stats(cfg, stats_args);
    }
  } catch (const Failure& f) {
    std::cerr << "icx: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "icx: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}
