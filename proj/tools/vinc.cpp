// vinc -- batch front end for the vincular pattern toolkit.
//
// Subcommands wrap the C API in libvincular; count/stat-style results are
// memoized in a JSON cache keyed by (pattern, n, kind) and reused only when
// the engine version matches.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vincular.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitUsage);
}

void check_api(vinc_status st) {
  if (st == VINC_OK) return;
  die_usage(vinc_last_error());
}

struct Options {
  std::string format = "json";
  std::string cache_path;
  int threads = 0;
};

class Cache {
 public:
  explicit Cache(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    enabled_ = true;
    std::ifstream in(path_);
    if (!in) return;
    try {
      json j = json::parse(in);
      if (j.value("schema_version", 0) == 1 &&
          j.value("engine_version", "") == vinc_version() && j.contains("entries"))
        entries_ = j["entries"];
    } catch (const json::exception&) {
      std::cerr << "warning: ignoring corrupt cache at " << path_ << "\n";
    }
  }

  std::optional<json> get(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return *it;
  }

  void put(const std::string& key, json value) {
    if (!enabled_) return;
    entries_[key] = std::move(value);
    dirty_ = true;
  }

  // temp-file-then-rename so readers never see a torn file
  void save() {
    if (!enabled_ || !dirty_) return;
    json j{{"schema_version", 1}, {"engine_version", vinc_version()}, {"entries", entries_}};
    const fs::path target(path_);
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) {
        std::cerr << "warning: cannot write cache at " << path_ << "\n";
        return;
      }
      out << j.dump();
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) std::cerr << "warning: cache rename failed: " << ec.message() << "\n";
  }

 private:
  std::string path_;
  bool enabled_ = false;
  bool dirty_ = false;
  json entries_ = json::object();
};

std::string canonical_pattern(const std::string& text) {
  vinc_pattern* p = nullptr;
  check_api(vinc_pattern_parse(text.c_str(), &p));
  char buf[64];
  check_api(vinc_pattern_format(p, buf, sizeof buf));
  vinc_pattern_free(p);
  return buf;
}

std::uint64_t cached_count(Cache& cache, const Options& opt, const std::string& pattern, int n) {
  const std::string key = canonical_pattern(pattern) + "|" + std::to_string(n) + "|count";
  if (auto hit = cache.get(key)) return hit->get<std::uint64_t>();
  std::uint64_t c = 0;
  check_api(vinc_count(pattern.c_str(), n, opt.threads, &c));
  cache.put(key, c);
  return c;
}

json cached_stat(Cache& cache, const Options& opt, const std::string& pattern, int n,
                 const std::string& kind) {
  const std::string key = canonical_pattern(pattern) + "|" + std::to_string(n) + "|" + kind;
  if (auto hit = cache.get(key)) return *hit;
  vinc_report* rep = nullptr;
  check_api(vinc_stat(pattern.c_str(), n, kind.c_str(), opt.threads, &rep));
  json j = json::parse(vinc_report_json(rep));
  vinc_report_free(rep);
  json entry{{"counts", j["counts"]}, {"total", j["total"]}};
  cache.put(key, entry);
  return entry;
}

class Emitter {
 public:
  Emitter(const Options& opt, std::string command)
      : opt_(opt), command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

  // JSON report to stdout (or the CSV rows), returns the exit code.
  int finish(bool pass, json parameters, json body, const std::vector<std::string>& csv_lines) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    if (opt_.format == "csv") {
      for (const auto& line : csv_lines) std::cout << line << "\n";
    } else {
      json report{{"command", command_},
                  {"parameters", std::move(parameters)},
                  {"verdict", pass ? "pass" : "fail"},
                  {"elapsed_ms", ms}};
      report.update(body);
      std::cout << report.dump(2) << "\n";
    }
    return pass ? kExitPass : kExitFail;
  }

 private:
  const Options& opt_;
  std::string command_;
  std::chrono::steady_clock::time_point start_;
};

json report_from_api(vinc_report* rep) {
  json j = json::parse(vinc_report_json(rep));
  vinc_report_free(rep);
  return j;
}

int cmd_count(const Options& opt, Cache& cache, const std::string& pattern, int n) {
  Emitter em(opt, "count");
  const std::uint64_t c = cached_count(cache, opt, pattern, n);
  return em.finish(true, json{{"pattern", pattern}, {"n", n}},
                   json{{"count", c}},
                   {"pattern,n,count", pattern + "," + std::to_string(n) + "," + std::to_string(c)});
}

int cmd_stat(const Options& opt, Cache& cache, const std::string& pattern, int n,
             const std::string& kind) {
  Emitter em(opt, "stat");
  const json table = cached_stat(cache, opt, pattern, n, kind);
  std::vector<std::string> csv{"value,count"};
  for (const auto& [k, v] : table["counts"].items())
    csv.push_back("\"" + k + "\"," + v.dump());
  return em.finish(true, json{{"pattern", pattern}, {"n", n}, {"stat", kind}},
                   json{{"table", table}}, csv);
}

int cmd_equiv(const Options& opt, Cache& cache, const std::vector<std::string>& patterns,
              int n_max, const std::string& kind) {
  if (patterns.size() != 2) die_usage("equiv needs exactly two -p patterns");
  Emitter em(opt, "equiv");
  json rows = json::array();
  std::vector<std::string> csv{kind.empty() ? "n,count_a,count_b,agree"
                                            : "n,count_a,count_b,tables_agree,agree"};
  bool pass = true;
  json first_mismatch = nullptr;
  for (int n = 1; n <= n_max; ++n) {
    json row{{"n", n}};
    bool agree;
    std::uint64_t ca, cb;
    if (kind.empty()) {
      ca = cached_count(cache, opt, patterns[0], n);
      cb = cached_count(cache, opt, patterns[1], n);
      agree = ca == cb;
      row["count_a"] = ca;
      row["count_b"] = cb;
      row["agree"] = agree;
      csv.push_back(std::to_string(n) + "," + std::to_string(ca) + "," + std::to_string(cb) +
                    "," + (agree ? "true" : "false"));
    } else {
      const json ta = cached_stat(cache, opt, patterns[0], n, kind);
      const json tb = cached_stat(cache, opt, patterns[1], n, kind);
      ca = ta["total"].get<std::uint64_t>();
      cb = tb["total"].get<std::uint64_t>();
      const bool tables = ta["counts"] == tb["counts"];
      agree = tables && ca == cb;
      row["count_a"] = ca;
      row["count_b"] = cb;
      row["tables_agree"] = tables;
      row["agree"] = agree;
      csv.push_back(std::to_string(n) + "," + std::to_string(ca) + "," + std::to_string(cb) +
                    "," + (tables ? "true" : "false") + "," + (agree ? "true" : "false"));
    }
    if (!agree && pass) {
      pass = false;
      first_mismatch = n;
    }
    rows.push_back(std::move(row));
  }
  json params{{"patterns", patterns}, {"n_max", n_max}};
  if (!kind.empty()) params["stat"] = kind;
  return em.finish(pass, params, json{{"rows", rows}, {"first_mismatch_n", first_mismatch}}, csv);
}

int cmd_classify(const Options& opt, Cache& cache, const std::string& file, int n_max) {
  std::ifstream in(file);
  if (!in) die_usage("cannot open pattern file '" + file + "'");
  std::vector<std::string> patterns;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.empty() || line[0] == '#') continue;
    patterns.push_back(line);
  }
  if (patterns.empty()) die_usage("pattern file is empty");
  Emitter em(opt, "classify");
  std::map<std::vector<std::uint64_t>, std::vector<std::string>> groups;
  for (const auto& p : patterns) {
    std::vector<std::uint64_t> counts;
    for (int n = 1; n <= n_max; ++n) counts.push_back(cached_count(cache, opt, p, n));
    groups[counts].push_back(p);
  }
  json classes = json::array();
  std::vector<std::string> csv{"class,pattern"};
  int idx = 0;
  for (auto& [counts, members] : groups) {
    std::sort(members.begin(), members.end());
    classes.push_back(json{{"patterns", members}, {"counts", counts}});
    for (const auto& m : members) csv.push_back(std::to_string(idx) + "," + m);
    ++idx;
  }
  return em.finish(true, json{{"file", file}, {"n_max", n_max}, {"patterns", patterns}},
                   json{{"classes", classes}}, csv);
}

int cmd_bijection(const Options& opt, const std::string& name, int n) {
  Emitter em(opt, "bijection");
  vinc_report* rep = nullptr;
  check_api(vinc_bijection(name.c_str(), n, &rep));
  const bool pass = vinc_report_passed(rep) != 0;
  json body = report_from_api(rep);
  std::vector<std::string> csv{"map,n,domain_size,codomain_size,pass"};
  csv.push_back(name + "," + std::to_string(n) + "," + body["domain_size"].dump() + "," +
                body["codomain_size"].dump() + "," + (pass ? "true" : "false"));
  return em.finish(pass, json{{"map", name}, {"n", n}}, json{{"report", body}}, csv);
}

int cmd_series(const Options& opt, const std::string& family, int order, bool check_bf) {
  Emitter em(opt, "series");
  vinc_report* rep = nullptr;
  check_api(vinc_series(family.c_str(), order, check_bf ? 1 : 0, opt.threads, &rep));
  const bool pass = vinc_report_passed(rep) != 0;
  json body = report_from_api(rep);
  std::vector<std::string> csv{"n,a,coeff"};
  for (const auto& row : body["F"])
    csv.push_back(row["n"].dump() + "," + row["a"].dump() + "," + row["coeff"].dump());
  return em.finish(pass, json{{"family", family}, {"N", order}, {"check_bruteforce", check_bf}},
                   json{{"report", body}}, csv);
}

int cmd_revdel(const Options& opt, const std::string& pattern, const std::string& prefix,
               const std::vector<int>& set, int n_max) {
  Emitter em(opt, "revdel");
  vinc_report* rep = nullptr;
  check_api(vinc_revdel(pattern.c_str(), prefix.c_str(), set.data(), set.size(), n_max, &rep));
  const bool pass = vinc_report_passed(rep) != 0;
  json body = report_from_api(rep);
  std::string set_str;
  for (size_t i = 0; i < set.size(); ++i) set_str += (i ? " " : "") + std::to_string(set[i]);
  std::vector<std::string> csv{"pattern,prefix,set,n_max,certified"};
  csv.push_back(pattern + "," + prefix + "," + set_str + "," + std::to_string(n_max) + "," +
                (pass ? "true" : "false"));
  return em.finish(pass,
                   json{{"pattern", pattern}, {"prefix", prefix}, {"set", set}, {"n_max", n_max}},
                   json{{"report", body}}, csv);
}

int cmd_barred(const Options& opt, const std::string& vpat, const std::string& bpat, int n_max) {
  Emitter em(opt, "barred");
  vinc_report* rep = nullptr;
  check_api(vinc_barred(vpat.c_str(), bpat.c_str(), n_max, &rep));
  const bool pass = vinc_report_passed(rep) != 0;
  json body = report_from_api(rep);
  std::vector<std::string> csv{"vincular,barred,n_max,equal"};
  csv.push_back(vpat + "," + bpat + "," + std::to_string(n_max) + "," + (pass ? "true" : "false"));
  return em.finish(pass, json{{"vincular", vpat}, {"barred", bpat}, {"n_max", n_max}},
                   json{{"report", body}}, csv);
}

int cmd_conjecture(const Options& opt, int n_max) {
  Emitter em(opt, "conjecture");
  vinc_report* rep = nullptr;
  check_api(vinc_conjecture(n_max, opt.threads, &rep));
  const bool pass = vinc_report_passed(rep) != 0;
  json body = report_from_api(rep);
  std::vector<std::string> csv{"pattern_a,pattern_b,n,count_a,count_b,agree"};
  for (const auto& part : body["parts"])
    for (const auto& row : part["rows"])
      csv.push_back(part["pattern_a"].get<std::string>() + "," +
                    part["pattern_b"].get<std::string>() + "," + row["n"].dump() + "," +
                    row["count_a"].dump() + "," + row["count_b"].dump() + "," +
                    (row["counts_agree"].get<bool>() ? "true" : "false"));
  return em.finish(pass, json{{"n_max", n_max}}, json{{"report", body}}, csv);
}

int cmd_suite(const Options& opt) {
  Emitter em(opt, "suite");
  vinc_report* rep = nullptr;
  check_api(vinc_suite(opt.threads, &rep));
  const bool pass = vinc_report_passed(rep) != 0;
  json body = report_from_api(rep);
  std::vector<std::string> csv{"id,name,pass"};
  for (const auto& c : body["criteria"])
    csv.push_back(c["id"].dump() + "," + c["name"].get<std::string>() + "," +
                  (c["pass"].get<bool>() ? "true" : "false"));
  return em.finish(pass, json::object(), json{{"report", body}}, csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vincular pattern toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  if (const char* env = std::getenv("VINC_CACHE")) opt.cache_path = env;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache", opt.cache_path, "Count cache file (also via VINC_CACHE)");
  app.add_option("--threads", opt.threads, "Worker threads (also via THREADS; 0 = auto)");

  std::vector<std::string> patterns;
  std::string stat_kind, map_name, family, prefix, file, vpat, bpat;
  std::vector<int> del_set;
  int n = 0, order = 8;
  bool check_bf = false;

  auto* count = app.add_subcommand("count", "Count avoiders of a pattern");
  count->add_option("-p,--pattern", patterns, "Pattern")->required();
  count->add_option("-n", n, "Length")->required()->check(CLI::NonNegativeNumber);

  auto* stat = app.add_subcommand("stat", "Statistic distribution over avoiders");
  stat->add_option("-p,--pattern", patterns, "Pattern")->required();
  stat->add_option("-n", n, "Length")->required()->check(CLI::PositiveNumber);
  stat->add_option("-s,--stat", stat_kind, "Statistic kind")->required();

  auto* equiv = app.add_subcommand("equiv", "Check Wilf-equivalence of two patterns");
  equiv->add_option("-p,--pattern", patterns, "Patterns (exactly two)")->required();
  equiv->add_option("-n", n, "Max length")->required()->check(CLI::PositiveNumber);
  equiv->add_option("-s,--stat", stat_kind, "Also compare this statistic's tables");

  auto* classify = app.add_subcommand("classify", "Partition a pattern list into Wilf classes");
  classify->add_option("-f,--file", file, "File with one pattern per line")->required();
  classify->add_option("-n", n, "Max length")->required()->check(CLI::PositiveNumber);

  auto* bijection = app.add_subcommand("bijection", "Verify a named bijection exhaustively");
  bijection->add_option("-m,--map", map_name, "f-1423 | block-1342 | slide-3124 | g-4123")
      ->required();
  bijection->add_option("-n", n, "Length")->required()->check(CLI::PositiveNumber);

  auto* series = app.add_subcommand("series", "Solve a family's functional-equation system");
  series->add_option("-F,--family", family, "F1_124_134 | F2_132_142 | F3_231_241")->required();
  series->add_option("-N,--order", order, "Truncation order")->required()->check(CLI::Range(1, 30));
  series->add_flag("--check-bruteforce", check_bf, "Compare against enumeration");

  auto* revdel = app.add_subcommand("revdel", "Certify a reversibly deletable set");
  revdel->add_option("-p,--pattern", patterns, "Pattern")->required();
  revdel->add_option("--prefix", prefix, "Prefix pattern, e.g. 132")->required();
  revdel->add_option("--set", del_set, "Deletion positions, e.g. 1,2")->required()->delimiter(',');
  revdel->add_option("-n", n, "Max length")->required()->check(CLI::PositiveNumber);

  auto* barred = app.add_subcommand("barred", "Check a vincular/barred set coincidence");
  barred->add_option("-v,--vincular", vpat, "Vincular pattern")->required();
  barred->add_option("-b,--barred", bpat, "Barred pattern")->required();
  barred->add_option("-n", n, "Max length")->required()->check(CLI::PositiveNumber);

  auto* conjecture = app.add_subcommand("conjecture", "Check both parts of the open conjecture");
  conjecture->add_option("-n", n, "Max length")->required()->check(CLI::PositiveNumber);

  app.add_subcommand("suite", "Run the full verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Cache cache(opt.cache_path);
  int rc = kExitUsage;
  if (count->parsed()) {
    if (patterns.size() != 1) die_usage("count takes one pattern");
    rc = cmd_count(opt, cache, patterns[0], n);
  } else if (stat->parsed()) {
    if (patterns.size() != 1) die_usage("stat takes one pattern");
    rc = cmd_stat(opt, cache, patterns[0], n, stat_kind);
  } else if (equiv->parsed()) {
    rc = cmd_equiv(opt, cache, patterns, n, stat_kind);
  } else if (classify->parsed()) {
    rc = cmd_classify(opt, cache, file, n);
  } else if (bijection->parsed()) {
    rc = cmd_bijection(opt, map_name, n);
  } else if (series->parsed()) {
    rc = cmd_series(opt, family, order, check_bf);
  } else if (revdel->parsed()) {
    if (patterns.size() != 1) die_usage("revdel takes one pattern");
    rc = cmd_revdel(opt, patterns[0], prefix, del_set, n);
  } else if (barred->parsed()) {
    rc = cmd_barred(opt, vpat, bpat, n);
  } else if (conjecture->parsed()) {
    rc = cmd_conjecture(opt, n);
  } else {
    rc = cmd_suite(opt);
  }
  cache.save();
  return rc;
}
