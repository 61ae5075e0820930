// Command line driver: surveys of the rank fiber map, the verification
// suite, witness emission, and saturation tables, with optional result
// caching keyed by (command, parameters, seed, tool version).
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 cache or I/O error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ltc/serialize.hpp"

namespace {

using ltc::json;

struct RunConfig {
  std::string command;
  int n = 0;
  int m = -1; // -1: not given
  int k = -1; // -1: not given
  int maxN = 5;
  bool grid = false;
  std::uint64_t seed = 0;
  int trials = 4;
  std::string format = "text";
  std::string cacheDir;
  bool noCache = false;
};

struct RunResult {
  int exitCode = 0;
  std::string output;
};

// ---------------------------------------------------------------- survey

std::string survey_text(int n, std::uint64_t seed, int trials,
                        const std::vector<ltc::FiberEntry>& entries,
                        const ltc::GeoCheck& geo) {
  std::ostringstream os;
  os << "# survey n=" << n << " seed=" << seed << " trials=" << trials << "\n";
  os << "w  k  cell  ltcFlag\n";
  for (const ltc::FiberEntry& e : entries)
    os << e.w.to_string() << "  " << e.k << "  " << e.cell << "  "
       << ltc::to_string(e.ltcFlag) << "\n";
  os << "fiber sizes (k: observed predicted):\n";
  for (const auto& row : geo.rows)
    os << "k=" << row[0] << ": " << row[1] << " " << row[2] << "\n";
  os << "agreement: " << (geo.ok ? "yes" : "no") << "\n";
  os << "rank error bound: " << ltc::detail::sz_bound(1LL << n, n, trials) << "\n";
  return os.str();
}

RunResult run_survey(const RunConfig& cfg) {
  ltc::SurveyReport report = ltc::make_survey(cfg.n, cfg.seed, cfg.trials);
  RunResult res;
  if (cfg.format == "csv") {
    res.output = ltc::fiber_entries_to_csv(report.entries);
  } else if (cfg.format == "json") {
    res.output = ltc::survey_to_json(report).dump(2) + "\n";
  } else {
    res.output = survey_text(report.n, report.seed, report.trials,
                             report.entries, report.geo);
  }
  return res;
}

// ---------------------------------------------------------------- verify

std::string verify_text(const ltc::VerificationReport& report,
                        const ltc::VerifyOptions& opt) {
  std::ostringstream os;
  os << "# verify maxN=" << opt.maxN << " gridMaxN=" << opt.gridMaxN
     << " seed=" << opt.seed << " trials=" << opt.trials << "\n";
  for (const ltc::CheckRecord& rec : report.records) {
    os << (rec.pass ? "PASS" : "FAIL") << " " << rec.id << " [" << rec.params
       << "] " << rec.statement << " -- " << rec.details;
    if (!rec.errorBound.empty()) os << "; error bound " << rec.errorBound;
    os << "\n";
  }
  os << "overall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string verify_csv(const ltc::VerificationReport& report) {
  std::string out = "id,status,params,details,errorBound\n";
  for (const ltc::CheckRecord& rec : report.records)
    out += ltc::csv_escape(rec.id) + "," + (rec.pass ? "pass" : "fail") + "," +
           ltc::csv_escape(rec.params) + "," + ltc::csv_escape(rec.details) +
           "," + ltc::csv_escape(rec.errorBound) + "\n";
  return out;
}

RunResult run_verify(const RunConfig& cfg) {
  ltc::VerifyOptions opt;
  opt.maxN = cfg.maxN;
  opt.seed = cfg.seed;
  opt.trials = cfg.trials;
  auto report = ltc::run_verification(opt);
  RunResult res;
  res.exitCode = report.overall() ? 0 : 1;
  if (cfg.format == "csv")
    res.output = verify_csv(report);
  else if (cfg.format == "json")
    res.output = ltc::verification_to_json(report, opt).dump(2) + "\n";
  else
    res.output = verify_text(report, opt);
  return res;
}

// ------------------------------------------------------------- witnesses

std::string witnesses_text(int n, int m,
                           const std::vector<ltc::WitnessRecord>& records,
                           std::uint64_t seed, int trials) {
  std::ostringstream os;
  os << "# witnesses n=" << n << " m=" << m << " seed=" << seed
     << " trials=" << trials << "\n";
  for (const ltc::WitnessRecord& rec : records)
    os << "j=" << rec.j << " sigma=" << rec.sigma.to_string()
       << " w=" << rec.w.to_string() << " wInverse=" << rec.wInverse.to_string()
       << " leviRank=" << rec.leviRank << " ambientRank=" << rec.ambientRank
       << " reducibleLTC=asserted reducibleAVcategoryO=asserted\n";
  os << "total: " << records.size() << "\n";
  return os.str();
}

std::string subregular_text(int n, const std::vector<ltc::FiberEntry>& entries,
                            std::uint64_t seed, int trials) {
  std::ostringstream os;
  os << "# witnesses n=" << n << " subregularRank=" << n - 1 << " seed=" << seed
     << " trials=" << trials << "\n";
  for (const ltc::FiberEntry& e : entries)
    os << "w=" << e.w.to_string() << " k=" << e.k << " cell=" << e.cell
       << " ltcFlag=" << ltc::to_string(e.ltcFlag)
       << " reducibleCC=asserted\n";
  os << "total: " << entries.size() << "\n";
  return os.str();
}

RunResult run_witnesses(const RunConfig& cfg) {
  RunResult res;
  if (cfg.m >= 0) {
    auto records = ltc::generate_witnesses(cfg.n, cfg.m, cfg.seed, cfg.trials);
    if (cfg.format == "csv") {
      res.output = "n,m,j,sigma,w,wInverse,leviRank,ambientRank\n";
      for (const auto& rec : records)
        res.output += std::to_string(rec.n) + "," + std::to_string(rec.m) + "," +
                      std::to_string(rec.j) + "," +
                      ltc::csv_escape(rec.sigma.to_string()) + "," +
                      ltc::csv_escape(rec.w.to_string()) + "," +
                      ltc::csv_escape(rec.wInverse.to_string()) + "," +
                      std::to_string(rec.leviRank) + "," +
                      std::to_string(rec.ambientRank) + "\n";
    } else if (cfg.format == "json") {
      res.output =
          ltc::witnesses_to_json(cfg.n, cfg.m, records, cfg.seed, cfg.trials)
              .dump(2) +
          "\n";
    } else {
      res.output = witnesses_text(cfg.n, cfg.m, records, cfg.seed, cfg.trials);
    }
  } else {
    auto entries = ltc::reducible_cc_witnesses(cfg.n, cfg.seed, cfg.trials);
    if (cfg.format == "csv") {
      res.output = ltc::fiber_entries_to_csv(entries);
    } else if (cfg.format == "json") {
      res.output = ltc::subregular_witnesses_to_json(cfg.n, entries, cfg.seed,
                                                     cfg.trials)
                       .dump(2) +
                   "\n";
    } else {
      res.output = subregular_text(cfg.n, entries, cfg.seed, cfg.trials);
    }
  }
  return res;
}

// -------------------------------------------------------------- saturate

RunResult run_saturate(const RunConfig& cfg) {
  std::vector<ltc::SaturationResult> rows;
  long long stream = 0;
  auto add = [&](int n, int m, int k) {
    rows.push_back(ltc::saturation_generic(
        n, m, k, ltc::rng_stream(cfg.seed, static_cast<std::uint64_t>(stream++))(),
        cfg.trials));
  };
  if (cfg.grid) {
    for (int n = 1; n <= cfg.maxN; ++n)
      for (int m = 0; m < n; ++m)
        for (int k = 0; k <= m; ++k) add(n, m, k);
  } else if (cfg.k >= 0) {
    add(cfg.n, cfg.m, cfg.k);
  } else {
    for (int k = 0; k <= cfg.m; ++k) add(cfg.n, cfg.m, k);
  }

  bool all_agree = true;
  for (const auto& r : rows) all_agree = all_agree && r.agrees();

  RunResult res;
  if (cfg.format == "csv") {
    res.output = "n,m,k,predicted,generic,witness,agree\n";
    for (const auto& r : rows)
      res.output += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                    std::to_string(r.k) + "," + std::to_string(r.predictedRank) +
                    "," + std::to_string(r.genericRank) + "," +
                    std::to_string(r.witnessRank) + "," +
                    (r.agrees() ? "yes" : "no") + "\n";
  } else if (cfg.format == "json") {
    res.output = ltc::saturation_results_to_json(rows, cfg.seed, cfg.trials)
                     .dump(2) +
                 "\n";
  } else {
    std::ostringstream os;
    os << "# saturate";
    if (cfg.grid)
      os << " grid maxN=" << cfg.maxN;
    else
      os << " n=" << cfg.n << " m=" << cfg.m;
    os << " seed=" << cfg.seed << " trials=" << cfg.trials << "\n";
    os << "n m k predicted generic witness agree\n";
    for (const auto& r : rows)
      os << r.n << " " << r.m << " " << r.k << " " << r.predictedRank << " "
         << r.genericRank << " " << r.witnessRank << " "
         << (r.agrees() ? "yes" : "no") << "\n";
    os << "all rows agree: " << (all_agree ? "yes" : "no") << "\n";
    res.output = os.str();
  }
  res.exitCode = all_agree ? 0 : 1;
  return res;
}

// ----------------------------------------------------------------- cache

std::string cache_key(const RunConfig& cfg) {
  std::ostringstream os;
  os << cfg.command;
  if (cfg.command == "survey") os << "_n" << cfg.n;
  if (cfg.command == "verify") os << "_maxn" << cfg.maxN;
  if (cfg.command == "witnesses") {
    os << "_n" << cfg.n;
    if (cfg.m >= 0) os << "_m" << cfg.m;
  }
  if (cfg.command == "saturate") {
    if (cfg.grid)
      os << "_grid_maxn" << cfg.maxN;
    else {
      os << "_n" << cfg.n << "_m" << cfg.m;
      if (cfg.k >= 0) os << "_k" << cfg.k;
    }
  }
  os << "_seed" << cfg.seed << "_trials" << cfg.trials << "_" << cfg.format;
  return os.str();
}

std::optional<RunResult> cache_load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt; // miss
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    std::cerr << "error: corrupt cache file " << file << "\n";
    std::exit(3);
  }
  if (!j.contains("tool_version") || !j.contains("output") ||
      !j.contains("exit_code") || !j["output"].is_string() ||
      !j["exit_code"].is_number_integer()) {
    std::cerr << "error: corrupt cache file " << file << "\n";
    std::exit(3);
  }
  if (j["tool_version"] != ltc::kVersion) return std::nullopt; // stale
  RunResult res;
  res.exitCode = j["exit_code"].get<int>();
  res.output = j["output"].get<std::string>();
  return res;
}

void cache_store(const std::filesystem::path& file, const std::string& key,
                 const RunResult& res) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) {
    std::cerr << "error: cannot create cache directory " << file.parent_path()
              << "\n";
    std::exit(3);
  }
  json j;
  j["tool_version"] = ltc::kVersion;
  j["key"] = key;
  j["exit_code"] = res.exitCode;
  j["output"] = res.output;
  std::ofstream out(file);
  if (!out) {
    std::cerr << "error: cannot write cache file " << file << "\n";
    std::exit(3);
  }
  out << j.dump(2) << "\n";
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the highest weight Harish-Chandra "
               "parameters of Sp(2n,R): rank fiber surveys, cell sizes, "
               "saturation tables, and reducibility witnesses."};
  app.require_subcommand(1);

  RunConfig cfg;
  const char* env_cache = std::getenv("LTC_CACHE_DIR");
  if (env_cache != nullptr) cfg.cacheDir = env_cache;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed (default 0)");
    sub->add_option("--trials", cfg.trials, "rank samples per family (default 4)");
    sub->add_option("--format", cfg.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--cache-dir", cfg.cacheDir, "cache directory");
    sub->add_flag("--no-cache", cfg.noCache, "bypass the cache");
  };

  CLI::App* survey = app.add_subcommand("survey", "rank fiber table for one n");
  survey->add_option("--n", cfg.n, "rank")->required();
  add_common(survey);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--max-n", cfg.maxN, "exhaustive scan bound (default 5)");
  add_common(verify);

  CLI::App* witnesses =
      app.add_subcommand("witnesses", "emit reducibility witnesses");
  witnesses->add_option("--n", cfg.n, "ambient rank")->required();
  witnesses->add_option("--m", cfg.m, "Levi rank (omit for subregular list)");
  add_common(witnesses);

  CLI::App* saturate = app.add_subcommand("saturate", "saturation rank table");
  saturate->add_option("--n", cfg.n, "ambient rank");
  saturate->add_option("--m", cfg.m, "Levi rank");
  saturate->add_option("--k", cfg.k, "Levi orbit rank (omit for all k)");
  saturate->add_flag("--grid", cfg.grid, "sweep the full (n,m,k) grid");
  saturate->add_option("--max-n", cfg.maxN, "grid bound (default 5, max 8)");
  add_common(saturate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.trials < 1) return usage_error("--trials must be >= 1");

  RunResult (*runner)(const RunConfig&) = nullptr;
  if (survey->parsed()) {
    cfg.command = "survey";
    if (cfg.n < 1 || cfg.n > 10) return usage_error("survey: need 1 <= n <= 10");
    runner = run_survey;
  } else if (verify->parsed()) {
    cfg.command = "verify";
    if (cfg.maxN < 1 || cfg.maxN > 7)
      return usage_error("verify: need 1 <= max-n <= 7");
    runner = run_verify;
  } else if (witnesses->parsed()) {
    cfg.command = "witnesses";
    if (cfg.m >= 0) {
      if (!(0 < cfg.m && cfg.m < cfg.n && cfg.n <= 8))
        return usage_error("witnesses: need 0 < m < n <= 8");
    } else {
      if (!(cfg.n >= 2 && cfg.n <= 8 && cfg.n % 2 == 0))
        return usage_error("witnesses: without --m, n must be even, 2 <= n <= 8");
    }
    runner = run_witnesses;
  } else if (saturate->parsed()) {
    cfg.command = "saturate";
    if (cfg.grid) {
      if (cfg.maxN < 1 || cfg.maxN > 8)
        return usage_error("saturate: need 1 <= max-n <= 8 with --grid");
    } else {
      if (!(0 <= cfg.m && cfg.m < cfg.n && cfg.n <= 8))
        return usage_error("saturate: need 0 <= m < n <= 8");
      if (cfg.k >= 0 && cfg.k > cfg.m)
        return usage_error("saturate: need 0 <= k <= m");
    }
    runner = run_saturate;
  }

  const bool use_cache = !cfg.noCache && !cfg.cacheDir.empty();
  std::filesystem::path cache_file;
  if (use_cache) {
    cache_file = std::filesystem::path(cfg.cacheDir) / (cache_key(cfg) + ".json");
    if (auto hit = cache_load(cache_file)) {
      std::cout << hit->output;
      return hit->exitCode;
    }
  }

  RunResult res;
  try {
    res = runner(cfg);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }

  if (use_cache) cache_store(cache_file, cache_key(cfg), res);
  std::cout << res.output;
  return res.exitCode;
}
