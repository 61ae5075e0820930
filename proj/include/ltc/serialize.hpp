#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ltc/cells.hpp"
#include "ltc/induction.hpp"
#include "ltc/verification.hpp"
#include "ltc/version.hpp"

namespace ltc {

using json = nlohmann::ordered_json;

/// RFC 4180 quoting: fields containing comma, quote, or newline are
/// wrapped in quotes with embedded quotes doubled.
inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string fiber_entries_to_csv(const std::vector<FiberEntry>& entries) {
  std::string out = "w,k,cell,ltcFlag\n";
  for (const FiberEntry& e : entries) {
    out += csv_escape(e.w.to_string()) + "," + std::to_string(e.k) + "," +
           e.cell + "," + to_string(e.ltcFlag) + "\n";
  }
  return out;
}

inline json fiber_entry_to_json(const FiberEntry& e) {
  json j;
  j["w"] = e.w.to_string();
  j["rootset"] = e.rootset.to_string();
  j["k"] = e.k;
  j["cell"] = e.cell;
  j["ltcFlag"] = to_string(e.ltcFlag);
  return j;
}

inline json survey_to_json(const SurveyReport& report) {
  json j;
  j["command"] = "survey";
  j["tool_version"] = kVersion;
  j["n"] = report.n;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["entries"] = json::array();
  for (const FiberEntry& e : report.entries)
    j["entries"].push_back(fiber_entry_to_json(e));
  j["fibers"] = json::array();
  for (const auto& row : report.geo.rows) {
    json r;
    r["k"] = row[0];
    r["observed"] = row[1];
    r["predicted"] = row[2];
    j["fibers"].push_back(r);
  }
  j["agreement"] = report.geo.ok;
  j["rank_error_bound"] = detail::sz_bound(1LL << report.n, report.n, report.trials);
  return j;
}

inline json cell_report_to_json(const CellReport& report) {
  json j;
  j["n"] = report.n;
  j["cells"] = json::array();
  for (const CellInfo& cell : report.cells) {
    json c;
    c["cellId"] = cell.cellId;
    c["memberRanks"] = cell.memberRanks;
    c["observedSize"] = cell.observedSize;
    c["predictedSize"] = cell.predictedSize;
    j["cells"].push_back(c);
  }
  return j;
}

inline json witness_record_to_json(const WitnessRecord& rec) {
  json j;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["j"] = rec.j;
  j["sigma"] = rec.sigma.to_string();
  j["w"] = rec.w.to_string();
  j["wInverse"] = rec.wInverse.to_string();
  j["verified"] = {
      {"leviRank", rec.leviRank},
      {"ambientRank", rec.ambientRank},
      {"saturationPredicted", saturation_predicted(rec.n, rec.m, rec.leviRank)},
      {"wDominant", is_c_dominant(negate(act(rec.w, rho(rec.n))))},
  };
  j["asserted"] = {
      {"reducibleLTC", rec.reducibleLTC},
      {"reducibleAVcategoryO", rec.reducibleAVcategoryO},
  };
  return j;
}

inline json witnesses_to_json(int n, int m,
                              const std::vector<WitnessRecord>& records,
                              std::uint64_t seed, int trials) {
  json j;
  j["command"] = "witnesses";
  j["tool_version"] = kVersion;
  j["n"] = n;
  j["m"] = m;
  j["seed"] = seed;
  j["trials"] = trials;
  j["records"] = json::array();
  for (const WitnessRecord& rec : records)
    j["records"].push_back(witness_record_to_json(rec));
  return j;
}

inline json subregular_witnesses_to_json(int n,
                                         const std::vector<FiberEntry>& entries,
                                         std::uint64_t seed, int trials) {
  json j;
  j["command"] = "witnesses";
  j["tool_version"] = kVersion;
  j["n"] = n;
  j["seed"] = seed;
  j["trials"] = trials;
  j["subregularRank"] = n - 1;
  j["records"] = json::array();
  for (const FiberEntry& e : entries) {
    json r = fiber_entry_to_json(e);
    r["asserted"] = {{"reducibleCharacteristicCycle", true}};
    j["records"].push_back(r);
  }
  return j;
}

inline json saturation_results_to_json(const std::vector<SaturationResult>& rows,
                                       std::uint64_t seed, int trials) {
  json j;
  j["command"] = "saturate";
  j["tool_version"] = kVersion;
  j["seed"] = seed;
  j["trials"] = trials;
  j["rows"] = json::array();
  for (const SaturationResult& r : rows) {
    json row;
    row["n"] = r.n;
    row["m"] = r.m;
    row["k"] = r.k;
    row["predicted"] = r.predictedRank;
    row["generic"] = r.genericRank;
    row["witness"] = r.witnessRank;
    row["agree"] = r.agrees();
    j["rows"].push_back(row);
  }
  return j;
}

inline json verification_to_json(const VerificationReport& report,
                                 const VerifyOptions& opt) {
  json j;
  j["command"] = "verify";
  j["tool_version"] = kVersion;
  j["maxN"] = opt.maxN;
  j["gridMaxN"] = opt.gridMaxN;
  j["seed"] = opt.seed;
  j["trials"] = opt.trials;
  j["checks"] = json::array();
  for (const CheckRecord& rec : report.records) {
    json c;
    c["id"] = rec.id;
    c["statement"] = rec.statement;
    c["params"] = rec.params;
    c["status"] = rec.pass ? "pass" : "fail";
    c["details"] = rec.details;
    if (!rec.errorBound.empty()) c["errorBound"] = rec.errorBound;
    j["checks"].push_back(c);
  }
  j["overall"] = report.overall() ? "pass" : "fail";
  return j;
}

} // namespace ltc
