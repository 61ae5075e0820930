#include <catch2/catch_amalgamated.hpp>

#include "ltc/serialize.hpp"

using namespace ltc;

TEST_CASE("csv quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("[-1,+2]") == "\"[-1,+2]\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("a\nb") == "\"a\nb\"");
}

TEST_CASE("fiber csv has the documented header and quoted parameters") {
  auto entries = fiber_map(2);
  std::string csv = fiber_entries_to_csv(entries);
  CHECK(csv.rfind("w,k,cell,ltcFlag\n", 0) == 0);
  CHECK(csv.find("\"[-1,-2]\",0,C0,InLTC\n") != std::string::npos);
  CHECK(csv.find("\"[-1,+2]\",1,C2,NotInLTC\n") != std::string::npos);
}

TEST_CASE("survey json round trips with the documented fields") {
  json j = survey_to_json(make_survey(2, 3));
  // Round trip through text.
  json back = json::parse(j.dump(2));
  CHECK(back["command"] == "survey");
  CHECK(back["n"] == 2);
  CHECK(back["seed"] == 3);
  CHECK(back["agreement"] == true);
  REQUIRE(back["entries"].is_array());
  REQUIRE(back["entries"].size() == 4);
  for (const auto& e : back["entries"]) {
    CHECK(e.contains("w"));
    CHECK(e.contains("k"));
    CHECK(e.contains("cell"));
    CHECK(e.contains("ltcFlag"));
    CHECK(e["w"].is_string());
    CHECK(e["k"].is_number_integer());
    // Parameters parse back to group elements.
    CHECK(SignedPermutation::parse(e["w"].get<std::string>()).rank() == 2);
  }
  for (const auto& f : back["fibers"]) {
    CHECK(f["observed"] == f["predicted"]);
  }
}

TEST_CASE("witness json separates verified from asserted") {
  auto records = generate_witnesses(4, 2);
  json j = witnesses_to_json(4, 2, records, 0, 4);
  json back = json::parse(j.dump(2));
  REQUIRE(back["records"].size() == 1);
  const auto& rec = back["records"][0];
  CHECK(rec["verified"]["leviRank"] == 1);
  CHECK(rec["verified"]["ambientRank"] == 4);
  CHECK(rec["verified"]["saturationPredicted"] == 4);
  CHECK(rec["verified"]["wDominant"] == true);
  CHECK(rec["asserted"]["reducibleLTC"] == true);
  CHECK(rec["asserted"]["reducibleAVcategoryO"] == true);
  // sigma, w, wInverse are the textual group elements.
  auto w = SignedPermutation::parse(rec["w"].get<std::string>());
  auto winv = SignedPermutation::parse(rec["wInverse"].get<std::string>());
  CHECK(w.inverse() == winv);
}

TEST_CASE("saturation json carries agreement flags") {
  std::vector<SaturationResult> rows;
  for (int k = 0; k <= 3; ++k) rows.push_back(saturation_generic(4, 3, k));
  json back = json::parse(saturation_results_to_json(rows, 0, 4).dump(2));
  REQUIRE(back["rows"].size() == 4);
  std::vector<int> predicted;
  for (const auto& r : back["rows"]) {
    CHECK(r["agree"] == true);
    predicted.push_back(r["predicted"].get<int>());
  }
  CHECK(predicted == std::vector<int>{2, 3, 4, 4});
}

TEST_CASE("verification json overall status") {
  VerifyOptions opt;
  opt.maxN = 2;
  opt.gridMaxN = 3;
  opt.spqMaxN = 4;
  auto report = run_verification(opt);
  json back = json::parse(verification_to_json(report, opt).dump(2));
  CHECK(back["overall"] == "pass");
  REQUIRE(back["checks"].is_array());
  for (const auto& c : back["checks"]) {
    CHECK(c["status"] == "pass");
    CHECK(c.contains("id"));
    CHECK(c.contains("statement"));
    CHECK(c.contains("params"));
    CHECK(c.contains("details"));
  }
}
