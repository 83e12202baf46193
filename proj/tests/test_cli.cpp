#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "support/invariants.hpp"
#include "xcohom/cli.hpp"
#include "xcohom/json_io.hpp"

using namespace xcohom;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("fixtures subcommand lists the registry") {
  auto r = run({"fixtures"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["report"]["fixtures"].size() == 5);
  CHECK(j["report"]["fixtures"][0]["name"] == "XM_T22");
}

TEST_CASE("h2 on XM_A3 with pi C3 reports the weak count") {
  auto r = run({"h2", "--fixture", "XM_A3", "--pi", "C3", "--mode", "weak"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["report"]["count"] == 2);
  CHECK(j["report"]["thick_count"] == 3);
  CHECK(j["report"]["weak_count"] == 2);
}

TEST_CASE("obstruction --all on XM_OBS") {
  auto r = run({"obstruction", "--fixture", "XM_OBS", "--all"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  const auto& rows = j["report"]["rows"];
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["vanishes"] == true);
  CHECK(rows[1]["vanishes"] == false);
  CHECK(rows[2]["vanishes"] == true);
  CHECK(rows[3]["vanishes"] == false);
  CHECK(rows[1]["witness"].is_null());
  CHECK_FALSE(rows[2]["witness"].is_null());
}

TEST_CASE("model files load with builtin-equal digests") {
  auto obs = builtin_fixture("XM_OBS");
  std::string path = "xm_obs_tmp.json";
  std::ofstream(path) << exm_to_json(obs).dump();
  auto from_file = load_model(path);
  auto from_name = load_model("XM_OBS");
  std::remove(path.c_str());
  CHECK(from_file.digest == from_name.digest);
}

TEST_CASE("exit codes: parse, validation, budget") {
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"h1"}).code == 2);  // neither --fixture nor --model

  // malformed JSON
  std::string bad = "bad_json_tmp.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run({"validate", "--model", bad}).code == 2);
  std::remove(bad.c_str());

  // a model violating the Peiffer identity carries the witness through
  {
    // S3 -> C1 with trivial action: Peiffer fails with a non-commuting pair
    json j;
    j["M"] = group_to_json(symmetric3());
    j["L"] = group_to_json(cyclic_group(1));
    j["G"] = group_to_json(cyclic_group(1));
    j["boundary"] = std::vector<int>(6, 0);
    json row = json::array();
    for (int i = 0; i < 6; ++i) row.push_back(i);
    j["l_action"] = json::array({row});
    j["g_on_M"] = json::array({row});
    j["g_on_L"] = json::array({json::array({0})});
    std::string path = "peiffer_tmp.json";
    std::ofstream(path) << j.dump();
    auto r = run({"validate", "--model", path});
    std::remove(path.c_str());
    CHECK(r.code == 3);
    auto report = json::parse(r.out);
    CHECK(report["error"]["kind"] == "CM2Violation");
    REQUIRE(report["error"]["witness"].size() == 2);
    int n = report["error"]["witness"][0], m = report["error"]["witness"][1];
    auto s3 = symmetric3();
    CHECK(s3.conj(n, m) != m);
  }

  CHECK(run({"h2", "--fixture", "XM_A3", "--pi", "C3", "--max-search", "5"}).code == 4);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify-ext") != std::string::npos);
}

TEST_CASE("table format renders flattened rows") {
  auto r = run({"fixtures", "--format", "table"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("report.fixtures[0].name") != std::string::npos);
  CHECK(r.out.find("XM_T22") != std::string::npos);
}

TEST_CASE("h0 and bitorsors subcommands") {
  auto r = run({"h0", "--fixture", "XM_OBS"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["report"]["h0"]["count"] == 2);
  CHECK(j["report"]["h0_Q"]["count"] == 4);

  auto rb = run({"bitorsors", "--fixture", "XM_OBS"});
  REQUIRE(rb.code == 0);
  auto jb = json::parse(rb.out);
  CHECK(jb["report"]["count"] == 4);
  CHECK(jb["report"]["h1_count"] == 4);
  std::set<int> stars;
  for (const auto& cls : jb["report"]["classes"]) stars.insert(cls["pi_star"].get<int>());
  CHECK(stars == std::set<int>{0, 2});
}

TEST_CASE("bouquet-roundtrip emits groupoid serializations") {
  auto r = run({"bouquet-roundtrip", "--fixture", "XM_T22"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["report"]["count"] == 4);
  for (const auto& round : j["report"]["rounds"]) {
    CHECK(round["identical_extraction"] == true);
    CHECK(round["psi_weak_equivalence"] == true);
    CHECK(round["groupoid"]["objects"] == 2);
    CHECK(round["groupoid"]["homs"].size() == 8);
    CHECK(round["groupoid"].contains("compose"));
    CHECK(round["groupoid"]["action"].contains("morphisms"));
  }
}

TEST_CASE("max-search env variable mirrors the flag") {
  setenv("XCOHOM_MAX_SEARCH", "5", 1);
  auto r = run({"h2", "--fixture", "XM_A3", "--pi", "C3"});
  unsetenv("XCOHOM_MAX_SEARCH");
  CHECK(r.code == 4);
  auto j = json::parse(r.out);
  CHECK(j["error"]["kind"] == "BudgetExceeded");
}

TEST_CASE("pi accepts a group JSON file") {
  std::string path = "pi_c3_tmp.json";
  std::ofstream(path) << group_to_json(cyclic_group(3)).dump();
  auto r = run({"h2", "--fixture", "XM_A3", "--pi", path, "--mode", "weak"});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["report"]["count"] == 2);
}

TEST_CASE("classify-ext reports Cayley tables and censuses") {
  auto r = run({"classify-ext", "--fixture", "XM_A2", "--pi", "C2"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["report"]["count"] == 2);
  for (const auto& cls : j["report"]["classes"]) {
    CHECK(cls["B"]["order"] == 4);
    CHECK(cls.contains("order_census"));
    CHECK(cls["B"]["mul"].size() == 4);
  }
}

TEST_CASE("cli invariant suite") { CHECK(invariants::cli(nullptr) > 0); }
