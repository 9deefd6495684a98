#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "gitstab/report.hpp"
#include "support.hpp"

using namespace gitstab;
using testing_support::p112;

namespace {

const FixtureSet& fixtures() {
  static const auto fx = FixtureSet::load_default();
  return fx;
}

bool rationals_are_strings(const nlohmann::json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& child : j) if (!rationals_are_strings(child)) return false;
  return true;
}

}  // namespace

TEST_CASE("fixture set loads and knows its names") {
  const auto names = fixtures().polynomial_names();
  CHECK(std::find(names.begin(), names.end(), "luna-center") != names.end());
  CHECK(fixtures().lambdas(p112()).size() == 8);
  CHECK(fixtures().published_candidate_count(p112()).has_value());
  CHECK_THROWS_AS(fixtures().polynomial("nope"), FixtureError);
  CHECK_THROWS_AS(fixtures().named_support("Noplus:lambda99", p112()), FixtureError);
}

TEST_CASE("fixture root honours the environment") {
  const auto original = FixtureSet::default_root();
  const auto tmp = std::filesystem::temp_directory_path() / "gitstab-fixture-override";
  std::filesystem::remove_all(tmp);
  std::filesystem::create_directories(tmp);
  std::filesystem::copy(original, tmp, std::filesystem::copy_options::recursive);
  const std::string old = std::getenv("GITSTAB_FIXTURES") ? std::getenv("GITSTAB_FIXTURES") : "";
  ::setenv("GITSTAB_FIXTURES", tmp.c_str(), 1);
  CHECK(FixtureSet::default_root() == tmp);
  CHECK(FixtureSet::load_default().polynomial_names() == fixtures().polynomial_names());
  ::setenv("GITSTAB_FIXTURES", (tmp / "missing").c_str(), 1);
  CHECK_THROWS_AS(FixtureSet::load_default(), FixtureError);
  if (old.empty())
    ::unsetenv("GITSTAB_FIXTURES");
  else
    ::setenv("GITSTAB_FIXTURES", old.c_str(), 1);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("reports carry a schema version and pass") {
  const auto r = ops_report(p112(), &fixtures(), 2);
  CHECK(r.doc.at("schema_version") == kSchemaVersion);
  CHECK(r.doc.at("command") == "ops");
  CHECK(r.passed);
  CHECK(r.doc.at("candidate_count") == 556);
  CHECK(r.doc.at("maximal_classes").size() == 8);
  CHECK(rationals_are_strings(r.doc));
  CHECK(r.dump().back() == '\n');
}

TEST_CASE("failed checks flip the report") {
  Report r;
  r.doc["checks"] = nlohmann::json::array();
  r.check("fine", true);
  CHECK(r.passed);
  r.check("broken", false, "why");
  CHECK(!r.passed);
  CHECK(r.doc["checks"].size() == 2);
  CHECK(r.doc["checks"][1]["detail"] == "why");
}

TEST_CASE("ledger and lattice reports use rational strings") {
  const auto ledger = ledger_report();
  CHECK(ledger.passed);
  CHECK(rationals_are_strings(ledger.doc));
  for (const auto& e : ledger.doc.at("entries")) CHECK(e.at("computed").is_string());
  const auto lattice = lattice_report(LatticeRequest{}, 2);
  CHECK(lattice.passed);
  CHECK(rationals_are_strings(lattice.doc));
}

TEST_CASE("reports do not depend on the job count") {
  CHECK(ops_report(p112(), &fixtures(), 1).dump() == ops_report(p112(), &fixtures(), 3).dump());
  LatticeRequest lr;
  CHECK(lattice_report(lr, 1).dump() == lattice_report(lr, 3).dump());
  SingRequest sr;
  sr.fixture = &fixtures().polynomial("N0lambda2-conics");
  sr.names = sr.fixture->names;
  sr.pattern = "fixed";
  CHECK(sing_report(sr, &fixtures(), 1).dump() == sing_report(sr, &fixtures(), 3).dump());
  ClassifyRequest cr{p112(), VariableNames::defaults(p112()), fixtures().polynomial("luna-center").poly, {}, "luna", {}};
  CHECK(classify_report(cr, &fixtures(), 1).dump() == classify_report(cr, &fixtures(), 3).dump());
}

TEST_CASE("unknown requests are rejected") {
  LatticeRequest lr;
  lr.action = "bogus";
  CHECK_THROWS(lattice_report(lr, 1));
  SingRequest sr;
  sr.fixture = &fixtures().polynomial("N0lambda6-ones");
  sr.names = sr.fixture->names;
  sr.pattern = "nonexistent";
  CHECK_THROWS(sing_report(sr, &fixtures(), 1));
}
