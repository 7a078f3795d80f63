#include "lietools/report.hpp"

#include "doctest.h"
#include "lietools/errors.hpp"

using namespace lietools;
using nlohmann::json;

namespace {

Report sample(bool second_passes) {
  Report r;
  r.command = "sample";
  r.results.push_back(Record{"orbit-count", "nilpotent-orbit-count", {{"type", "A3"}}, {{"count", 5}}, true});
  r.results.push_back(Record{"verdict", "orbit-count", {{"G", "A3"}, {"R", "B2"}},
                             {{"summary", "B2 in A3: 5 > 4"}}, second_passes});
  return r;
}

}  // namespace

TEST_CASE("status") {
  CHECK(sample(true).status() == ReportStatus::Pass);
  CHECK(sample(false).status() == ReportStatus::Partial);
  Report empty;
  CHECK(empty.status() == ReportStatus::Fail);
  Report failing = sample(false);
  failing.results[0].pass = false;
  CHECK(failing.status() == ReportStatus::Fail);
}

TEST_CASE("json schema and round trip") {
  const Report r = sample(false);
  const json j = r.to_json();
  CHECK(j.at("version") == kToolVersion);
  CHECK(j.at("command") == "sample");
  CHECK(j.at("status") == "partial");
  REQUIRE(j.at("results").size() == 2);
  for (const auto& rec : j.at("results")) {
    CHECK(rec.contains("kind"));
    CHECK(rec.contains("anchor"));
    CHECK(rec.contains("inputs"));
    CHECK(rec.contains("outputs"));
    CHECK(rec.contains("pass"));
  }
  CHECK(Report::from_json(json::parse(j.dump())) == r);
}

TEST_CASE("malformed documents are rejected") {
  json j = sample(true).to_json();
  j["status"] = "fail";
  CHECK_THROWS_AS(Report::from_json(j), ParseError);
  json k = sample(true).to_json();
  k.erase("results");
  CHECK_THROWS_AS(Report::from_json(k), ParseError);
  CHECK_THROWS_AS(Report::from_json(json::array()), ParseError);
}

TEST_CASE("text format") {
  const std::string text = sample(false).to_text();
  CHECK(text.find("[PASS] orbit-count nilpotent-orbit-count: {\"count\":5}") != std::string::npos);
  CHECK(text.find("[FAIL] verdict orbit-count: B2 in A3: 5 > 4") != std::string::npos);
  CHECK(text.find("status: partial") != std::string::npos);
}
