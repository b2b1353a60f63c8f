#include "doctest.h"

#include "omega/checks/suites.hpp"

#include <json.hpp>

using namespace omega::checks;

TEST_CASE("suite registry") {
  CHECK(suite_list().size() == 7);
  CHECK(suite_names() == "field-axioms, matrix-shrink, reduced-power, rd-lemmas, abelian-sin, order, uniformity");
  try {
    run_suite("nonexistent", 1);
    FAIL("expected UnknownSuite");
  } catch (const UnknownSuite& e) {
    CHECK(std::string(e.what()).find("reduced-power") != std::string::npos);
  }
  CHECK_THROWS_AS(run_suite("order", 1, 0), std::invalid_argument);
}

TEST_CASE("same seed, same bytes; other seed, other cases") {
  const SuiteReport a = run_suite("reduced-power", 5);
  const SuiteReport b = run_suite("reduced-power", 5);
  const SuiteReport c = run_suite("reduced-power", 6);
  CHECK(a.passed());
  CHECK(reports_json({a}) == reports_json({b}));
  CHECK(reports_markdown({a}) == reports_markdown({b}));
  CHECK(a.digest != c.digest);
}

TEST_CASE("report serialization") {
  SuiteReport ok = make_report("zeta", 3);
  ok.record("one case");
  SuiteReport bad = make_report("alpha", 3, 2);
  bad.check(true, "fine", "unused");
  bad.check(false, "broken", "x=1 breaks it");
  bad.seconds = 1.5;

  const auto j = nlohmann::json::parse(reports_json({ok, bad}));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["suite"] == "alpha");  // sorted by name
  CHECK(j[1]["failures"].is_array());
  CHECK(j[1]["failures"].empty());
  CHECK(j[1]["passed"] == true);
  CHECK(j[0]["failures"] == nlohmann::json::array({"x=1 breaks it"}));
  CHECK(j[0]["reproduce"] == "omegalab suite alpha --seed 3 --scale 2");
  CHECK_FALSE(j[0].contains("seconds"));
  CHECK(nlohmann::json::parse(reports_json({bad}, true))[0]["seconds"] == 1.5);

  const std::string one = reports_markdown({ok});
  CHECK(one.find("| zeta | PASS | 1 | 0 | 3 |") != std::string::npos);
  CHECK(one.find("Reproduce") == std::string::npos);
  const std::string mixed = reports_markdown({ok, bad});
  CHECK(mixed.find("| alpha | FAIL | 2 | 1 | 3 |") != std::string::npos);
  CHECK(mixed.find("Reproduce with `omegalab suite alpha --seed 3 --scale 2`") != std::string::npos);
  CHECK(mixed.find("- x=1 breaks it") != std::string::npos);
}

TEST_CASE("failure lists are capped but counted") {
  SuiteReport r = make_report("many", 1);
  for (int k = 0; k < 30; ++k) r.check(false, "case", "repro " + std::to_string(k));
  CHECK(r.failure_count == 30);
  CHECK(r.failures.size() == SuiteReport::kMaxListed);
  CHECK(reports_markdown({r}).find("10 more") != std::string::npos);
}
