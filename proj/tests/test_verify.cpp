#include <catch_amalgamated.hpp>

#include "colpart/verify.hpp"

using namespace colpart;

TEST_CASE("suite registry", "[verify]") {
  auto const names = verify::suite_names();
  CHECK(names.size() == 11);
  CHECK(names.front() == "worked-examples");
  CHECK_THROWS_AS(verify::run_suite("no-such-suite", {}), ParameterError);
}

TEST_CASE("quick suites pass", "[verify]") {
  for (auto const* name : {"worked-examples", "color-laws", "fixspace",
                           "glue2-shadow", "relations"}) {
    auto const r = verify::run_suite(name, {});
    INFO(r.to_text());
    CHECK(r.passed());
    CHECK(r.checks > 0);
  }
}

TEST_CASE("suite output is deterministic", "[verify]") {
  auto const a = verify::run_suite("color-laws", {});
  auto const b = verify::run_suite("color-laws", {});
  CHECK(a.to_text() == b.to_text());
  verify::SuiteOptions other;
  other.seed = 7;
  CHECK(verify::run_suite("color-laws", other).passed());
}
