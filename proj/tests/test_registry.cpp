#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cumres/registry.hpp"

using namespace cumres;

TEST_CASE("registry shape") {
  REQUIRE(registry_ids(true).size() == 25);
  REQUIRE(registry().size() >= 25);
  REQUIRE_NOTHROW(registry_entry("P2.1"));
  REQUIRE_THROWS_AS(registry_entry("no-such-id"), std::invalid_argument);
}

TEST_CASE("single propositions run and report") {
  std::mt19937_64 rng(42);
  auto reports = run_proposition("PH", rng);
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    REQUIRE_FALSE(r.proposition_id.empty());
    if (r.precondition_ok) REQUIRE(r.passed);
  }
}

TEST_CASE("sweeps are deterministic in the seed") {
  auto a = randomized_sweep({"P2.1", "T2.2"}, 4, 9);
  auto b = randomized_sweep({"P2.1", "T2.2"}, 4, 9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    REQUIRE(report_to_json(a[i]) == report_to_json(b[i]));
  auto c = randomized_sweep({"P2.1", "T2.2"}, 4, 10);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size() && i < c.size(); ++i)
    any_diff = any_diff || report_to_json(a[i]) != report_to_json(c[i]);
  REQUIRE(any_diff);
}

TEST_CASE("short sweep over the whole counted registry is clean") {
  auto reports = randomized_sweep(registry_ids(true), 3, 1);
  int failures = 0;
  for (const auto& r : reports)
    if (r.precondition_ok && !r.passed) ++failures;
  REQUIRE(failures == 0);
}

TEST_CASE("trial labels carry the trial index") {
  auto reports = randomized_sweep({"LT"}, 2, 5);
  bool saw0 = false, saw1 = false;
  for (const auto& r : reports) {
    saw0 = saw0 || r.inputs.find(";trial=0") != std::string::npos;
    saw1 = saw1 || r.inputs.find(";trial=1") != std::string::npos;
  }
  REQUIRE(saw0);
  REQUIRE(saw1);
}
