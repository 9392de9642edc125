#include <doctest.h>

#include "splitcomp/coverage.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/verify.hpp"

using namespace splitcomp;

TEST_CASE("every asserting suite passes at small orders") {
  const auto results = run_suite("all", 5);
  CHECK(results.size() == 40);
  for (const auto& r : results) {
    INFO(r.to_json().dump());
    CHECK(r.asserting);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("suites exercise every classifier and map") {
  coverage::reset();
  for (const char* suite : {"roundtrip", "balance", "compilation", "choice", "counts"}) run_suite(suite, 4);
  for (int op = 0; op < static_cast<int>(coverage::Op::count_); ++op) {
    const auto o = static_cast<coverage::Op>(op);
    INFO(coverage::name(o));
    CHECK(coverage::hits(o) > 0);
  }
}

TEST_CASE("roundtrip on the shift pair") {
  const auto r = verify_roundtrip(parse_pair_name("xy-shift"), 5);
  CHECK(r.passed());
  CHECK(r.params["pair"] == "xy-shift");
}

TEST_CASE("count suite reports the table") {
  const auto r = verify_counts(6);
  CHECK(r.passed());
  const auto& table = r.details["table"];
  REQUIRE(table.size() == 7);
  CHECK(table[4]["split"] == 9);
  CHECK(table[6]["split_unbalanced"] == kUnbalancedSplitSequence[5]);
}

TEST_CASE("triangle is informational") {
  const auto r = verify_triangle(5);
  CHECK_FALSE(r.asserting);
  CHECK(r.passed());
  CHECK(r.details.contains("per_n"));
}

TEST_CASE("suite names") {
  CHECK(run_suite("counts", 3).size() == 1);
  CHECK(run_suite("triangle", 3).front().suite == "triangle");
  CHECK_THROWS_AS(run_suite("everything", 3), UsageError);
}

TEST_CASE("results serialize") {
  SuiteResult r;
  r.suite = "x";
  r.failures.push_back({"01", "line", "expected", "observed"});
  const auto j = r.to_json();
  CHECK(j["passed"] == false);
  CHECK(j["failures"][0]["expectation"] == "expected");
}

TEST_CASE("worker count does not change suite outcomes") {
  const auto one = run_suite("all", 5, {1});
  const auto many = run_suite("all", 5, {8});
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].to_json() == many[i].to_json());
}
