#include <doctest.h>

#include "fakedeg/verify.hpp"

using namespace fakedeg;

TEST_CASE("polynomial json") {
  const auto j = poly_to_json(QPolynomial{1, 0, 2});
  CHECK(j["pretty"] == "1 + 2q^2");
  CHECK(j["coeffs"] == nlohmann::json::array({"1", "0", "2"}));
}

TEST_CASE("every suite passes at small rank") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto report = run_suite(name, 3);
    CHECK(report.failures == 0);
    CHECK_FALSE(report.records.empty());
    for (const auto& r : report.records) {
      CHECK(r.contains("group"));
      CHECK(r.contains("label"));
      CHECK(r["agree"].get<bool>());
    }
  }
}

TEST_CASE("records carry the expected fields") {
  const auto thm2 = run_suite("thm2", 2);
  const auto& r = thm2.records.front();
  CHECK(r["suite"] == "thm2");
  CHECK(r["routes"].contains("domino_even"));
  CHECK(r.contains("exponents"));
  CHECK(r.contains("palindromic"));
  const auto bij = run_suite("bijections", 2);
  CHECK(bij.records.front().contains("injective"));
  CHECK(bij.records.front().contains("literal_sweep_maj_failures"));
}

TEST_CASE("reports are deterministic") {
  const auto a = run_suite("all", 3);
  const auto b = run_suite("all", 3);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].dump() == b.records[i].dump());
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(run_suite("thm3", 2), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("thm1", -1), std::invalid_argument);
  CHECK(run_suite("all", 1).failures == 0);
}
