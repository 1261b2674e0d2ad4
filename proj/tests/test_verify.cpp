#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <json.hpp>

#include "doctest.h"
#include "krlab/verify.hpp"

using namespace krlab;

TEST_CASE("reports collect outcomes and serialize") {
  VerificationReport rep = run_suite("wtilde", {"--max-rank", "3"});
  CHECK(rep.suite == "wtilde");
  CHECK(rep.ok());
  CHECK(rep.passed() == 16);
  CHECK(rep.failed() == 0);
  CHECK(rep.str().find("wtilde: 16 pass, 0 fail") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(rep.json());
  CHECK(j["suite"] == "wtilde");
  CHECK(j["pass"] == 16);
  CHECK(j["fail"] == 0);
  CHECK(j["assertions"].size() == 16);
  for (const auto& a : j["assertions"]) {
    CHECK(a["invariant"] == "weyl/coset-word");
    CHECK(a["status"] == "pass");
    CHECK(a["detail"].get<std::string>().find(" r=") != std::string::npos);
  }
}

TEST_CASE("rotation suite covers every family in range") {
  VerificationReport rep = verify_sigma(4);
  CHECK(rep.ok());
  std::size_t d_extra = 0;
  for (const Assertion& a : rep.assertions)
    if (a.detail.find("zero-one swap") != std::string::npos) ++d_extra;
  CHECK(d_extra == 1); /* only D4~1 at this rank */
  CHECK(rep.assertions.size() == 3 * 21 + d_extra);
}

TEST_CASE("single-instance suites pass on small rectangles") {
  CHECK(run_suite("demazure", {"A2~1", "1", "2"}).ok());
  CHECK(run_suite("characters", {"A2~2", "1", "1"}).ok());
  CHECK(run_suite("axioms", {"A2~1", "2", "1"}).ok());
  CHECK(run_suite("rmatrix", {"A1~1", "1,1", "1,2"}).ok());

  VerificationReport paths = run_suite("paths", {"A4~2", "2", "1"});
  CHECK(paths.ok());
  std::size_t walks = 0;
  for (const Assertion& a : paths.assertions)
    if (a.invariant == "virtual/walk-displays") ++walks;
  CHECK(walks == 2); /* k = 0 and k = 1 */
}

TEST_CASE("dispatch validates suite names and arguments") {
  CHECK_THROWS_AS(run_suite("nope", {}), Error);
  try {
    run_suite("nope", {});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported);
  }
  try {
    run_suite("wtilde", {"--bogus"});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  try {
    run_suite("demazure", {"A2~1"});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
  try {
    run_suite("rmatrix", {"A1~1", "1-1", "1,1"});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
}

TEST_CASE("model construction respects the implemented scope") {
  CHECK(default_instances().size() == 30);
  CHECK(default_pairs().size() == 24);

  try {
    build_model({{AffineFamily::d_untwisted, 4}, 1, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported);
    CHECK(std::string(e.what()).find("D4~1") != std::string::npos);
  }
  try {
    build_model({{AffineFamily::a_untwisted, 2}, 3, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }

  CrystalModel m = build_model({{AffineFamily::a_untwisted, 2}, 1, 1});
  CHECK(m.graph.size() == 3);
  CHECK(m.crystal->datum().n == 2);
}
