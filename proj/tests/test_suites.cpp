#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linf/suites.hpp"

using namespace linf;

namespace {

SuiteConfig quickConfig(const std::string &suite, int trials) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.seed = 11;
  return cfg;
}

int quickTrials(const std::string &suite) {
  if (suite == "def-chi" || suite == "def-hitchin") return 2;
  if (suite == "hull" || suite == "funny" || suite == "factor") return 3;
  if (suite == "obstruction") return 4;
  return 5;
}

} // namespace

TEST_CASE("every suite passes on its default fixtures") {
  for (const auto &suite : suiteNames()) {
    CAPTURE(suite);
    auto rep = runSuite(quickConfig(suite, quickTrials(suite)));
    CHECK(rep.failures == 0);
    CHECK(rep.trials == quickTrials(suite));
    CHECK(rep.firstCounterexample.empty());
  }
}

TEST_CASE("every sabotage flag makes its suite fail") {
  for (const auto &suite : suiteNames()) {
    for (const auto &flag : negctlNames(suite)) {
      CAPTURE(suite);
      CAPTURE(flag);
      auto cfg = quickConfig(suite, suite == "obstruction" ? 20 : 6);
      cfg.negctl = flag;
      auto rep = runSuite(cfg);
      CHECK(rep.failures > 0);
      CHECK(!rep.firstCounterexample.empty());
    }
  }
}

TEST_CASE("configuration errors are rejected") {
  CHECK_THROWS_AS(runSuite(quickConfig("no-such-suite", 1)), std::runtime_error);
  auto bad = quickConfig("lemma", 1);
  bad.negctl = "no-such-flag";
  CHECK_THROWS_AS(runSuite(bad), std::runtime_error);
  auto badAlg = quickConfig("lemma", 1);
  badAlg.algebra = "so3";
  CHECK_THROWS_AS(runSuite(badAlg), std::runtime_error);
  auto badModel = quickConfig("hitchin-morphism", 1);
  badModel.model = "missing_model_file.txt";
  CHECK_THROWS_AS(runSuite(badModel), std::runtime_error);
  CHECK_THROWS_AS(runAll(0, "no-such-suite"), std::runtime_error);
}

TEST_CASE("fixture resolution") {
  CHECK(resolveAlgebra("sl3")->dim == 8);
  CHECK(resolveAlgebra("gl2")->dim == 4);
  CHECK_THROWS(resolveAlgebra("sp4"));

  auto sl2 = resolveAlgebra("sl2");
  auto v = resolveV(sl2, "coeffs:1,0,-2");
  CHECK(v.coeffs[0] == Rational(1));
  CHECK(v.coeffs[2] == Rational(-2));
  CHECK_THROWS(resolveV(sl2, "coeffs:1,2"));
  CHECK(resolveV(sl2, "zero").isZero());
  CHECK(!resolveV(sl2, "regular-nilpotent").isZero());
}

TEST_CASE("reports are deterministic and independent of the trial schedule") {
  auto cfg = quickConfig("taylor", 6);
  auto a = runSuite(cfg);
  auto b = runSuite(cfg);
  cfg.parallel = false;
  auto serial = runSuite(cfg);
  CHECK(reportJson({a}) == reportJson({b}));
  CHECK(reportJson({a}) == reportJson({serial}));

  // counterexamples are part of the canonical serialization
  cfg.negctl = "drop-linear";
  cfg.parallel = true;
  auto f1 = runSuite(cfg);
  cfg.parallel = false;
  auto f2 = runSuite(cfg);
  CHECK(f1.failures > 0);
  CHECK(reportJson({f1}) == reportJson({f2}));
}

TEST_CASE("suite options are honoured") {
  auto cfg = quickConfig("lemma", 4);
  cfg.algebra = "sl2"; // restricts the fixture list
  auto rep = runSuite(cfg);
  CHECK(rep.failures == 0);

  auto hull = quickConfig("hull", 3);
  hull.algebra = "sl3";
  hull.vDesc = "regular-nilpotent";
  CHECK(runSuite(hull).failures == 0);

  auto hm = quickConfig("hitchin-morphism", 4);
  hm.model = "curve_sl2_b2";
  hm.kmax = 2;
  CHECK(runSuite(hm).failures == 0);
}
