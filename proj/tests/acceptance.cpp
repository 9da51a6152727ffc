// End-to-end acceptance checks, one printed verdict line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "linf/hitchin.hpp"
#include "linf/kuranishi.hpp"
#include "linf/suites.hpp"

using namespace linf;

namespace {

void verdict(int criterion, bool ok, const std::string &what) {
  std::printf("[criterion %2d] %s  %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
}

struct Timed {
  SuiteReport report;
  double seconds;
};

Timed timedSuite(const std::string &suite, int trials, uint64_t seed = 0) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.seed = seed;
  auto start = std::chrono::steady_clock::now();
  Timed t{runSuite(cfg), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return t;
}

/// Non-decreasing factor words of exactly the given length with at most
/// maxOdd factors of odd shifted parity.
std::vector<Word> wordsWithOddCap(const GradedSpace &sp, int length, int maxOdd) {
  std::vector<Factor> pool;
  for (const auto &[deg, dim] : sp.dims)
    for (int i = 0; i < dim; ++i) pool.push_back({deg, i});
  std::vector<Word> out;
  Word cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int odd) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      int o = shiftedParity(pool[i].degree);
      if (odd + o > maxOdd) continue;
      if (!cur.empty() && cur.back() == pool[i] && o == 1) continue;
      cur.push_back(pool[i]);
      rec(i, odd + o);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Degree profiles (multisets) of the given length with at most maxOdd odd
/// entries, over the degrees present in the space.
std::vector<std::vector<int>> degreeProfiles(const GradedSpace &sp, int length, int maxOdd) {
  std::vector<int> degrees;
  for (const auto &[deg, dim] : sp.dims)
    if (dim > 0) degrees.push_back(deg);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(size_t, int)> rec = [&](size_t start, int odd) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < degrees.size(); ++i) {
      int o = shiftedParity(degrees[i]);
      if (odd + o > maxOdd) continue;
      cur.push_back(degrees[i]);
      rec(i, odd + o);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

bool codifferentialOnProfiles(const Dgla &d, int length, int maxOdd, int samplesPerProfile,
                              Prng &rng) {
  for (const auto &profile : degreeProfiles(d.space, length, maxOdd)) {
    for (int s = 0; s < samplesPerProfile; ++s) {
      Word w;
      for (int deg : profile) w.push_back({deg, static_cast<int>(rng.uniform(0, d.space.dim(deg) - 1))});
      auto n = normalizeWord(w);
      if (n.sign.isZero()) continue;
      if (!checkCodifferential(d, n.word)) return false;
    }
  }
  return true;
}

} // namespace

TEST_CASE("criterion 1: orbit-direction invariance of the invariant polynomials") {
  auto t = timedSuite("lemma", 100);
  bool ok = t.report.pass() && t.seconds < 10.0;
  verdict(1, ok, "invariance identity, gl2/gl3/sl2/sl3, char-poly + trace powers, 100 samples "
                 "each (" + std::to_string(t.seconds).substr(0, 5) + "s)");
  CHECK(t.report.pass());
  CHECK(t.seconds < 10.0);
}

TEST_CASE("criterion 2: bracket-shuffle identity for polarisations") {
  auto t = timedSuite("funny", 100);
  bool ok = t.report.pass() && t.seconds < 60.0;
  verdict(2, ok, "bracket-shuffle identity, 2 <= k <= d, 100 samples per (fixture, k) (" +
                     std::to_string(t.seconds).substr(0, 5) + "s)");
  CHECK(t.report.pass());
  CHECK(t.seconds < 60.0);
}

TEST_CASE("criterion 3: symmetrized term-counting identity") {
  auto t = timedSuite("factor", 20);
  bool ok = t.report.pass() && t.seconds < 60.0;
  verdict(3, ok, "term-counting oracle vs formula, d <= 3, k <= 3, identity and ad(Y) factors, "
                 "20 samples (" + std::to_string(t.seconds).substr(0, 5) + "s)");
  CHECK(t.report.pass());
  CHECK(t.seconds < 60.0);
}

TEST_CASE("criterion 4: finite Taylor expansion through polarisations") {
  auto t = timedSuite("taylor", 100);
  verdict(4, t.report.pass(), "p(v+X) - p(v) equals the polarisation sum, 100 samples");
  CHECK(t.report.pass());
}

TEST_CASE("criterion 5: the coderivation squares to zero") {
  auto sl2 = LieAlgebra::sl(2);
  auto v = LieElement<Rational>::basis(sl2, 2, Rational(1)); // h, regular semisimple
  auto toy = buildAdjointModel(sl2, v, builtinInvariants(sl2)).dgla;
  bool ok = true;
  for (int len = 1; len <= 5 && ok; ++len)
    for (const auto &w : wordsWithOddCap(toy.space, len, 3))
      if (!checkCodifferential(toy, w)) {
        ok = false;
        break;
      }
  // larger model: exhaustive up to length 3, then every degree profile with
  // sampled index words
  auto big = hitchinFixture("curve_sl2_b2").dgla;
  for (int len = 1; len <= 3 && ok; ++len)
    for (const auto &w : wordsWithOddCap(big.space, len, 3))
      if (!checkCodifferential(big, w)) {
        ok = false;
        break;
      }
  Prng rng(2026);
  for (int len = 4; len <= 5 && ok; ++len)
    ok = codifferentialOnProfiles(big, len, 3, 12, rng);
  verdict(5, ok, "Q^2 = 0, word length <= 5, degree profiles with <= 3 odd factors, "
                 "both model families");
  CHECK(ok);
}

TEST_CASE("criterion 6: transfer morphism equations for the adjoint model") {
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> fixtures;
  for (const auto &alg : {std::string("sl2"), std::string("gl2")})
    for (const auto &vd :
         {std::string("regular-ss"), std::string("regular-nilpotent"), std::string("zero")})
      fixtures.push_back({alg, vd});
  for (const auto &[algName, vd] : fixtures) {
    auto alg = resolveAlgebra(algName);
    auto m = buildAdjointModel(alg, resolveV(alg, vd), builtinInvariants(alg));
    auto h = adjointMorphism(m);
    int kmax = 0;
    for (const auto &p : m.invariants) kmax = std::max(kmax, p.degree);
    for (int len = 1; len <= kmax && ok; ++len)
      for (const auto &w : enumerateWords(m.dgla.space, {0, 1}, len))
        if (!checkMorphismWord(m.dgla, m.base, h, w)) {
          ok = false;
          break;
        }
  }
  // negative control: the scaled quadratic coefficient must be detected
  auto sl2 = resolveAlgebra("sl2");
  auto m = buildAdjointModel(sl2, resolveV(sl2, "regular-ss"), builtinInvariants(sl2));
  auto broken = adjointMorphism(m, /*scaleQuadratic=*/true);
  bool detected = false;
  for (const auto &w : enumerateWords(m.dgla.space, {0, 1}, 2))
    if (!checkMorphismWord(m.dgla, m.base, broken, w)) {
      detected = true;
      break;
    }
  ok = ok && detected;
  verdict(6, ok, "morphism equations on every degree profile up to k = max d_i, all adjoint "
                 "fixtures; scaled-coefficient control detected");
  CHECK(ok);
}

TEST_CASE("criterion 7: pushforward equals the invariant-value difference") {
  auto t = timedSuite("def-chi", 50);
  verdict(7, t.report.pass(),
          "pushforward = chi(v+b) - chi(v) over Q[t]/t^2, Q[t]/t^4, Q[t,s]/(deg>=3), "
          "50 samples per fixture, with gauge descent");
  CHECK(t.report.pass());
}

TEST_CASE("criterion 8: gauge normalization into the slice") {
  auto t = timedSuite("hull", 50);
  verdict(8, t.report.pass(),
          "sl2/sl3, regular-ss and regular-nilpotent over Q[t]/t^3: 50 samples normalized "
          "into the slice; tangent-level bijection exact");
  CHECK(t.report.pass());
}

TEST_CASE("criterion 9: transfer morphism and pushforward for the spectral models") {
  auto morph = timedSuite("hitchin-morphism", 24);
  auto defh = timedSuite("def-hitchin", 8);
  bool strata = true;
  for (const auto &name : hitchinFixtureNames()) {
    auto m = hitchinFixture(name);
    auto h = hitchinMorphism(m);
    // dedicated strata: all horizontal-degree-1 factors, and exactly one
    // horizontal-degree-0 factor
    std::vector<Factor> hor1, hor0;
    for (const auto &[deg, dim] : m.dgla.space.dims)
      for (int i = 0; i < dim; ++i) {
        auto [mask, g] = m.dglaFactor(deg, i);
        (m.forms.xiDegree(mask) == 1 ? hor1 : hor0).push_back({deg, i});
      }
    for (size_t i = 0; i < hor1.size() && strata; ++i)
      for (size_t j = i; j < hor1.size(); ++j) {
        auto n = normalizeWord({hor1[i], hor1[j]});
        if (n.sign.isZero()) continue;
        if (!checkMorphismWord(m.dgla, m.target, h, n.word)) {
          strata = false;
          break;
        }
      }
    Prng rng(99);
    for (int trial = 0; trial < 40 && strata; ++trial) {
      auto a = hor0[rng.uniform(0, static_cast<long>(hor0.size()) - 1)];
      auto b = hor1[rng.uniform(0, static_cast<long>(hor1.size()) - 1)];
      auto n = normalizeWord({a, b});
      if (n.sign.isZero()) continue;
      if (!checkMorphismWord(m.dgla, m.target, h, n.word)) strata = false;
    }
  }
  bool ok = morph.report.pass() && defh.report.pass() && strata;
  verdict(9, ok, "morphism equations on curve (a=1, b=1,2), surface (a=2, b=2), twisted "
                 "coefficient fixture, k <= 3, dedicated one-sided strata; pushforward = "
                 "spectral-data difference on stratified samples");
  CHECK(morph.report.pass());
  CHECK(defh.report.pass());
  CHECK(strata);
}

TEST_CASE("criterion 10: lifting obstructions land in the exact classes") {
  auto t = timedSuite("obstruction", 20);
  verdict(10, t.report.pass(),
          "20 seeded small-extension lifts: the linear part maps the deformation defect to "
          "an exact target class");
  CHECK(t.report.pass());
}

TEST_CASE("criterion 11: deterministic reports, bounded runtime") {
  auto start = std::chrono::steady_clock::now();
  auto first = runAll(0);
  double firstSecs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto second = runAll(0);
  bool allPass = true;
  for (const auto &r : first) allPass = allPass && r.pass();
  bool identical = reportJson(first) == reportJson(second);
  bool fast = firstSecs < 600.0;
  verdict(11, allPass && identical && fast,
          "run-all(seed 0) twice: byte-identical JSON, all suites pass, " +
              std::to_string(firstSecs).substr(0, 5) + "s < 600s");
  CHECK(allPass);
  CHECK(identical);
  CHECK(fast);
}
