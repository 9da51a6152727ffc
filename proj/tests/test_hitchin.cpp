#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linf/hitchin.hpp"

using namespace linf;

namespace {

GradedElement<Rational> randomCocycle(const HitchinModel &m, Prng &rng) {
  const MatQ &d1 = m.dgla.diff.at(1);
  auto ker = kernelBasis(d1, m.dgla.space.dim(1));
  GradedElement<Rational> x;
  auto &slot = x.comps[1];
  slot.assign(m.dgla.space.dim(1), Rational(0));
  for (const auto &v : ker) {
    Rational c = rng.smallInt();
    for (size_t i = 0; i < v.size(); ++i) slot[i] += c * v[i];
  }
  return x;
}

GradedElement<ArtinElem> scaleByMonomial(const GradedElement<Rational> &x,
                                         const std::shared_ptr<const ArtinRing> &ring, int power) {
  ArtinElem mono = ArtinElem::scalar(ring, Rational(1));
  for (int i = 0; i < power; ++i) mono *= ArtinElem::variable(ring, 0, Rational(1));
  GradedElement<ArtinElem> out;
  for (const auto &[d, v] : x.comps) {
    auto &slot = out.comps[d];
    slot.assign(v.size(), ArtinElem::zero(ring));
    for (size_t i = 0; i < v.size(); ++i) slot[i] = mono * v[i];
  }
  return out;
}

GradedElement<Rational> randomDegree1(const HitchinModel &m, Prng &rng) {
  GradedElement<Rational> x;
  auto &slot = x.comps[1];
  slot.assign(m.dgla.space.dim(1), Rational(0));
  for (auto &c : slot) c = rng.smallInt();
  return x;
}

} // namespace

TEST_CASE("exterior form algebra") {
  FormAlgebra f;
  f.a = 1;
  f.b = 2;
  f.dbarVertical = {{{6u, Rational(1)}}, {}}; // dbar eta1 = eta1^eta2
  f.validate();

  CHECK(f.xiMask() == 1u);
  CHECK(f.etaMask() == 6u);

  // wedge anticommutes on generators
  auto [s1, m1] = FormAlgebra::wedge(2u, 4u); // eta1 ^ eta2
  auto [s2, m2] = FormAlgebra::wedge(4u, 2u); // eta2 ^ eta1
  CHECK(m1 == 6u);
  CHECK(m2 == 6u);
  CHECK(s1 == Rational(1));
  CHECK(s2 == Rational(-1));
  CHECK(FormAlgebra::wedge(2u, 2u).first == Rational(0));

  // derivation with the Leibniz sign: dbar(xi1 ^ eta1) = -xi1 ^ eta1 ^ eta2
  auto d = f.dbar(3u);
  REQUIRE(d.size() == 1);
  CHECK(d[0].first == 7u);
  CHECK(d[0].second == Rational(-1));
  CHECK(f.dbar(2u).size() == 1); // dbar(eta1) = eta1 ^ eta2
  CHECK(f.dbar(4u).empty());

  // a derivation that fails to square to zero is rejected
  FormAlgebra bad;
  bad.a = 0;
  bad.b = 4;
  bad.dbarVertical = {{{(1u << 1) | (1u << 2), Rational(1)}}, // d eta1 = eta2^eta3
                      {{(1u << 0) | (1u << 3), Rational(1)}}, // d eta2 = eta1^eta4
                      {},
                      {}};
  CHECK_THROWS(bad.validate());

  // values outside the vertical 2-forms are rejected
  FormAlgebra wrong;
  wrong.a = 1;
  wrong.b = 1;
  wrong.dbarVertical = {{{3u, Rational(1)}}};
  CHECK_THROWS(wrong.validate());
}

TEST_CASE("fixture models are well formed") {
  auto curve = hitchinFixture("curve_sl2");
  CHECK(curve.dgla.space.dim(0) == 3);
  CHECK(curve.dgla.space.dim(1) == 6);
  CHECK(curve.dgla.space.dim(2) == 3);
  CHECK(curve.target.space.dim(1) == 1); // det against u^2
  CHECK(curve.target.space.dim(2) == 1);

  auto surf = hitchinFixture("surface_gl2");
  CHECK(surf.dgla.space.dim(1) == 16);
  // trace: u-exponents (1,0),(0,1); det: (2,0),(1,1),(0,2); times 4 vertical masks per degree
  CHECK(surf.target.space.dim(1) == 5);
  CHECK(surf.target.space.dim(2) == 10);
  CHECK(surf.target.space.dim(3) == 5);

  // non-commuting Higgs coefficients are rejected
  auto sl2 = LieAlgebra::sl(2);
  FormAlgebra two;
  two.a = 2;
  two.b = 0;
  two.dbarVertical = {};
  CHECK_THROWS(buildHitchinModel("bad", two, sl2,
                                 {LieElement<Rational>::basis(sl2, 0, Rational(1)),
                                  LieElement<Rational>::basis(sl2, 1, Rational(1))},
                                 charPolyQuotient(sl2).components));
}

TEST_CASE("model spec files") {
  auto m = hitchinModelFromSpecText(R"(
name demo
algebra sl 2
xi 1
eta 2
dbar 1 : 1 2 1
theta 1 : 0 0 1
)");
  CHECK(m.name == "demo");
  CHECK(m.forms.a == 1);
  CHECK(m.forms.b == 2);
  auto ref = hitchinFixture("curve_sl2_b2");
  CHECK(m.dgla.space.dim(2) == ref.dgla.space.dim(2));
  CHECK(m.dgla.diff.at(1) == ref.dgla.diff.at(1));

  CHECK_THROWS(hitchinModelFromSpecText("algebra sl 2\nxi 1\neta 1\n")); // missing theta
}

TEST_CASE("transfer morphism identities") {
  for (const auto &name : hitchinFixtureNames()) {
    CAPTURE(name);
    auto m = hitchinFixture(name);
    auto h = hitchinMorphism(m);
    std::vector<int> degrees;
    for (int d = 0; d <= m.forms.gens(); ++d) degrees.push_back(d);
    for (int len = 1; len <= 2; ++len)
      for (const auto &w : enumerateWords(m.dgla.space, degrees, len))
        CHECK(checkMorphismWord(m.dgla, m.target, h, w));
    // longer words, sampled
    Prng rng(503);
    auto pool = enumerateWords(m.dgla.space, {0, 1, 2}, 1);
    for (int trial = 0; trial < 60; ++trial) {
      Word w;
      for (int i = 0; i < 3; ++i) w.push_back(pool[rng.uniform(0, pool.size() - 1)][0]);
      auto n = normalizeWord(w);
      if (n.sign.isZero()) continue;
      CHECK(checkMorphismWord(m.dgla, m.target, h, n.word));
    }
  }
}

TEST_CASE("dropping the vertical sign breaks the morphism equations") {
  for (const auto &name : {std::string("curve_sl2_b2"), std::string("surface_sl2_dbar")}) {
    CAPTURE(name);
    auto m = hitchinFixture(name);
    auto broken = hitchinMorphism(m, /*naiveVerticalSign=*/true);
    bool failed = false;
    std::vector<int> degrees;
    for (int d = 0; d <= m.forms.gens(); ++d) degrees.push_back(d);
    for (int len = 1; len <= 2 && !failed; ++len)
      for (const auto &w : enumerateWords(m.dgla.space, degrees, len))
        if (!checkMorphismWord(m.dgla, m.target, broken, w)) {
          failed = true;
          break;
        }
    CHECK(failed);
  }
}

TEST_CASE("pushforward equals the invariant-value difference at theta") {
  Prng rng(601);
  for (const auto &name : hitchinFixtureNames()) {
    CAPTURE(name);
    auto m = hitchinFixture(name);
    auto h = hitchinMorphism(m);
    for (const auto &stratum :
         {std::string("horizontal"), std::string("vertical"), std::string("mixed")}) {
      for (const auto &ring : {ArtinRing::make(1, 3), ArtinRing::make(2, 3)}) {
        for (int trial = 0; trial < 5; ++trial) {
          auto x = hitchinSample(m, ring, rng, stratum);
          REQUIRE(mcDefect(m.dgla, x).isZero());
          CHECK(verifyDefEqualsHitchin(m, h, x));
        }
      }
    }
  }

  // evaluating the transfer of a different Higgs field disagrees
  auto m1 = hitchinFixture("curve_sl2");
  auto m2 = buildHitchinModel("curve_sl2_scaled", m1.forms, m1.alg,
                              {m1.theta[0] * Rational(2)}, charPolyQuotient(m1.alg).components);
  auto wrongH = hitchinMorphism(m2);
  bool anyFail = false;
  for (int trial = 0; trial < 10 && !anyFail; ++trial) {
    auto x = hitchinSample(m1, ArtinRing::make(1, 3), rng, "horizontal");
    if (!verifyDefEqualsHitchin(m1, wrongH, x)) anyFail = true;
  }
  CHECK(anyFail);
}

TEST_CASE("first-order lifting obstruction maps to an exact class") {
  Prng rng(701);
  auto ring = ArtinRing::make(1, 3); // Q[t]/t^3, quotient of the t^2 extension
  for (const auto &name : hitchinFixtureNames()) {
    CAPTURE(name);
    auto m = hitchinFixture(name);
    auto h = hitchinMorphism(m);
    for (int trial = 0; trial < 4; ++trial) {
      auto x1 = randomCocycle(m, rng);
      auto x2 = randomDegree1(m, rng);
      auto x = scaleByMonomial(x1, ring, 1) + scaleByMonomial(x2, ring, 2);
      auto defect = mcDefect(m.dgla, x);
      // the defect sits in the kernel of the extension: order exactly t^2
      for (const auto &[d, v] : defect.comps)
        for (const auto &c : v)
          for (const auto &[e, val] : c.terms()) CHECK(totalDegree(e) == 2);
      auto image = applyLinearPart(h, defect);
      CHECK(targetExact(m, image, 2));
    }
  }

  // without the cocycle condition at first order the image can be inexact
  auto m = hitchinFixture("curve_sl2");
  auto h = hitchinMorphism(m);
  bool anyFail = false;
  for (int trial = 0; trial < 20 && !anyFail; ++trial) {
    auto x1 = randomDegree1(m, rng); // not a cocycle in general
    auto x = scaleByMonomial(x1, ring, 1);
    auto image = applyLinearPart(h, mcDefect(m.dgla, x));
    if (!targetExact(m, image, 2)) anyFail = true;
  }
  CHECK(anyFail);
}
