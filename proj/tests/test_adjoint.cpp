#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linf/adjoint.hpp"

using namespace linf;

namespace {

struct Fixture {
  std::string name;
  AdjointModel model;
};

LieElement<Rational> regularSemisimple(const std::shared_ptr<const LieAlgebra> &alg) {
  auto v = LieElement<Rational>::zero(alg);
  if (alg->name == "sl2") {
    v.coeffs[2] = Rational(1); // h
  } else if (alg->name == "sl3") {
    v.coeffs[6] = Rational(1); // diag(1, 0, -1)
    v.coeffs[7] = Rational(1);
  } else if (alg->name == "gl2") {
    v.coeffs[0] = Rational(1); // diag(1, 2)
    v.coeffs[3] = Rational(2);
  } else if (alg->name == "gl3") {
    v.coeffs[0] = Rational(1); // diag(1, 2, 4)
    v.coeffs[4] = Rational(2);
    v.coeffs[8] = Rational(4);
  } else {
    throw std::runtime_error("no fixture for " + alg->name);
  }
  return v;
}

LieElement<Rational> regularNilpotent(const std::shared_ptr<const LieAlgebra> &alg) {
  auto v = LieElement<Rational>::zero(alg);
  if (alg->name == "sl2") {
    v.coeffs[0] = Rational(1); // e
  } else if (alg->name == "sl3") {
    v.coeffs[0] = Rational(1); // e12 + e23
    v.coeffs[3] = Rational(1);
  } else if (alg->name == "gl2") {
    v.coeffs[1] = Rational(1); // E12
  } else if (alg->name == "gl3") {
    v.coeffs[1] = Rational(1); // E12 + E23
    v.coeffs[5] = Rational(1);
  } else {
    throw std::runtime_error("no fixture for " + alg->name);
  }
  return v;
}

std::vector<Fixture> smallFixtures() {
  std::vector<Fixture> out;
  for (const auto &algName : {std::string("sl2"), std::string("gl2")}) {
    auto alg = LieAlgebra::builtin(algName.substr(0, 2), algName.back() - '0');
    auto inv = builtinInvariants(alg);
    out.push_back({algName + "/regular-ss",
                   buildAdjointModel(alg, regularSemisimple(alg), inv)});
    out.push_back({algName + "/regular-nilpotent",
                   buildAdjointModel(alg, regularNilpotent(alg), inv)});
    out.push_back({algName + "/zero",
                   buildAdjointModel(alg, LieElement<Rational>::zero(alg), inv)});
  }
  return out;
}

LieElement<ArtinElem> randomDeformation(const std::shared_ptr<const LieAlgebra> &alg,
                                        const std::shared_ptr<const ArtinRing> &ring, Prng &rng) {
  auto b = LieElement<ArtinElem>::zero(alg);
  for (int i = 0; i < alg->dim; ++i) {
    ArtinElem c = ArtinElem::zero(ring);
    for (int v = 0; v < ring->numVars; ++v)
      c += ArtinElem::variable(ring, v, rng.smallInt());
    // salt with a quadratic term when the ring allows it
    if (ring->truncationOrder > 2)
      c += ArtinElem::variable(ring, 0, Rational(1)) * ArtinElem::variable(ring, 0, rng.smallInt());
    b.coeffs[i] = std::move(c);
  }
  return b;
}

} // namespace

TEST_CASE("morphism identities hold on every small word") {
  for (const auto &fx : smallFixtures()) {
    CAPTURE(fx.name);
    auto h = adjointMorphism(fx.model);
    for (int len = 1; len <= 3; ++len)
      for (const auto &w : enumerateWords(fx.model.dgla.space, {0, 1}, len))
        CHECK(checkMorphismWord(fx.model.dgla, fx.model.base, h, w));
  }
}

TEST_CASE("morphism identities on sampled longer words") {
  auto sl3 = LieAlgebra::sl(3);
  auto m = buildAdjointModel(sl3, regularSemisimple(sl3), builtinInvariants(sl3));
  auto h = adjointMorphism(m);
  Prng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    int len = 2 + static_cast<int>(rng.uniform(0, 2));
    Word w;
    int zeros = 0;
    for (int i = 0; i < len; ++i) {
      int deg = rng.uniform(0, 3) == 0 && zeros == 0 ? 0 : 1; // at most one gauge factor
      zeros += deg == 0 ? 1 : 0;
      w.push_back({deg, static_cast<int>(rng.uniform(0, sl3->dim - 1))});
    }
    auto n = normalizeWord(w);
    if (n.sign.isZero()) continue;
    CHECK(checkMorphismWord(m.dgla, m.base, h, n.word));
  }
}

TEST_CASE("broken morphism coefficients are detected") {
  auto sl2 = LieAlgebra::sl(2);
  auto m = buildAdjointModel(sl2, regularSemisimple(sl2), builtinInvariants(sl2));
  auto broken = adjointMorphism(m, /*scaleQuadratic=*/true);
  bool failed = false;
  for (int len = 2; len <= 3 && !failed; ++len)
    for (const auto &w : enumerateWords(m.dgla.space, {0, 1}, len))
      if (!checkMorphismWord(m.dgla, m.base, broken, w)) {
        failed = true;
        break;
      }
  CHECK(failed);
}

TEST_CASE("pushforward equals the invariant-value difference") {
  Prng rng(211);
  std::vector<std::shared_ptr<const ArtinRing>> rings = {
      ArtinRing::make(1, 2), ArtinRing::make(1, 4), ArtinRing::make(2, 3)};
  for (const auto &fx : smallFixtures()) {
    CAPTURE(fx.name);
    auto h = adjointMorphism(fx.model);
    for (const auto &ring : rings)
      for (int trial = 0; trial < 10; ++trial) {
        auto b = randomDeformation(fx.model.alg, ring, rng);
        CHECK(verifyDefEqualsChi(fx.model, h, b));
      }
  }

  // the scaled variant disagrees with the direct evaluation
  auto sl2 = LieAlgebra::sl(2);
  auto m = buildAdjointModel(sl2, regularSemisimple(sl2), builtinInvariants(sl2));
  auto broken = adjointMorphism(m, true);
  bool anyFail = false;
  for (int trial = 0; trial < 10 && !anyFail; ++trial) {
    auto b = randomDeformation(sl2, ArtinRing::make(1, 3), rng);
    if (!verifyDefEqualsChi(m, broken, b)) anyFail = true;
  }
  CHECK(anyFail);
}

TEST_CASE("gauge-equivalent deformations push to the same point") {
  Prng rng(307);
  for (const auto &fx : smallFixtures()) {
    CAPTURE(fx.name);
    auto h = adjointMorphism(fx.model);
    for (const auto &ring :
         {ArtinRing::make(1, 3), ArtinRing::make(2, 3)}) {
      for (int trial = 0; trial < 5; ++trial) {
        auto b = randomDeformation(fx.model.alg, ring, rng);
        auto lambda = randomDeformation(fx.model.alg, ring, rng);
        CHECK(verifyGaugeDescent(fx.model, h, b, lambda));
      }
    }
  }
}
