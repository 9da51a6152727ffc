#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linf/kuranishi.hpp"

using namespace linf;

namespace {

AdjointModel makeModel(const std::string &algName, const std::string &point) {
  auto alg = LieAlgebra::builtin(algName.substr(0, 2), algName.back() - '0');
  auto v = LieElement<Rational>::zero(alg);
  if (point == "regular-ss") {
    if (algName == "sl2") v.coeffs[2] = Rational(1);
    if (algName == "sl3") { v.coeffs[6] = Rational(1); v.coeffs[7] = Rational(1); }
  } else if (point == "regular-nilpotent") {
    if (algName == "sl2") v.coeffs[0] = Rational(1);
    if (algName == "sl3") { v.coeffs[0] = Rational(1); v.coeffs[3] = Rational(1); }
  } // "zero": leave v = 0
  return buildAdjointModel(alg, v, builtinInvariants(alg));
}

LieElement<ArtinElem> randomDeformation(const std::shared_ptr<const LieAlgebra> &alg,
                                        const std::shared_ptr<const ArtinRing> &ring, Prng &rng) {
  auto b = LieElement<ArtinElem>::zero(alg);
  for (int i = 0; i < alg->dim; ++i) {
    ArtinElem c = ArtinElem::zero(ring);
    for (int v = 0; v < ring->numVars; ++v) {
      c += ArtinElem::variable(ring, v, rng.smallInt());
      if (ring->truncationOrder > 2)
        c += ArtinElem::variable(ring, v, Rational(1)) * ArtinElem::variable(ring, 0, rng.smallInt());
    }
    b.coeffs[i] = std::move(c);
  }
  return b;
}

bool supportedOnSlice(const HullData &h, const LieElement<ArtinElem> &x) {
  for (int i = 0; i < static_cast<int>(x.coeffs.size()); ++i) {
    bool inSlice = false;
    for (int s : h.sliceIndices)
      if (s == i) inSlice = true;
    if (!inSlice && !x.coeffs[i].isZero()) return false;
  }
  return true;
}

} // namespace

TEST_CASE("slice choices for the small fixtures") {
  auto sl2 = LieAlgebra::sl(2);

  auto regSS = makeModel("sl2", "regular-ss");
  auto h1 = computeHull(sl2, regSS.v);
  CHECK(h1.sliceIndices == std::vector<int>{2}); // only h survives ad(h)
  CHECK(verifyHullTangent(regSS, h1));

  auto regNil = makeModel("sl2", "regular-nilpotent");
  auto h2 = computeHull(sl2, regNil.v);
  CHECK(h2.sliceIndices == std::vector<int>{1}); // f complements im ad(e) = <e, h>
  CHECK(verifyHullTangent(regNil, h2));

  auto zero = makeModel("sl2", "zero");
  auto h3 = computeHull(sl2, zero.v);
  CHECK(h3.sliceIndices == std::vector<int>{0, 1, 2});
  CHECK(verifyHullTangent(zero, h3));

  auto sl3 = LieAlgebra::sl(3);
  auto m3 = makeModel("sl3", "regular-ss");
  auto h4 = computeHull(sl3, m3.v);
  CHECK(h4.sliceIndices.size() == 2); // rank of sl3
  CHECK(verifyHullTangent(m3, h4));

  auto m3n = makeModel("sl3", "regular-nilpotent");
  auto h5 = computeHull(sl3, m3n.v);
  CHECK(h5.sliceIndices.size() == 2);
  CHECK(verifyHullTangent(m3n, h5));
}

TEST_CASE("gauge normalization lands every deformation on the slice") {
  Prng rng(401);
  for (const auto &algName : {std::string("sl2"), std::string("sl3")}) {
    for (const auto &point : {std::string("regular-ss"), std::string("regular-nilpotent")}) {
      auto m = makeModel(algName, point);
      auto hull = computeHull(m.alg, m.v);
      for (const auto &ring : {ArtinRing::make(1, 3), ArtinRing::make(2, 3)}) {
        for (int trial = 0; trial < 10; ++trial) {
          auto b = randomDeformation(m.alg, ring, rng);
          auto norm = normalizeIntoHull(m, hull, b);
          REQUIRE(norm.ok);
          CHECK(supportedOnSlice(hull, norm.normalized));

          // the normalized point is genuinely gauge equivalent: the adjoint
          // quotient cannot tell the two deformations apart
          auto vA = promoteElement(m.v, ArtinElem::scalar(ring, Rational(1)));
          AdjointQuotient q{std::vector<InvariantPolynomial>(m.invariants)};
          CHECK(chi(q, vA + b) == chi(q, vA + norm.normalized));
        }
      }
    }
  }
}

TEST_CASE("normalization is the identity at the zero point") {
  Prng rng(409);
  auto m = makeModel("sl2", "zero");
  auto hull = computeHull(m.alg, m.v);
  auto ring = ArtinRing::make(1, 3);
  auto b = randomDeformation(m.alg, ring, rng);
  auto norm = normalizeIntoHull(m, hull, b);
  REQUIRE(norm.ok);
  CHECK(norm.normalized == b);
}
