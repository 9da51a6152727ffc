#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "linf/forms.hpp"
#include "linf/graded.hpp"
#include "linf/invariants.hpp"
#include "linf/lie.hpp"

namespace linf {

/// Formal Dolbeault model of a Higgs-type deformation problem: the exterior
/// form algebra tensored with g, with differential dbar + ad(theta) for a
/// fixed commuting family theta of horizontal Higgs coefficients, together
/// with the abelian target complex carrying the invariant-polynomial values:
/// one symmetric power (in the horizontal directions, tracked by commuting
/// exponents alpha) per invariant generator, tensored with vertical forms,
/// placed in degree (vertical degree + 1).
struct HitchinModel {
  std::string name;
  FormAlgebra forms;
  std::shared_ptr<const LieAlgebra> alg;
  std::vector<LieElement<Rational>> theta; // one per horizontal generator
  std::vector<InvariantPolynomial> invariants;
  Dgla dgla;
  Dgla target;

  std::vector<std::vector<uint32_t>> masksByDegree;
  std::map<uint32_t, int> maskPos;

  struct TargetBasis {
    int inv;
    Expo alpha;
    uint32_t eta; // vertical mask in full-generator bit positions
  };
  std::map<int, std::vector<TargetBasis>> targetBasis;
  std::map<std::tuple<int, Expo, uint32_t>, std::pair<int, int>> targetIndex;

  int dglaIndex(uint32_t mask, int g) const {
    return maskPos.at(mask) * alg->dim + g;
  }
  std::pair<uint32_t, int> dglaFactor(int degree, int index) const {
    return {masksByDegree[degree][index / alg->dim], index % alg->dim};
  }
  int maxInvariantDegree() const {
    int d = 0;
    for (const auto &p : invariants) d = std::max(d, p.degree);
    return d;
  }
};

HitchinModel buildHitchinModel(std::string name, FormAlgebra forms,
                               std::shared_ptr<const LieAlgebra> alg,
                               std::vector<LieElement<Rational>> theta,
                               std::vector<InvariantPolynomial> invariants);

/// Named example models used throughout the test suites.
HitchinModel hitchinFixture(const std::string &name);
std::vector<std::string> hitchinFixtureNames();

/// Model description file (line oriented, '#' comments): keys
///   name <id>
///   algebra <sl|gl> <n>
///   xi <a>
///   eta <b>
///   dbar <j> : (<p> <q> <coeff>)*     vertical derivation of eta_j
///   theta <l> : <c_1> .. <c_dim>      g coefficients of the l-th Higgs part
HitchinModel hitchinModelFromSpecText(const std::string &text);
HitchinModel hitchinModelFromSpecFile(const std::string &path);

/// Taylor coefficients of the transfer morphism into the target: on a word
/// whose factors all have horizontal degree one, the value collects, per
/// invariant, the coefficient extraction of the invariant at theta with the
/// word's g-parts in the argument slots; horizontal indices become commuting
/// exponents, vertical masks wedge together, and the whole value carries
/// (-1)^(vertical degree). `naiveVerticalSign` drops that last factor (a
/// deliberately broken variant used as a negative control).
MorphismMap hitchinMorphism(const HitchinModel &m, bool naiveVerticalSign = false);

/// Stratified Maurer-Cartan samples: g-parts drawn from a fixed commuting
/// (diagonal) subalgebra containing theta, vertical parts supported on
/// derivation-closed generators. Strata: "horizontal", "vertical", "mixed".
GradedElement<ArtinElem> hitchinSample(const HitchinModel &m,
                                       const std::shared_ptr<const ArtinRing> &ring, Prng &rng,
                                       const std::string &stratum);

/// The pushforward of a Maurer-Cartan element equals the difference of
/// invariant values between theta + (horizontal part) and theta, computed
/// independently over the commuting exponent ring.
bool verifyDefEqualsHitchin(const HitchinModel &m, const MorphismMap &h,
                            const GradedElement<ArtinElem> &x);

/// Linear extension of the single-factor morphism coefficient to an element
/// with Artin coefficients.
template <class S>
GradedElement<S> applyLinearPart(const MorphismMap &h, const GradedElement<S> &w) {
  GradedElement<S> out;
  for (const auto &[deg, v] : w.comps)
    for (size_t i = 0; i < v.size(); ++i) {
      if (scalarIsZero(v[i])) continue;
      GradedElement<Rational> val = h({Factor{deg, static_cast<int>(i)}});
      for (const auto &[dd, vv] : val.comps)
        for (size_t jj = 0; jj < vv.size(); ++jj) {
          if (vv[jj].isZero()) continue;
          auto &slot = out.comps[dd];
          if (slot.size() <= jj) slot.resize(jj + 1);
          slot[jj] += v[i] * vv[jj];
        }
    }
  return out;
}

/// True iff every coefficient monomial of y lies in the image of the target
/// differential landing in the stated degree.
bool targetExact(const HitchinModel &m, const GradedElement<ArtinElem> &y, int degree);

std::vector<int> commutingBasis(const std::shared_ptr<const LieAlgebra> &alg);

} // namespace linf
