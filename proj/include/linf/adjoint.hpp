#pragma once

#include <memory>
#include <vector>

#include "linf/graded.hpp"
#include "linf/invariants.hpp"
#include "linf/lie.hpp"

namespace linf {

/// Two-term model of the deformation theory of an element v of g under the
/// adjoint action: gauge directions in degree 0, deformation directions in
/// degree 1, differential ad(v), bracket inherited from g in degrees (0,0)
/// and (0,1), zero on (1,1). Every degree-1 element is Maurer-Cartan.
struct AdjointModel {
  std::shared_ptr<const LieAlgebra> alg;
  LieElement<Rational> v;
  std::vector<InvariantPolynomial> invariants;
  Dgla dgla;
  Dgla base; // abelian, one degree-1 line per invariant generator
};

inline AdjointModel buildAdjointModel(std::shared_ptr<const LieAlgebra> alg,
                                      LieElement<Rational> v,
                                      std::vector<InvariantPolynomial> invariants) {
  AdjointModel m;
  m.alg = alg;
  m.v = std::move(v);
  m.invariants = std::move(invariants);

  auto gaugeLabels = alg->basisLabels;
  for (auto &l : gaugeLabels) l += "@0";
  auto defLabels = alg->basisLabels;
  for (auto &l : defLabels) l += "@1";
  m.dgla.name = alg->name + "-adjoint";
  m.dgla.space.addComponent(0, gaugeLabels);
  m.dgla.space.addComponent(1, defLabels);
  m.dgla.diff[0] = alg->adMatrix(m.v.coeffs); // lambda -> [v, lambda]

  for (int i = 0; i < alg->dim; ++i) {
    for (int j = i + 1; j < alg->dim; ++j)
      if (!alg->table[i][j].empty()) m.dgla.setBracket(0, i, 0, j, alg->table[i][j]);
    for (int j = 0; j < alg->dim; ++j)
      if (!alg->table[i][j].empty()) m.dgla.setBracket(0, i, 1, j, alg->table[i][j]);
  }
  m.dgla.validate();

  std::vector<std::string> baseLabels;
  for (const auto &p : m.invariants) baseLabels.push_back(p.label);
  m.base.name = alg->name + "-quotient-tangent";
  m.base.space.addComponent(1, baseLabels);
  m.base.validate();
  return m;
}

/// Taylor coefficients of the morphism from the adjoint model to its abelian
/// base: on a word of degree-1 factors e_{j_1} .. e_{j_k}, the i-th component
/// is the k-th polarisation of the i-th invariant at v; zero whenever any
/// factor sits in degree 0. `scaleQuadratic` doubles the 2-argument
/// coefficient (a deliberately broken variant used as a negative control).
inline MorphismMap adjointMorphism(const AdjointModel &m, bool scaleQuadratic = false) {
  return [&m, scaleQuadratic](const Word &w) {
    GradedElement<Rational> out;
    int k = static_cast<int>(w.size());
    if (k == 0) return out;
    for (const auto &f : w)
      if (f.degree != 1) return out;
    std::vector<LieElement<Rational>> args;
    for (const auto &f : w) args.push_back(LieElement<Rational>::basis(m.alg, f.index, Rational(1)));
    auto &slot = out.comps[1];
    slot.resize(m.invariants.size());
    for (size_t i = 0; i < m.invariants.size(); ++i) {
      if (k > m.invariants[i].degree) continue;
      slot[i] = polarize(m.invariants[i], k, args, m.v);
      if (scaleQuadratic && k == 2) slot[i] = slot[i] * Rational(2);
    }
    return out;
  };
}

template <class S>
GradedElement<S> degree1Element(const LieElement<S> &b) {
  GradedElement<S> x;
  x.comps[1] = b.coeffs;
  return x;
}

template <class S>
GradedElement<S> degree0Element(const LieElement<S> &lambda) {
  GradedElement<S> x;
  x.comps[0] = lambda.coeffs;
  return x;
}

template <class S>
LieElement<S> fromDegree(const AdjointModel &m, const GradedElement<S> &x, int deg) {
  auto it = x.comps.find(deg);
  std::vector<S> c = it == x.comps.end() ? std::vector<S>(m.alg->dim) : it->second;
  c.resize(m.alg->dim);
  return LieElement<S>(m.alg, std::move(c));
}

/// The morphism pushes a Maurer-Cartan element b forward to the difference
/// of adjoint-quotient values chi(v + b) - chi(v), computed independently by
/// direct polynomial evaluation.
inline bool verifyDefEqualsChi(const AdjointModel &m, const MorphismMap &h,
                               const LieElement<ArtinElem> &b) {
  int kmax = 0;
  for (const auto &p : m.invariants) kmax = std::max(kmax, p.degree);
  auto pushed = mcPushforward(h, degree1Element(b), kmax);

  ArtinElem model;
  for (const auto &c : b.coeffs)
    if (c.ring()) { model = ArtinElem::scalar(c.ring(), Rational(0)); break; }
  auto vA = promoteElement(m.v, promoteTo(model, Rational(1)));
  for (size_t i = 0; i < m.invariants.size(); ++i) {
    ArtinElem expect =
        m.invariants[i].poly.eval((vA + b).coeffs) - m.invariants[i].poly.eval(vA.coeffs);
    if (pushed.get(1, static_cast<int>(i)) != expect) return false;
  }
  return true;
}

/// Gauge invariance of the pushforward: equivalent Maurer-Cartan elements
/// (same orbit of the degree-0 gauge action) push to the same base point.
inline bool verifyGaugeDescent(const AdjointModel &m, const MorphismMap &h,
                               const LieElement<ArtinElem> &b,
                               const LieElement<ArtinElem> &lambda) {
  int kmax = 0;
  for (const auto &p : m.invariants) kmax = std::max(kmax, p.degree);
  auto x = degree1Element(b);
  auto moved = gaugeAct(m.dgla, degree0Element(lambda), x);
  // the gauge action matches conjugation of v + b by exp(lambda)
  ArtinElem one = ArtinElem::constant(Rational(1));
  for (const auto &c : lambda.coeffs)
    if (c.ring()) { one = ArtinElem::scalar(c.ring(), Rational(1)); break; }
  auto vA = promoteElement(m.v, one);
  auto direct = expAd(lambda, vA + b) - vA;
  if (!(fromDegree(m, moved, 1) == direct)) return false;
  return mcPushforward(h, moved, kmax) == mcPushforward(h, x, kmax);
}

} // namespace linf
