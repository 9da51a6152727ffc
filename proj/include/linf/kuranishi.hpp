#pragma once

#include <vector>

#include "linf/adjoint.hpp"

namespace linf {

/// A hull for the adjoint deformation model: a linear slice K through v,
/// chosen as the greedy complement of the image of ad(v) along the canonical
/// basis order, so that g = K (+) Im(ad v).
struct HullData {
  std::vector<int> sliceIndices;  // basis indices spanning K
  std::vector<VecQ> image;        // basis of Im(ad v)
  MatQ adv;                       // matrix of ad(v)
  MatQ decomposition;             // columns: [slice basis | adv], for splitting
};

inline HullData computeHull(const std::shared_ptr<const LieAlgebra> &alg,
                            const LieElement<Rational> &v) {
  HullData h;
  h.adv = alg->adMatrix(v.coeffs);
  h.image = imageBasis(h.adv);
  std::vector<VecQ> span = h.image;
  for (int i = 0; i < alg->dim; ++i) {
    VecQ e(alg->dim);
    e[i] = Rational(1);
    if (!inColumnSpace(fromColumns(span, alg->dim), e)) {
      span.push_back(e);
      h.sliceIndices.push_back(i);
    }
  }
  h.decomposition = zeroMatrix(alg->dim, static_cast<int>(h.sliceIndices.size()) + alg->dim);
  for (size_t j = 0; j < h.sliceIndices.size(); ++j)
    h.decomposition[h.sliceIndices[j]][j] = Rational(1);
  for (int i = 0; i < alg->dim; ++i)
    for (int j = 0; j < alg->dim; ++j)
      h.decomposition[i][h.sliceIndices.size() + j] = h.adv[i][j];
  return h;
}

/// The slice is a direct complement and maps isomorphically onto the
/// degree-1 cohomology of the adjoint model.
inline bool verifyHullTangent(const AdjointModel &m, const HullData &h) {
  int n = m.alg->dim;
  int imRank = static_cast<int>(h.image.size());
  if (static_cast<int>(h.sliceIndices.size()) + imRank != n) return false;
  std::vector<VecQ> all = h.image;
  for (int i : h.sliceIndices) {
    VecQ e(n);
    e[i] = Rational(1);
    all.push_back(e);
  }
  if (rank(fromColumns(all, n)) != n) return false;
  return cohomology(m.dgla, 1).dim == static_cast<int>(h.sliceIndices.size());
}

struct HullNormalization {
  bool ok = false;
  LieElement<ArtinElem> normalized; // gauge-equivalent element supported on K
};

/// Order-by-order gauge normalization: any deformation v + b is conjugated
/// into the slice v + K by solving (ad v) lambda_j = (image component of the
/// order-j part) one coefficient monomial at a time.
inline HullNormalization normalizeIntoHull(const AdjointModel &m, const HullData &h,
                                           const LieElement<ArtinElem> &b) {
  HullNormalization out;
  std::shared_ptr<const ArtinRing> ring;
  for (const auto &c : b.coeffs)
    if (c.ring()) { ring = c.ring(); break; }
  if (!ring) throw std::invalid_argument("normalizeIntoHull: no coefficient ring on b");
  auto vA = promoteElement(m.v, ArtinElem::scalar(ring, Rational(1)));
  int n = m.alg->dim;
  int sliceDim = static_cast<int>(h.sliceIndices.size());

  LieElement<ArtinElem> cur = b;
  for (int order = 1; order < ring->truncationOrder; ++order) {
    // collect the order-j coefficient monomials present in cur
    std::map<Expo, bool, GrlexLess> monos;
    for (const auto &c : cur.coeffs)
      for (const auto &[e, val] : c.terms())
        if (totalDegree(e) == order) monos[e] = true;
    LieElement<ArtinElem> lambda = LieElement<ArtinElem>::zero(m.alg);
    for (auto &c : lambda.coeffs) c = ArtinElem::zero(ring);
    bool any = false;
    for (const auto &[e, unused] : monos) {
      VecQ c(n);
      for (int i = 0; i < n; ++i) c[i] = cur.coeffs[i].coefficient(e);
      auto y = solve(h.decomposition, c);
      if (!y) return out; // cannot happen: decomposition spans g
      // entries [sliceDim..) give the gauge direction killing the image part
      ArtinElem mono = ArtinElem::scalar(ring, Rational(1));
      for (int vi = 0; vi < ring->numVars; ++vi)
        for (int rep = 0; rep < e[vi]; ++rep)
          mono *= ArtinElem::variable(ring, vi, Rational(1));
      for (int i = 0; i < n; ++i) {
        Rational mu = (*y)[sliceDim + i];
        if (!mu.isZero()) {
          lambda.coeffs[i] += mono * mu;
          any = true;
        }
      }
    }
    if (any) cur = expAd(lambda, vA + cur) - vA;
  }
  for (int i = 0; i < n; ++i) {
    bool inSlice = false;
    for (int s : h.sliceIndices)
      if (s == i) inSlice = true;
    if (!inSlice && !cur.coeffs[i].isZero()) return out;
  }
  out.ok = true;
  out.normalized = std::move(cur);
  return out;
}

} // namespace linf
