#include "linf/invariants.hpp"

#include <algorithm>

namespace linf {

namespace {

using PolyMat = std::vector<std::vector<Polynomial>>;

PolyMat symbolicMatrix(const LieAlgebra &alg) {
  if (!alg.realization)
    throw std::invalid_argument(alg.name + ": invariant generators need a matrix realization");
  int s = rowCount((*alg.realization)[0]);
  PolyMat m(s, std::vector<Polynomial>(s, Polynomial(alg.dim)));
  for (int b = 0; b < alg.dim; ++b)
    for (int r = 0; r < s; ++r)
      for (int c = 0; c < s; ++c)
        if (!(*alg.realization)[b][r][c].isZero())
          m[r][c] += Polynomial::variable(alg.dim, b) * (*alg.realization)[b][r][c];
  return m;
}

Polynomial minorDet(const PolyMat &m, const std::vector<int> &idx) {
  if (idx.empty()) return Polynomial::constant(m.empty() ? 0 : m[0][0].nvars(), Rational(1));
  if (idx.size() == 1) return m[idx[0]][idx[0]];
  Polynomial det(m[0][0].nvars());
  std::vector<int> rest(idx.begin() + 1, idx.end());
  for (size_t c = 0; c < idx.size(); ++c) {
    std::vector<int> sub;
    for (size_t r = 0; r < idx.size(); ++r)
      if (r != c) sub.push_back(idx[r]);
    // expand along the first row, restricted to the principal block
    Polynomial cof = m[idx[0]][idx[c]];
    // recursive minor over rows rest, columns sub
    // build the submatrix explicitly to keep the recursion simple
    PolyMat subm(rest.size(), std::vector<Polynomial>(rest.size(), Polynomial(m[0][0].nvars())));
    for (size_t r = 0; r < rest.size(); ++r)
      for (size_t cc = 0; cc < sub.size(); ++cc) subm[r][cc] = m[rest[r]][sub[cc]];
    std::vector<int> all(rest.size());
    for (size_t r = 0; r < rest.size(); ++r) all[r] = static_cast<int>(r);
    Polynomial inner = minorDet(subm, all);
    Polynomial term = cof * inner;
    if (c % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

Polynomial principalMinorSum(const PolyMat &m, int order) {
  int s = static_cast<int>(m.size());
  Polynomial sum(m[0][0].nvars());
  std::vector<int> idx(order);
  // iterate over order-subsets of {0..s-1}
  std::vector<int> comb(order);
  for (int i = 0; i < order; ++i) comb[i] = i;
  for (;;) {
    sum += minorDet(m, comb);
    int i = order - 1;
    while (i >= 0 && comb[i] == s - order + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < order; ++j) comb[j] = comb[j - 1] + 1;
  }
  return sum;
}

Polynomial tracePower(const PolyMat &m, int d) {
  int s = static_cast<int>(m.size());
  PolyMat acc = m;
  for (int rep = 1; rep < d; ++rep) {
    PolyMat next(s, std::vector<Polynomial>(s, Polynomial(m[0][0].nvars())));
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < s; ++k)
        for (int j = 0; j < s; ++j) next[i][j] += acc[i][k] * m[k][j];
    acc = std::move(next);
  }
  Polynomial tr(m[0][0].nvars());
  for (int i = 0; i < s; ++i) tr += acc[i][i];
  return tr;
}

} // namespace

InvariantPolynomial::InvariantPolynomial(std::shared_ptr<const LieAlgebra> a, Polynomial p,
                                         std::string lbl, int invarianceGateTrials,
                                         uint64_t gateSeed)
    : alg(std::move(a)), degree(p.degree()), poly(std::move(p)), label(std::move(lbl)) {
  if (poly.nvars() != alg->dim)
    throw std::invalid_argument("InvariantPolynomial: coordinate count != dim");
  if (!poly.isHomogeneous())
    throw std::invalid_argument("InvariantPolynomial '" + label + "': not homogeneous");
  if (poly.isZero())
    throw std::invalid_argument("InvariantPolynomial '" + label + "': zero polynomial");
  Prng rng(gateSeed);
  for (int t = 0; t < invarianceGateTrials; ++t) {
    auto x = randomElement(alg, rng, Rational());
    auto v = randomElement(alg, rng, Rational());
    if (!checkLemmaInvariance(*this, v, x))
      throw std::invalid_argument("InvariantPolynomial '" + label +
                                  "': infinitesimal invariance fails on a sample");
  }
}

AdjointQuotient charPolyQuotient(const std::shared_ptr<const LieAlgebra> &alg) {
  PolyMat m = symbolicMatrix(*alg);
  AdjointQuotient q;
  for (int d : alg->degrees)
    q.components.emplace_back(alg, principalMinorSum(m, d), "charcoef" + std::to_string(d));
  return q;
}

std::vector<InvariantPolynomial> tracePowers(const std::shared_ptr<const LieAlgebra> &alg,
                                             int maxDegree) {
  PolyMat m = symbolicMatrix(*alg);
  std::vector<InvariantPolynomial> out;
  for (int d = 1; d <= maxDegree; ++d) {
    Polynomial tr = tracePower(m, d);
    if (tr.isZero()) continue; // tr(A) on sl(n)
    out.emplace_back(alg, std::move(tr), "trpow" + std::to_string(d));
  }
  return out;
}

std::vector<InvariantPolynomial> builtinInvariants(const std::shared_ptr<const LieAlgebra> &alg,
                                                   int maxTrace) {
  AdjointQuotient q = charPolyQuotient(alg);
  std::vector<InvariantPolynomial> out = std::move(q.components);
  for (auto &p : tracePowers(alg, maxTrace)) out.push_back(std::move(p));
  return out;
}

SymForm fullPolarisationForm(const InvariantPolynomial &p) {
  return [p](const std::vector<LieElement<ArtinElem>> &ws) {
    return polarizeFull(p, ws);
  };
}

bool checkFactorLemma(const SymForm &f, int d, const LinMap &lin,
                      const LieElement<Rational> &v,
                      const std::vector<LieElement<Rational>> &xs, Prng &rng) {
  int k = static_cast<int>(xs.size()) + 1;
  if (k > d) throw std::invalid_argument("checkFactorLemma: need k <= d");
  auto alg = v.alg;

  auto constElem = [&](const LieElement<Rational> &x) {
    return promoteElement(x, ArtinElem::constant(Rational(1)));
  };

  // symmetry validation on random samples
  for (int t = 0; d >= 2 && t < 4; ++t) {
    std::vector<LieElement<ArtinElem>> ws;
    for (int i = 0; i < d; ++i) ws.push_back(constElem(randomElement(alg, rng, Rational())));
    ArtinElem base = f(ws);
    int a = static_cast<int>(rng.uniform(0, d - 1));
    int b = (a + 1 + static_cast<int>(rng.uniform(0, d - 2))) % d;
    std::swap(ws[a], ws[b]);
    if (f(ws) != base)
      throw std::invalid_argument("checkFactorLemma: form is not symmetric");
  }

  // left side: symmetrized multilinear coefficient oracle. Symmetrizing
  // F o (L (x) 1^(d-1)) over the d slot positions contributes the factor d.
  auto ring = ArtinRing::squarefree(k - 1);
  LieElement<ArtinElem> w = LieElement<ArtinElem>::zero(alg);
  for (int i = 0; i < alg->dim; ++i) {
    ArtinElem y = ArtinElem::scalar(ring, v.coeffs[i]);
    for (int j = 0; j < k - 1; ++j) y += ArtinElem::variable(ring, j, xs[j].coeffs[i]);
    w.coeffs[i] = std::move(y);
  }
  std::vector<LieElement<ArtinElem>> slots(d, w);
  slots[0] = lin(w);
  Rational lhs = f(slots).coefficient(Expo(k - 1, 1)) * Rational(d);

  // right side: the two-term count
  std::vector<LieElement<ArtinElem>> t1;
  t1.push_back(lin(constElem(v)));
  for (const auto &x : xs) t1.push_back(constElem(x));
  for (int i = 0; i < d - k; ++i) t1.push_back(constElem(v));
  Rational rhs = f(t1).constantTerm() * Rational::factorial(d) / Rational::factorial(d - k);

  for (int j = 0; j < k - 1; ++j) {
    std::vector<LieElement<ArtinElem>> t2;
    t2.push_back(lin(constElem(xs[j])));
    for (int l = 0; l < k - 1; ++l)
      if (l != j) t2.push_back(constElem(xs[l]));
    for (int i = 0; i < d - k + 1; ++i) t2.push_back(constElem(v));
    rhs += f(t2).constantTerm() * Rational::factorial(d) / Rational::factorial(d - k + 1);
  }

  return lhs == rhs;
}

} // namespace linf
