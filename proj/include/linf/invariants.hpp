#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "linf/artin.hpp"
#include "linf/lie.hpp"
#include "linf/poly.hpp"
#include "linf/prng.hpp"

namespace linf {

/// A homogeneous invariant polynomial on g. Homogeneity is checked
/// structurally at construction; infinitesimal invariance (vanishing of the
/// Lie derivative along any orbit direction) is checked on seeded samples.
class InvariantPolynomial {
public:
  std::shared_ptr<const LieAlgebra> alg;
  int degree;
  Polynomial poly; // in the dim basis coordinates
  std::string label;

  InvariantPolynomial(std::shared_ptr<const LieAlgebra> a, Polynomial p, std::string lbl,
                      int invarianceGateTrials = 8, uint64_t gateSeed = 0xfeedULL);
};

struct AdjointQuotient {
  std::vector<InvariantPolynomial> components; // ordered by ascending degree

  int rank() const { return static_cast<int>(components.size()); }
};

/// Coefficients of the characteristic polynomial of the realization matrix
/// (sums of principal minors), one generator per stored invariant degree.
AdjointQuotient charPolyQuotient(const std::shared_ptr<const LieAlgebra> &alg);

/// Trace powers tr(A^d) for 1 <= d <= maxDegree (degree-1 entry dropped when
/// identically zero, e.g. on sl(n)).
std::vector<InvariantPolynomial> tracePowers(const std::shared_ptr<const LieAlgebra> &alg,
                                             int maxDegree);

/// All built-in invariant generators for a built-in algebra: characteristic
/// polynomial coefficients plus trace powers of degree <= maxTrace.
std::vector<InvariantPolynomial> builtinInvariants(const std::shared_ptr<const LieAlgebra> &alg,
                                                   int maxTrace = 4);

/// P_{dk}(p)(X_1..X_k; v): coefficient of t_1...t_k in p(v + sum t_i X_i),
/// computed over the nilpotent ring with t_i^2 = 0 adjoined to the scalars.
/// Symmetric and multilinear in the args; identically zero for k > deg p.
template <class S>
S polarize(const InvariantPolynomial &p, int k, const std::vector<LieElement<S>> &args,
           const LieElement<S> &v) {
  if (k < 0) throw std::invalid_argument("polarize: negative k");
  if (static_cast<int>(args.size()) != k)
    throw std::invalid_argument("polarize: need exactly k arguments");
  for (const auto &x : args)
    if (x.alg.get() != p.alg.get()) throw std::invalid_argument("polarize: algebra mismatch");
  if (v.alg.get() != p.alg.get()) throw std::invalid_argument("polarize: algebra mismatch");
  S model = v.coeffs.empty() ? S{} : v.coeffs[0];
  if (k == 0) return p.poly.eval(v.coeffs);
  if (k > p.degree) return promoteTo(model, Rational(0));

  using R = TruncPoly<S>;
  auto ring = ArtinRing::squarefree(k);
  std::vector<R> ys;
  ys.reserve(p.alg->dim);
  for (int i = 0; i < p.alg->dim; ++i) {
    R y = R::scalar(ring, v.coeffs[i]);
    for (int j = 0; j < k; ++j) y += R::variable(ring, j, args[j].coeffs[i]);
    ys.push_back(std::move(y));
  }
  return p.poly.eval(ys).coefficient(Expo(k, 1));
}

/// Full polarisation P_{dd}(p)(w_1..w_d): multilinear coefficient of p at 0.
template <class S>
S polarizeFull(const InvariantPolynomial &p, const std::vector<LieElement<S>> &ws) {
  return polarize(p, p.degree, ws, LieElement<S>::zero(p.alg));
}

/// Computes P_{dk} both directly and through (1/(d-k)!) P_{dd}(v..v, args),
/// throwing on internal disagreement; returns the common value.
template <class S>
S polarizeChecked(const InvariantPolynomial &p, int k, const std::vector<LieElement<S>> &args,
                  const LieElement<S> &v) {
  if (k > p.degree) throw std::invalid_argument("polarizeChecked: k > degree");
  S direct = polarize(p, k, args, v);
  std::vector<LieElement<S>> full(p.degree - k, v);
  full.insert(full.end(), args.begin(), args.end());
  S viaFull = polarizeFull(p, full) * inverse(Rational::factorial(p.degree - k));
  if (!scalarIsZero(direct - viaFull))
    throw std::logic_error("polarize: direct and full-polarisation routes disagree");
  return direct;
}

/// Component-wise evaluation of the adjoint quotient.
template <class S>
std::vector<S> chi(const AdjointQuotient &q, const LieElement<S> &v) {
  std::vector<S> out;
  out.reserve(q.components.size());
  for (const auto &p : q.components) out.push_back(p.poly.eval(v.coeffs));
  return out;
}

/// Taylor identity: p(v+X) - p(v) = sum_k (1/k!) P_{dk}(p)(X..X; v).
template <class S>
bool checkTaylor(const InvariantPolynomial &p, const LieElement<S> &v, const LieElement<S> &x) {
  S lhs = p.poly.eval((v + x).coeffs) - p.poly.eval(v.coeffs);
  S model = v.coeffs.empty() ? S{} : v.coeffs[0];
  S rhs = promoteTo(model, Rational(0));
  for (int k = 1; k <= p.degree; ++k) {
    std::vector<LieElement<S>> args(k, x);
    rhs += polarize(p, k, args, v) * inverse(Rational::factorial(k));
  }
  return scalarIsZero(lhs - rhs);
}

/// Infinitesimal invariance: P_{d1}(p)([X,v]; v) = 0.
template <class S>
bool checkLemmaInvariance(const InvariantPolynomial &p, const LieElement<S> &v,
                          const LieElement<S> &x) {
  return scalarIsZero(polarize(p, 1, {bracket(x, v)}, v));
}

/// P_{dk}(p)([Y,v],X_1..X_{k-1}; v) + sum_j P_{d,k-1}(p)([Y,X_j],rest; v) = 0.
template <class S>
bool checkFunnyIdentity(const InvariantPolynomial &p, int k, const LieElement<S> &y,
                        const std::vector<LieElement<S>> &xs, const LieElement<S> &v) {
  if (k < 2 || k > p.degree) throw std::invalid_argument("checkFunnyIdentity: need 2 <= k <= d");
  if (static_cast<int>(xs.size()) != k - 1)
    throw std::invalid_argument("checkFunnyIdentity: need k-1 X arguments");
  std::vector<LieElement<S>> first = {bracket(y, v)};
  first.insert(first.end(), xs.begin(), xs.end());
  S total = polarize(p, k, first, v);
  for (int j = 0; j < k - 1; ++j) {
    std::vector<LieElement<S>> rest = {bracket(y, xs[j])};
    for (int l = 0; l < k - 1; ++l)
      if (l != j) rest.push_back(xs[l]);
    total += polarize(p, k - 1, rest, v);
  }
  return scalarIsZero(total);
}

/// A symmetric d-linear form given as an evaluation handle over exact
/// Artin-coefficient arguments (dense rank-d tensors would be too large).
using SymForm = std::function<ArtinElem(const std::vector<LieElement<ArtinElem>> &)>;
using LinMap = std::function<LieElement<ArtinElem>(const LieElement<ArtinElem> &)>;

SymForm fullPolarisationForm(const InvariantPolynomial &p);

/// Term-counting identity: the symmetrized multilinear part of
/// F(L(w), w, .., w) at w = v + sum X_i equals
///   d!/(d-k)! F(L(v),X_1..X_{k-1},v..v)
///   + sum_j d!/(d-k+1)! F(L(X_j),rest,v..v).
/// The left side is the brute-force coefficient oracle; F's symmetry is
/// validated on random permutation samples first.
bool checkFactorLemma(const SymForm &f, int d, const LinMap &lin,
                      const LieElement<Rational> &v,
                      const std::vector<LieElement<Rational>> &xs, Prng &rng);

} // namespace linf
