#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "linf/artin.hpp"
#include "linf/linalg.hpp"
#include "linf/prng.hpp"
#include "linf/rational.hpp"

namespace linf {

/// Finite-dimensional Lie algebra given by structure constants, with an
/// optional exact matrix realization and the degree list of its invariant
/// generators. Antisymmetry, the Jacobi identity and realization consistency
/// are checked at construction.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
public:
  using SparseVec = std::vector<std::pair<int, Rational>>;

  std::string name;
  int dim = 0;
  std::vector<std::string> basisLabels;
  // table[i][j] = coordinates of [e_i, e_j]
  std::vector<std::vector<SparseVec>> table;
  std::optional<std::vector<MatQ>> realization; // dim matrices, each s x s
  std::vector<int> degrees;                     // invariant degrees d_i, ascending

  int rank() const { return static_cast<int>(degrees.size()); }
  int maxDegree() const { return degrees.empty() ? 0 : degrees.back(); }

  static std::shared_ptr<const LieAlgebra> gl(int n);
  static std::shared_ptr<const LieAlgebra> sl(int n);
  static std::shared_ptr<const LieAlgebra> builtin(const std::string &name, int n);

  /// Declarative algebra spec file; throws std::runtime_error on bad input.
  static std::shared_ptr<const LieAlgebra> fromSpecFile(const std::string &path);
  static std::shared_ptr<const LieAlgebra> fromSpecText(const std::string &text);

  /// Build from a matrix realization: structure constants are derived from
  /// exact commutators and expressed back in the given basis.
  static std::shared_ptr<const LieAlgebra> fromRealization(std::string name,
                                                           std::vector<std::string> labels,
                                                           std::vector<MatQ> matrices,
                                                           std::vector<int> degrees);

  void validate() const; // throws on violated invariants

  /// Coordinates of a realization-space matrix in the chosen basis
  /// (requires a realization; throws if the matrix is outside the span).
  VecQ coordsOf(const MatQ &m) const;

  /// Matrix of ad(x) acting on the algebra, columns indexed by basis.
  MatQ adMatrix(const VecQ &x) const;
};

template <class S>
struct LieElement {
  std::shared_ptr<const LieAlgebra> alg;
  std::vector<S> coeffs;

  LieElement() = default;
  LieElement(std::shared_ptr<const LieAlgebra> a, std::vector<S> c)
      : alg(std::move(a)), coeffs(std::move(c)) {
    if (static_cast<int>(coeffs.size()) != alg->dim)
      throw std::invalid_argument("LieElement: coefficient count != dim");
  }

  static LieElement zero(std::shared_ptr<const LieAlgebra> a) {
    int n = a->dim;
    return LieElement(std::move(a), std::vector<S>(n));
  }

  static LieElement basis(std::shared_ptr<const LieAlgebra> a, int i, const S &one) {
    LieElement e = zero(std::move(a));
    e.coeffs[i] = one;
    return e;
  }

  bool isZero() const {
    for (const auto &c : coeffs)
      if (!scalarIsZero(c)) return false;
    return true;
  }

  LieElement operator-() const {
    LieElement r = *this;
    for (auto &c : r.coeffs) c = -c;
    return r;
  }
  LieElement &operator+=(const LieElement &o) {
    requireSame(o);
    for (int i = 0; i < alg->dim; ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  LieElement &operator-=(const LieElement &o) { return *this += -o; }
  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Rational &c) {
    for (auto &v : a.coeffs) v = v * c;
    return a;
  }
  friend LieElement operator*(LieElement a, const S &c)
    requires(!std::is_same_v<S, Rational>)
  {
    for (auto &v : a.coeffs) v = v * c;
    return a;
  }
  friend bool operator==(const LieElement &a, const LieElement &b) {
    return (a - b).isZero();
  }

  void requireSame(const LieElement &o) const {
    if (alg.get() != o.alg.get())
      throw std::invalid_argument("LieElement: algebra mismatch");
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < alg->dim; ++i) {
      if (scalarIsZero(coeffs[i])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + scalarToString(coeffs[i]) + ")*" + alg->basisLabels[i];
    }
    return out.empty() ? "0" : out;
  }
};

/// Bilinear extension of the structure constants.
template <class S>
LieElement<S> bracket(const LieElement<S> &x, const LieElement<S> &y) {
  x.requireSame(y);
  LieElement<S> r = LieElement<S>::zero(x.alg);
  for (int i = 0; i < x.alg->dim; ++i) {
    if (scalarIsZero(x.coeffs[i])) continue;
    for (int j = 0; j < x.alg->dim; ++j) {
      if (scalarIsZero(y.coeffs[j])) continue;
      S prod = x.coeffs[i] * y.coeffs[j];
      for (const auto &[k, c] : x.alg->table[i][j]) r.coeffs[k] += prod * c;
    }
  }
  return r;
}

/// e^{ad lambda}(x) for lambda in g (x) m_A: finite series, since ad lambda is
/// nilpotent of index <= m = truncation order of the coefficient ring.
template <class K>
LieElement<TruncPoly<K>> expAd(const LieElement<TruncPoly<K>> &lambda,
                               const LieElement<TruncPoly<K>> &x) {
  lambda.requireSame(x);
  for (const auto &c : lambda.coeffs)
    if (!c.inMaximalIdeal())
      throw std::invalid_argument("expAd: lambda not in g (x) m_A");
  int m = 1;
  for (const auto &c : lambda.coeffs)
    if (c.ring()) m = std::max(m, c.ring()->truncationOrder);
  LieElement<TruncPoly<K>> sum = x, term = x;
  for (int j = 1; j < m; ++j) {
    term = bracket(lambda, term) * inverse(Rational(j));
    if (term.isZero()) break;
    sum += term;
  }
  return sum;
}

template <class S>
LieElement<S> promoteElement(const LieElement<Rational> &x, const S &model) {
  std::vector<S> c;
  c.reserve(x.coeffs.size());
  for (const auto &v : x.coeffs) c.push_back(promoteTo(model, v));
  return LieElement<S>(x.alg, std::move(c));
}

template <class S>
LieElement<S> randomElement(std::shared_ptr<const LieAlgebra> alg, Prng &rng, const S &model) {
  std::vector<S> c;
  for (int i = 0; i < alg->dim; ++i) c.push_back(promoteTo(model, rng.smallInt()));
  return LieElement<S>(std::move(alg), std::move(c));
}

} // namespace linf
