#pragma once

#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "linf/rational.hpp"

namespace linf {

using Expo = std::vector<int>;

inline int totalDegree(const Expo &e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded-lex order on exponent vectors: ascending total degree, then
/// lexicographic. Fixes the canonical serialization of ring elements.
struct GrlexLess {
  bool operator()(const Expo &a, const Expo &b) const {
    int da = totalDegree(a), db = totalDegree(b);
    if (da != db) return da < db;
    return a > b; // within a degree, higher power of the earliest variable first
  }
};

/// Truncated polynomial ring Q[t_1..t_r] / (monomials of total degree >= m),
/// optionally with per-variable nilpotency caps (t_i^cap = 0). The cap-free
/// ring with r >= 1 is a local Artin algebra with maximal ideal (t_1..t_r).
struct ArtinRing {
  int numVars;
  int truncationOrder;              // total degree >= m vanishes
  std::vector<int> varCaps;         // empty, or per-variable cap: exponent >= cap vanishes
  std::vector<std::string> varNames;

  ArtinRing(int r, int m, std::vector<int> caps = {}, std::vector<std::string> names = {})
      : numVars(r), truncationOrder(m), varCaps(std::move(caps)), varNames(std::move(names)) {
    if (r < 0 || m < 1) throw std::invalid_argument("ArtinRing: need r >= 0, m >= 1");
    if (!varCaps.empty() && static_cast<int>(varCaps.size()) != r)
      throw std::invalid_argument("ArtinRing: cap list size mismatch");
    if (varNames.empty()) {
      for (int i = 0; i < r; ++i) varNames.push_back("t" + std::to_string(i + 1));
    }
  }

  static std::shared_ptr<const ArtinRing> make(int r, int m) {
    return std::make_shared<const ArtinRing>(r, m);
  }

  /// Ring with the given squarefree variables adjoined in front: used for
  /// multilinear coefficient extraction on top of an existing scalar ring.
  static std::shared_ptr<const ArtinRing> squarefree(int k) {
    std::vector<int> caps(k, 2);
    return std::make_shared<const ArtinRing>(k, k + 1, caps);
  }

  bool monomialVanishes(const Expo &e) const {
    if (totalDegree(e) >= truncationOrder) return true;
    if (!varCaps.empty())
      for (int i = 0; i < numVars; ++i)
        if (e[i] >= varCaps[i]) return true;
    return false;
  }

  bool sameAs(const ArtinRing &o) const {
    return numVars == o.numVars && truncationOrder == o.truncationOrder && varCaps == o.varCaps;
  }
};

/// Element of a truncated polynomial ring over an exact base scalar K
/// (K = Rational, or another TruncPoly for nested coefficient extraction).
/// A null ring pointer denotes a plain constant, compatible with any ring.
template <class K>
class TruncPoly {
  std::shared_ptr<const ArtinRing> ring_;
  std::map<Expo, K, GrlexLess> coeffs_; // no zero values stored

  void insert(const Expo &e, const K &c) {
    if (isZeroScalar(c)) return;
    if (ring_ && ring_->monomialVanishes(e)) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_.emplace(e, c);
    } else {
      it->second += c;
      if (isZeroScalar(it->second)) coeffs_.erase(it);
    }
  }

  static bool isZeroScalar(const Rational &c) { return c.isZero(); }
  template <class K2>
  static bool isZeroScalar(const TruncPoly<K2> &c) { return c.isZero(); }

  void adoptRing(const TruncPoly &o) {
    if (!ring_) {
      ring_ = o.ring_;
    } else if (o.ring_ && !ring_->sameAs(*o.ring_)) {
      throw std::invalid_argument("TruncPoly: ring mismatch");
    }
  }

public:
  TruncPoly() = default;

  static TruncPoly zero(std::shared_ptr<const ArtinRing> ring) {
    TruncPoly p;
    p.ring_ = std::move(ring);
    return p;
  }

  static TruncPoly constant(const K &c) {
    TruncPoly p;
    p.insert({}, c);
    return p;
  }

  static TruncPoly scalar(std::shared_ptr<const ArtinRing> ring, const K &c) {
    TruncPoly p = zero(std::move(ring));
    p.insert(p.ring_ ? Expo(p.ring_->numVars, 0) : Expo{}, c);
    return p;
  }

  static TruncPoly variable(std::shared_ptr<const ArtinRing> ring, int i, const K &c) {
    if (i < 0 || i >= ring->numVars) throw std::invalid_argument("TruncPoly: bad variable index");
    TruncPoly p = zero(ring);
    Expo e(ring->numVars, 0);
    e[i] = 1;
    p.insert(e, c);
    return p;
  }

  const std::shared_ptr<const ArtinRing> &ring() const { return ring_; }
  bool isZero() const { return coeffs_.empty(); }
  const std::map<Expo, K, GrlexLess> &terms() const { return coeffs_; }

  K coefficient(const Expo &e) const {
    Expo key = e;
    if (!ring_) {
      if (totalDegree(e) != 0) return K{};
      key = Expo{};
    }
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? K{} : it->second;
  }

  K constantTerm() const {
    return coefficient(ring_ ? Expo(ring_->numVars, 0) : Expo{});
  }

  /// True iff the element lies in the maximal ideal (t_1..t_r).
  bool inMaximalIdeal() const { return isZeroScalar(constantTerm()); }

  TruncPoly operator-() const {
    TruncPoly r = *this;
    for (auto &[e, c] : r.coeffs_) c = -c;
    return r;
  }

  TruncPoly &operator+=(const TruncPoly &o) {
    adoptRing(o);
    if (!ring_ && o.ring_) ring_ = o.ring_;
    for (const auto &[e, c] : o.coeffs_) {
      Expo key = e;
      if (ring_ && static_cast<int>(key.size()) != ring_->numVars) key.resize(ring_->numVars, 0);
      insert(key, c);
    }
    return *this;
  }
  TruncPoly &operator-=(const TruncPoly &o) { return *this += -o; }

  friend TruncPoly operator+(TruncPoly a, const TruncPoly &b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly &b) { return a -= b; }

  friend TruncPoly operator*(const TruncPoly &a, const TruncPoly &b) {
    TruncPoly r;
    r.ring_ = a.ring_ ? a.ring_ : b.ring_;
    if (a.ring_ && b.ring_ && !a.ring_->sameAs(*b.ring_))
      throw std::invalid_argument("TruncPoly: ring mismatch");
    for (const auto &[ea, ca] : a.coeffs_)
      for (const auto &[eb, cb] : b.coeffs_) {
        Expo e = ea;
        if (r.ring_ && static_cast<int>(e.size()) != r.ring_->numVars) e.resize(r.ring_->numVars, 0);
        Expo e2 = eb;
        if (r.ring_ && static_cast<int>(e2.size()) != r.ring_->numVars) e2.resize(r.ring_->numVars, 0);
        for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.insert(e, ca * cb);
      }
    return r;
  }
  TruncPoly &operator*=(const TruncPoly &o) { return *this = *this * o; }

  TruncPoly &operator*=(const Rational &c) {
    if (c.isZero()) { coeffs_.clear(); return *this; }
    for (auto &[e, v] : coeffs_) v = scaleScalar(v, c);
    return *this;
  }
  friend TruncPoly operator*(TruncPoly a, const Rational &c) { return a *= c; }
  friend TruncPoly operator*(const Rational &c, TruncPoly a) { return a *= c; }

  friend bool operator==(const TruncPoly &a, const TruncPoly &b) {
    return (a - b).isZero();
  }
  friend bool operator!=(const TruncPoly &a, const TruncPoly &b) { return !(a == b); }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto &[e, c] : coeffs_) {
      if (!out.empty()) out += " + ";
      out += scalarStr(c);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*" + ring_->varNames[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

private:
  static Rational scaleScalar(const Rational &v, const Rational &c) { return v * c; }
  template <class K2>
  static TruncPoly<K2> scaleScalar(const TruncPoly<K2> &v, const Rational &c) { return v * c; }
  static std::string scalarStr(const Rational &c) { return c.str(); }
  template <class K2>
  static std::string scalarStr(const TruncPoly<K2> &c) { return "(" + c.str() + ")"; }
};

using ArtinElem = TruncPoly<Rational>;

/// Promote a rational constant into the same scalar type/ring as `model`.
inline Rational promoteTo(const Rational & /*model*/, const Rational &c) { return c; }
template <class K>
TruncPoly<K> promoteTo(const TruncPoly<K> &model, const Rational &c) {
  K base = promoteTo(model.isZero() ? K{} : model.terms().begin()->second, c);
  return TruncPoly<K>::scalar(model.ring(), base);
}

inline bool scalarIsZero(const Rational &c) { return c.isZero(); }
template <class K>
bool scalarIsZero(const TruncPoly<K> &c) { return c.isZero(); }

inline std::string scalarToString(const Rational &c) { return c.str(); }
template <class K>
std::string scalarToString(const TruncPoly<K> &c) { return c.str(); }

/// A principal small extension A1 = Q[t]/t^(r+1) -> A2 = Q[t]/t^r with the
/// truncation projection; the kernel (t^r) is annihilated by the maximal ideal.
struct SmallExtension {
  std::shared_ptr<const ArtinRing> total;   // A1
  std::shared_ptr<const ArtinRing> quotient; // A2

  ArtinElem project(const ArtinElem &a) const {
    if (!a.ring() || !a.ring()->sameAs(*total))
      throw std::invalid_argument("SmallExtension: element not in A1");
    ArtinElem out = ArtinElem::zero(quotient);
    for (const auto &[e, c] : a.terms()) {
      ArtinElem mono = ArtinElem::scalar(quotient, c);
      for (int i = 0; i < e[0]; ++i) mono *= ArtinElem::variable(quotient, 0, Rational(1));
      out += mono;
    }
    return out;
  }
};

inline SmallExtension smallExtensionPair(int r) {
  if (r < 2) throw std::invalid_argument("smallExtensionPair: need r >= 2");
  return SmallExtension{ArtinRing::make(1, r + 1), ArtinRing::make(1, r)};
}

} // namespace linf
