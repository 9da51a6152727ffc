#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linf/artin.hpp"
#include "linf/linalg.hpp"
#include "linf/rational.hpp"

namespace linf {

/// A finite-dimensional graded vector space: dimension and basis labels per
/// degree. Degrees not listed have dimension zero.
struct GradedSpace {
  std::map<int, int> dims;
  std::map<int, std::vector<std::string>> labels;

  int dim(int deg) const {
    auto it = dims.find(deg);
    return it == dims.end() ? 0 : it->second;
  }

  void addComponent(int deg, std::vector<std::string> lbls) {
    dims[deg] = static_cast<int>(lbls.size());
    labels[deg] = std::move(lbls);
  }

  int totalDim() const {
    int n = 0;
    for (const auto &[d, k] : dims) n += k;
    return n;
  }
};

/// Element of a graded space with coefficients in an exact scalar ring S.
template <class S>
struct GradedElement {
  std::map<int, std::vector<S>> comps; // degree -> coefficient vector

  static GradedElement zero() { return {}; }

  S &at(const GradedSpace &sp, int deg, int idx) {
    auto &v = comps[deg];
    if (v.empty()) v.resize(sp.dim(deg));
    return v.at(idx);
  }

  S get(int deg, int idx) const {
    auto it = comps.find(deg);
    if (it == comps.end() || idx >= static_cast<int>(it->second.size())) return S{};
    return it->second[idx];
  }

  bool isZero() const {
    for (const auto &[d, v] : comps)
      for (const auto &c : v)
        if (!scalarIsZero(c)) return false;
    return true;
  }

  /// True iff every nonzero coefficient sits in the stated degree.
  bool concentratedIn(int deg) const {
    for (const auto &[d, v] : comps) {
      if (d == deg) continue;
      for (const auto &c : v)
        if (!scalarIsZero(c)) return false;
    }
    return true;
  }

  GradedElement operator-() const {
    GradedElement r = *this;
    for (auto &[d, v] : r.comps)
      for (auto &c : v) c = -c;
    return r;
  }
  GradedElement &operator+=(const GradedElement &o) {
    for (const auto &[d, v] : o.comps) {
      auto &mine = comps[d];
      if (mine.size() < v.size()) mine.resize(v.size());
      for (size_t i = 0; i < v.size(); ++i) mine[i] += v[i];
    }
    return *this;
  }
  GradedElement &operator-=(const GradedElement &o) { return *this += -o; }
  friend GradedElement operator+(GradedElement a, const GradedElement &b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement &b) { return a -= b; }
  friend GradedElement operator*(GradedElement a, const Rational &c) {
    for (auto &[d, v] : a.comps)
      for (auto &x : v) x = x * c;
    return a;
  }
  template <class T>
  friend GradedElement operator*(GradedElement a, const T &c) {
    for (auto &[d, v] : a.comps)
      for (auto &x : v) x = x * c;
    return a;
  }
  friend bool operator==(const GradedElement &a, const GradedElement &b) {
    return (a - b).isZero();
  }
};

/// Differential graded Lie algebra with a chosen homogeneous basis: a degree
/// +1 differential (one matrix per degree) and a degree 0 bracket given on
/// basis pairs. An abelian complex is the special case of an empty bracket
/// table. d^2 = 0, graded antisymmetry, the Leibniz rule and the graded
/// Jacobi identity are all checked exactly by validate().
class Dgla {
public:
  using Sparse = std::vector<std::pair<int, Rational>>; // (index, coeff) in the target degree
  using Key = std::pair<std::pair<int, int>, std::pair<int, int>>;

  std::string name;
  GradedSpace space;
  std::map<int, MatQ> diff;  // diff[d]: dim(d+1) x dim(d)
  std::map<Key, Sparse> table;

  /// Record [e_i^p, e_j^q] = val and its graded-antisymmetric mirror.
  void setBracket(int p, int i, int q, int j, Sparse val) {
    Sparse mirror = val;
    Rational s = ((p * q) % 2 + 2) % 2 == 0 ? Rational(-1) : Rational(1); // -(-1)^{pq}
    for (auto &[k, c] : mirror) c *= s;
    if (!(p == q && i == j)) table[{{q, j}, {p, i}}] = std::move(mirror);
    table[{{p, i}, {q, j}}] = std::move(val);
  }

  Sparse basisBracket(int p, int i, int q, int j) const {
    auto it = table.find({{p, i}, {q, j}});
    return it == table.end() ? Sparse{} : it->second;
  }

  const MatQ *diffMatrix(int deg) const {
    auto it = diff.find(deg);
    return it == diff.end() ? nullptr : &it->second;
  }

  void validate() const;
};

template <class S>
GradedElement<S> applyDiff(const Dgla &g, const GradedElement<S> &x) {
  GradedElement<S> r;
  for (const auto &[d, v] : x.comps) {
    const MatQ *m = g.diffMatrix(d);
    if (!m) continue;
    int rows = rowCount(*m);
    if (rows == 0) continue;
    auto &out = r.comps[d + 1];
    out.resize(rows);
    for (int i = 0; i < rows; ++i)
      for (size_t j = 0; j < v.size(); ++j)
        if (!(*m)[i][j].isZero() && !scalarIsZero(v[j])) out[i] += v[j] * (*m)[i][j];
  }
  return r;
}

template <class S>
GradedElement<S> dglaBracket(const Dgla &g, const GradedElement<S> &x, const GradedElement<S> &y) {
  GradedElement<S> r;
  for (const auto &[p, xv] : x.comps)
    for (const auto &[q, yv] : y.comps)
      for (size_t i = 0; i < xv.size(); ++i) {
        if (scalarIsZero(xv[i])) continue;
        for (size_t j = 0; j < yv.size(); ++j) {
          if (scalarIsZero(yv[j])) continue;
          auto br = g.basisBracket(p, static_cast<int>(i), q, static_cast<int>(j));
          if (br.empty()) continue;
          S prod = xv[i] * yv[j];
          auto &out = r.comps[p + q];
          if (static_cast<int>(out.size()) < g.space.dim(p + q)) out.resize(g.space.dim(p + q));
          for (const auto &[k, c] : br) out[k] += prod * c;
        }
      }
  return r;
}

/// Maurer-Cartan defect d(x) + (1/2)[x, x] of a degree-1 element.
template <class S>
GradedElement<S> mcDefect(const Dgla &g, const GradedElement<S> &x) {
  if (!x.concentratedIn(1)) throw std::invalid_argument("mcDefect: element not of degree 1");
  return applyDiff(g, x) + dglaBracket(g, x, x) * Rational(1, 2);
}

/// Gauge action of a degree-0 parameter lambda with coefficients in the
/// maximal ideal:
///   exp(ad lambda)(x) - sum_{j>=0} (ad lambda)^j (d lambda) / (j+1)!.
/// Finite because ad lambda is nilpotent over the truncated coefficients.
template <class K>
GradedElement<TruncPoly<K>> gaugeAct(const Dgla &g, const GradedElement<TruncPoly<K>> &lambda,
                                     const GradedElement<TruncPoly<K>> &x) {
  if (!lambda.concentratedIn(0)) throw std::invalid_argument("gaugeAct: lambda not of degree 0");
  int m = 1;
  for (const auto &[d, v] : lambda.comps)
    for (const auto &c : v) {
      if (!c.inMaximalIdeal()) throw std::invalid_argument("gaugeAct: lambda not in m_A");
      if (c.ring()) m = std::max(m, c.ring()->truncationOrder);
    }
  GradedElement<TruncPoly<K>> sum = x, term = x;
  for (int j = 1; j < m; ++j) {
    term = dglaBracket(g, lambda, term) * inverse(Rational(j));
    if (term.isZero()) break;
    sum += term;
  }
  GradedElement<TruncPoly<K>> dl = applyDiff(g, lambda);
  GradedElement<TruncPoly<K>> tail = dl * Rational(1, 1);
  GradedElement<TruncPoly<K>> acc = tail; // j = 0 term: d lambda / 1!
  for (int j = 1; j < m; ++j) {
    tail = dglaBracket(g, lambda, tail) * inverse(Rational(j + 1));
    if (tail.isZero()) break;
    acc += tail;
  }
  return sum - acc;
}

/// Basis factor of the graded space; within the symmetric coalgebra on the
/// shift, its parity is (degree - 1) mod 2.
struct Factor {
  int degree;
  int index;
  auto operator<=>(const Factor &) const = default;
};

inline int shiftedParity(int degree) { return ((degree - 1) % 2 + 2) % 2; }

using Word = std::vector<Factor>; // canonical: sorted ascending
using WordSum = std::map<Word, Rational>;

/// Sort a factor tuple into canonical order, accumulating the Koszul sign of
/// the adjacent transpositions. Returns sign 0 when an odd factor repeats.
struct NormalWord {
  Word word;
  Rational sign;
};

inline NormalWord normalizeWord(Word w) {
  Rational sign(1);
  // insertion sort; each adjacent swap of parities p, q contributes (-1)^{pq}
  for (size_t i = 1; i < w.size(); ++i) {
    size_t j = i;
    while (j > 0 && w[j] < w[j - 1]) {
      if (shiftedParity(w[j].degree) == 1 && shiftedParity(w[j - 1].degree) == 1) sign = -sign;
      std::swap(w[j], w[j - 1]);
      --j;
    }
  }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && shiftedParity(w[i].degree) == 1) return {Word{}, Rational(0)};
  return {std::move(w), sign};
}

inline void addWord(WordSum &sum, Word w, const Rational &c) {
  if (c.isZero()) return;
  NormalWord n = normalizeWord(std::move(w));
  if (n.sign.isZero()) return;
  auto it = sum.find(n.word);
  Rational v = c * n.sign;
  if (it == sum.end()) {
    sum.emplace(std::move(n.word), std::move(v));
  } else {
    it->second += v;
    if (it->second.isZero()) sum.erase(it);
  }
}

using FactorSum = std::vector<std::pair<Factor, Rational>>;

/// q_1(a) = -d(a).
inline FactorSum q1(const Dgla &g, const Factor &a) {
  FactorSum out;
  const MatQ *m = g.diffMatrix(a.degree);
  if (!m) return out;
  for (int i = 0; i < rowCount(*m); ++i)
    if (!(*m)[i][a.index].isZero()) out.push_back({{a.degree + 1, i}, -(*m)[i][a.index]});
  return out;
}

/// q_2(a, b) = (-1)^{deg a} [a, b]; graded-symmetric for the shifted parity.
inline FactorSum q2(const Dgla &g, const Factor &a, const Factor &b) {
  FactorSum out;
  Rational s = a.degree % 2 == 0 ? Rational(1) : Rational(-1);
  for (const auto &[k, c] : g.basisBracket(a.degree, a.index, b.degree, b.index))
    out.push_back({{a.degree + b.degree, k}, s * c});
  return out;
}

/// One application of the coderivation determined by q_1, q_2 to a word:
/// sum over singletons (q_1) and pairs (q_2) with extraction Koszul signs.
inline WordSum coderivative(const Dgla &g, const Word &w) {
  WordSum out;
  int k = static_cast<int>(w.size());
  auto extractSign = [&](int i) {
    Rational s(1);
    for (int l = 0; l < i; ++l)
      if (shiftedParity(w[i].degree) == 1 && shiftedParity(w[l].degree) == 1) s = -s;
    return s;
  };
  for (int i = 0; i < k; ++i) {
    Rational eps = extractSign(i);
    for (const auto &[b, c] : q1(g, w[i])) {
      Word nw;
      nw.push_back(b);
      for (int l = 0; l < k; ++l)
        if (l != i) nw.push_back(w[l]);
      addWord(out, std::move(nw), eps * c);
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Rational eps = extractSign(i);
      for (int l = 0; l < j; ++l)
        if (l != i && shiftedParity(w[j].degree) == 1 && shiftedParity(w[l].degree) == 1)
          eps = -eps;
      for (const auto &[b, c] : q2(g, w[i], w[j])) {
        Word nw;
        nw.push_back(b);
        for (int l = 0; l < k; ++l)
          if (l != i && l != j) nw.push_back(w[l]);
        addWord(out, std::move(nw), eps * c);
      }
    }
  return out;
}

/// Q(Q(w)) = 0: the coderivation built from q_1, q_2 squares to zero exactly
/// when d^2 = 0, Leibniz and graded Jacobi hold with consistent signs.
inline bool checkCodifferential(const Dgla &g, const Word &w) {
  WordSum once = coderivative(g, w);
  WordSum twice;
  for (const auto &[w1, c1] : once)
    for (const auto &[w2, c2] : coderivative(g, w1)) addWord(twice, w2, c1 * c2);
  return twice.empty();
}

/// Collection {h_k} of the Taylor coefficients of an L-infinity morphism into
/// an abelian complex, as a single evaluation handle on canonical words.
using MorphismMap = std::function<GradedElement<Rational>(const Word &)>;

/// Morphism equation on one word: h(Q w) = hat q_1 (h(w)) with hat q_1 = -d.
inline bool checkMorphismWord(const Dgla &src, const Dgla &tgt, const MorphismMap &h,
                              const Word &w) {
  GradedElement<Rational> lhs;
  for (const auto &[w1, c] : coderivative(src, w)) lhs += h(w1) * c;
  GradedElement<Rational> rhs = -applyDiff(tgt, h(w));
  return (lhs - rhs).isZero();
}

/// Enumerate all canonical words of the given length over the listed degrees
/// (non-decreasing factor tuples; odd repeats dropped).
inline std::vector<Word> enumerateWords(const GradedSpace &sp, const std::vector<int> &degrees,
                                        int length) {
  std::vector<Factor> pool;
  for (int d : degrees)
    for (int i = 0; i < sp.dim(d); ++i) pool.push_back({d, i});
  std::vector<Word> out;
  Word cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (static_cast<int>(cur.size()) == length) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      if (!cur.empty() && cur.back() == pool[i] && shiftedParity(pool[i].degree) == 1) continue;
      cur.push_back(pool[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Pushforward of a Maurer-Cartan element along {h_k}:
///   sum_k (1/k!) h_k(x, .., x),
/// expanded over non-decreasing basis tuples with multinomial weights. The
/// element must be concentrated in degree 1 (even shifted parity), so no
/// Koszul signs arise from reordering.
template <class K>
GradedElement<TruncPoly<K>> mcPushforward(const MorphismMap &h,
                                          const GradedElement<TruncPoly<K>> &x, int kmax) {
  if (!x.concentratedIn(1))
    throw std::invalid_argument("mcPushforward: element not of degree 1");
  std::vector<std::pair<Factor, TruncPoly<K>>> entries;
  for (const auto &[d, v] : x.comps)
    for (size_t i = 0; i < v.size(); ++i)
      if (!scalarIsZero(v[i])) entries.push_back({{d, static_cast<int>(i)}, v[i]});

  GradedElement<TruncPoly<K>> out;
  TruncPoly<K> model = entries.empty() ? TruncPoly<K>{} : entries[0].second;

  Word word;
  TruncPoly<K> coeff = promoteTo(model, Rational(1));
  std::function<void(size_t, int)> rec = [&](size_t start, int depth) {
    if (depth > 0) {
      // multinomial weight 1 / prod (multiplicities!)
      Rational weight(1);
      int run = 1;
      for (size_t i = 1; i < word.size(); ++i) {
        if (word[i] == word[i - 1]) {
          ++run;
          weight = weight * Rational(1, run);
        } else {
          run = 1;
        }
      }
      GradedElement<Rational> val = h(word);
      for (const auto &[dd, vv] : val.comps)
        for (size_t ii = 0; ii < vv.size(); ++ii) {
          if (vv[ii].isZero()) continue;
          auto &slot = out.comps[dd];
          if (slot.size() <= ii) slot.resize(ii + 1);
          slot[ii] += coeff * (vv[ii] * weight);
        }
    }
    if (depth == kmax) return;
    for (size_t i = start; i < entries.size(); ++i) {
      word.push_back(entries[i].first);
      TruncPoly<K> saved = coeff;
      coeff = coeff * entries[i].second;
      if (!coeff.isZero()) rec(i, depth + 1);
      coeff = saved;
      word.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

/// Cohomology of the complex in one degree: dim ker d_deg - rank d_{deg-1},
/// with representatives completing the image to the kernel.
struct Cohomology {
  int dim = 0;
  std::vector<VecQ> representatives;
};

inline Cohomology cohomology(const Dgla &g, int degree) {
  int n = g.space.dim(degree);
  const MatQ *dOut = g.diffMatrix(degree);
  MatQ out = dOut ? *dOut : zeroMatrix(0, n);
  std::vector<VecQ> ker = kernelBasis(out, n);

  const MatQ *dIn = g.diffMatrix(degree - 1);
  std::vector<VecQ> im = dIn ? imageBasis(*dIn) : std::vector<VecQ>{};

  // greedily extend the image basis to the kernel
  std::vector<VecQ> span = im;
  Cohomology c;
  for (const auto &v : ker) {
    MatQ m = fromColumns(span, n);
    if (!inColumnSpace(m, v)) {
      span.push_back(v);
      c.representatives.push_back(v);
      ++c.dim;
    }
  }
  return c;
}

} // namespace linf
