#pragma once

#include <map>
#include <string>
#include <vector>

#include "linf/artin.hpp"
#include "linf/rational.hpp"

namespace linf {

/// Sparse multivariate polynomial over Q in a fixed number of coordinates.
/// Evaluation is generic over any exact coefficient ring (Rational or a
/// truncated polynomial ring), which is what makes coefficient-extraction
/// oracles possible without any symbolic differentiation.
class Polynomial {
  int nvars_ = 0;
  std::map<Expo, Rational, GrlexLess> terms_;

  void insert(const Expo &e, const Rational &c) {
    if (c.isZero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rational &c) {
    Polynomial p(nvars);
    p.insert(Expo(nvars, 0), c);
    return p;
  }
  static Polynomial variable(int nvars, int i) {
    Polynomial p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.insert(e, Rational(1));
    return p;
  }

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Expo, Rational, GrlexLess> &terms() const { return terms_; }

  int degree() const {
    int d = 0;
    for (const auto &[e, c] : terms_) d = std::max(d, totalDegree(e));
    return d;
  }

  bool isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = totalDegree(terms_.begin()->first);
    for (const auto &[e, c] : terms_)
      if (totalDegree(e) != d) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto &[e, c] : r.terms_) c = -c;
    return r;
  }
  Polynomial &operator+=(const Polynomial &o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
    for (const auto &[e, c] : o.terms_) insert(e, c);
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) { return *this += -o; }
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial: nvars mismatch");
    Polynomial r(a.nvars_);
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        Expo e = ea;
        for (int i = 0; i < r.nvars_; ++i) e[i] += eb[i];
        r.insert(e, ca * cb);
      }
    return r;
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
  friend Polynomial operator*(Polynomial a, const Rational &c) {
    Polynomial r(a.nvars_);
    for (auto &[e, v] : a.terms_) r.insert(e, v * c);
    return r;
  }
  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return (a - b).isZero();
  }

  Polynomial pow(int e) const {
    Polynomial r = constant(nvars_, Rational(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  template <class S>
  S eval(const std::vector<S> &xs) const {
    if (static_cast<int>(xs.size()) != nvars_)
      throw std::invalid_argument("Polynomial::eval: argument count mismatch");
    S model = xs.empty() ? S{} : xs[0];
    S acc = promoteTo(model, Rational(0));
    for (const auto &[e, c] : terms_) {
      S term = promoteTo(model, c);
      for (int i = 0; i < nvars_; ++i)
        for (int rep = 0; rep < e[i]; ++rep) term = term * xs[i];
      acc += term;
    }
    return acc;
  }

  /// Parse an expression over the given coordinate names: +, -, *, ^,
  /// parentheses, integer and a/b rational literals. Throws on bad syntax.
  static Polynomial parse(const std::string &text, const std::vector<std::string> &names);

  std::string str(const std::vector<std::string> &names) const;
};

} // namespace linf
