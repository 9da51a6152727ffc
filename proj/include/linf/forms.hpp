#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linf/rational.hpp"

namespace linf {

/// Exterior algebra on two families of odd generators: a "horizontal" ones
/// (bidegree (1,0)) and b "vertical" ones (bidegree (0,1)), with a square-zero
/// odd derivation given on the vertical generators (values of bidegree (0,2))
/// and vanishing on the horizontal ones. Monomials are bitmasks, horizontal
/// bits 0..a-1, vertical bits a..a+b-1, written in ascending bit order.
struct FormAlgebra {
  int a = 0;
  int b = 0;
  using FormSum = std::vector<std::pair<uint32_t, Rational>>;
  std::vector<FormSum> dbarVertical; // one entry per vertical generator

  int gens() const { return a + b; }
  uint32_t xiBit(int i) const { return 1u << i; }
  uint32_t etaBit(int j) const { return 1u << (a + j); }
  uint32_t xiMask() const { return (1u << a) - 1; }
  uint32_t etaMask() const { return ((1u << gens()) - 1) & ~xiMask(); }

  static int popcount(uint32_t m) { return __builtin_popcount(m); }
  int xiDegree(uint32_t m) const { return popcount(m & xiMask()); }
  int etaDegree(uint32_t m) const { return popcount(m & etaMask()); }

  /// Wedge of two monomials: zero on overlap, otherwise the merged mask with
  /// the sign of sorting the concatenation into ascending order.
  static std::pair<Rational, uint32_t> wedge(uint32_t m1, uint32_t m2) {
    if (m1 & m2) return {Rational(0), 0};
    int crossings = 0;
    for (uint32_t rest = m2; rest; rest &= rest - 1) {
      int j = __builtin_ctz(rest);
      crossings += popcount(m1 & ~((1u << (j + 1)) - 1)); // generators of m1 above bit j
    }
    return {crossings % 2 == 0 ? Rational(1) : Rational(-1), m1 | m2};
  }

  /// The derivation extended by the graded Leibniz rule to a monomial.
  FormSum dbar(uint32_t mask) const {
    FormSum out;
    for (uint32_t rest = mask & etaMask(); rest; rest &= rest - 1) {
      int bit = __builtin_ctz(rest);
      int j = bit - a;
      uint32_t lower = mask & ((1u << bit) - 1);
      uint32_t without = mask & ~(1u << bit);
      Rational pre = popcount(lower) % 2 == 0 ? Rational(1) : Rational(-1);
      for (const auto &[val, c] : dbarVertical[j]) {
        auto [s, merged] = wedge(without, val);
        if (s.isZero()) continue;
        accumulate(out, merged, pre * s * c);
      }
    }
    return out;
  }

  static void accumulate(FormSum &sum, uint32_t mask, const Rational &c) {
    if (c.isZero()) return;
    for (auto &[m, v] : sum)
      if (m == mask) {
        v += c;
        return;
      }
    sum.push_back({mask, c});
  }

  std::string genName(int g) const {
    return g < a ? "xi" + std::to_string(g + 1) : "eta" + std::to_string(g - a + 1);
  }

  std::string monomialName(uint32_t mask) const {
    if (mask == 0) return "1";
    std::string out;
    for (int g = 0; g < gens(); ++g)
      if (mask & (1u << g)) out += (out.empty() ? "" : "^") + genName(g);
    return out;
  }

  void validate() const {
    if (a < 0 || b < 0 || gens() > 20)
      throw std::invalid_argument("FormAlgebra: unsupported generator count");
    if (static_cast<int>(dbarVertical.size()) != b)
      throw std::invalid_argument("FormAlgebra: need one derivation value per vertical generator");
    for (const auto &fs : dbarVertical)
      for (const auto &[m, c] : fs)
        if ((m & xiMask()) != 0 || popcount(m) != 2)
          throw std::invalid_argument("FormAlgebra: derivation values must be vertical 2-forms");
    // square zero on every monomial
    for (uint32_t mask = 0; mask < (1u << gens()); ++mask) {
      FormSum twice;
      for (const auto &[m1, c1] : dbar(mask))
        for (const auto &[m2, c2] : dbar(m1)) accumulate(twice, m2, c1 * c2);
      for (const auto &[m, c] : twice)
        if (!c.isZero())
          throw std::invalid_argument("FormAlgebra: derivation does not square to zero");
    }
  }
};

} // namespace linf
