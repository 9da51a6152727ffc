#include "linf/graded.hpp"

namespace linf {

namespace {

int par(int d) { return ((d % 2) + 2) % 2; }

GradedElement<Rational> basisElem(const GradedSpace &sp, int deg, int idx) {
  GradedElement<Rational> e;
  auto &v = e.comps[deg];
  v.resize(sp.dim(deg));
  v[idx] = Rational(1);
  return e;
}

} // namespace

void Dgla::validate() const {
  // differential shape and d^2 = 0
  for (const auto &[d, m] : diff) {
    if (rowCount(m) != space.dim(d + 1) || colCount(m) != space.dim(d))
      throw std::invalid_argument(name + ": differential matrix shape mismatch at degree " +
                                  std::to_string(d));
    const MatQ *next = diffMatrix(d + 1);
    if (!next) continue;
    MatQ sq = matMul(*next, m);
    for (const auto &row : sq)
      for (const auto &x : row)
        if (!x.isZero()) throw std::invalid_argument(name + ": d^2 != 0");
  }

  // bracket targets stay inside the space
  for (const auto &[key, val] : table) {
    int deg = key.first.first + key.second.first;
    for (const auto &[k, c] : val)
      if (k < 0 || k >= space.dim(deg))
        throw std::invalid_argument(name + ": bracket lands outside the space");
  }

  std::vector<Factor> basis;
  for (const auto &[d, n] : space.dims)
    for (int i = 0; i < n; ++i) basis.push_back({d, i});

  auto elem = [&](const Factor &f) { return basisElem(space, f.degree, f.index); };

  // graded antisymmetry: [y,x] = -(-1)^{pq} [x,y]
  for (const auto &a : basis)
    for (const auto &b : basis) {
      auto xy = dglaBracket(*this, elem(a), elem(b));
      auto yx = dglaBracket(*this, elem(b), elem(a));
      Rational s = par(a.degree * b.degree) == 0 ? Rational(-1) : Rational(1);
      if (!(yx - xy * s).isZero())
        throw std::invalid_argument(name + ": bracket not graded antisymmetric");
    }

  // Leibniz: d[x,y] = [dx,y] + (-1)^p [x,dy]
  for (const auto &a : basis)
    for (const auto &b : basis) {
      auto lhs = applyDiff(*this, dglaBracket(*this, elem(a), elem(b)));
      auto rhs = dglaBracket(*this, applyDiff(*this, elem(a)), elem(b));
      auto second = dglaBracket(*this, elem(a), applyDiff(*this, elem(b)));
      rhs += par(a.degree) == 0 ? second : -second;
      if (!(lhs - rhs).isZero()) throw std::invalid_argument(name + ": Leibniz rule fails");
    }

  // graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{pq} [y,[x,z]]
  for (const auto &a : basis)
    for (const auto &b : basis)
      for (const auto &c : basis) {
        auto lhs = dglaBracket(*this, elem(a), dglaBracket(*this, elem(b), elem(c)));
        auto rhs = dglaBracket(*this, dglaBracket(*this, elem(a), elem(b)), elem(c));
        auto second = dglaBracket(*this, elem(b), dglaBracket(*this, elem(a), elem(c)));
        rhs += par(a.degree * b.degree) == 0 ? second : -second;
        if (!(lhs - rhs).isZero())
          throw std::invalid_argument(name + ": graded Jacobi identity fails");
      }
}

} // namespace linf
