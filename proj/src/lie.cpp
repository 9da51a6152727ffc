#include "linf/lie.hpp"

#include <fstream>
#include <sstream>

namespace linf {

namespace {

MatQ commutator(const MatQ &a, const MatQ &b) {
  MatQ ab = matMul(a, b), ba = matMul(b, a);
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

VecQ flatten(const MatQ &m) {
  VecQ v;
  for (const auto &row : m)
    for (const auto &x : row) v.push_back(x);
  return v;
}

LieAlgebra::SparseVec sparsify(const VecQ &v) {
  LieAlgebra::SparseVec s;
  for (size_t k = 0; k < v.size(); ++k)
    if (!v[k].isZero()) s.emplace_back(static_cast<int>(k), v[k]);
  return s;
}

} // namespace

VecQ LieAlgebra::coordsOf(const MatQ &m) const {
  if (!realization) throw std::logic_error("coordsOf: no matrix realization");
  int s = rowCount((*realization)[0]);
  MatQ sys = zeroMatrix(s * s, dim);
  for (int b = 0; b < dim; ++b) {
    VecQ col = flatten((*realization)[b]);
    for (int r = 0; r < s * s; ++r) sys[r][b] = col[r];
  }
  auto x = solve(sys, flatten(m));
  if (!x) throw std::invalid_argument("coordsOf: matrix outside the basis span");
  // solve() leaves a residual exactly when the system is inconsistent and the
  // rhs column is non-pivotal; double-check by substitution.
  VecQ back = matVec(sys, *x);
  VecQ rhs = flatten(m);
  for (int r = 0; r < s * s; ++r)
    if (back[r] != rhs[r]) throw std::invalid_argument("coordsOf: matrix outside the basis span");
  return *x;
}

MatQ LieAlgebra::adMatrix(const VecQ &x) const {
  MatQ m = zeroMatrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].isZero()) continue;
    for (int j = 0; j < dim; ++j)
      for (const auto &[k, c] : table[i][j]) m[k][j] += x[i] * c;
  }
  return m;
}

void LieAlgebra::validate() const {
  // antisymmetry
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      VecQ lhs(dim), rhs(dim);
      for (const auto &[k, c] : table[i][j]) lhs[k] += c;
      for (const auto &[k, c] : table[j][i]) rhs[k] += c;
      for (int k = 0; k < dim; ++k)
        if (lhs[k] != -rhs[k])
          throw std::invalid_argument(name + ": structure constants not antisymmetric");
    }
  // Jacobi on all basis triples, exact
  auto brk = [&](const VecQ &x, const VecQ &y) {
    VecQ r(dim);
    for (int i = 0; i < dim; ++i) {
      if (x[i].isZero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j].isZero()) continue;
        for (const auto &[k, c] : table[i][j]) r[k] += x[i] * y[j] * c;
      }
    }
    return r;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int l = j + 1; l < dim; ++l) {
        VecQ ei(dim), ej(dim), el(dim);
        ei[i] = Rational(1);
        ej[j] = Rational(1);
        el[l] = Rational(1);
        VecQ sum = brk(brk(ei, ej), el);
        VecQ t2 = brk(brk(ej, el), ei);
        VecQ t3 = brk(brk(el, ei), ej);
        for (int k = 0; k < dim; ++k) {
          sum[k] += t2[k] + t3[k];
          if (!sum[k].isZero())
            throw std::invalid_argument(name + ": Jacobi identity fails on basis triple");
        }
      }
  // realization consistency
  if (realization) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        VecQ expect = coordsOf(commutator((*realization)[i], (*realization)[j]));
        VecQ got(dim);
        for (const auto &[k, c] : table[i][j]) got[k] += c;
        for (int k = 0; k < dim; ++k)
          if (expect[k] != got[k])
            throw std::invalid_argument(name + ": realization does not match structure constants");
      }
  }
}

std::shared_ptr<const LieAlgebra> LieAlgebra::fromRealization(std::string name,
                                                              std::vector<std::string> labels,
                                                              std::vector<MatQ> matrices,
                                                              std::vector<int> degrees) {
  auto alg = std::make_shared<LieAlgebra>();
  alg->name = std::move(name);
  alg->dim = static_cast<int>(matrices.size());
  alg->basisLabels = std::move(labels);
  alg->realization = std::move(matrices);
  alg->degrees = std::move(degrees);
  alg->table.assign(alg->dim, std::vector<SparseVec>(alg->dim));
  for (int i = 0; i < alg->dim; ++i)
    for (int j = 0; j < alg->dim; ++j)
      alg->table[i][j] =
          sparsify(alg->coordsOf(commutator((*alg->realization)[i], (*alg->realization)[j])));
  alg->validate();
  return alg;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::gl(int n) {
  if (n < 1) throw std::invalid_argument("gl(n): need n >= 1");
  std::vector<MatQ> mats;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatQ e = zeroMatrix(n, n);
      e[i][j] = Rational(1);
      mats.push_back(std::move(e));
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  std::vector<int> degs;
  for (int d = 1; d <= n; ++d) degs.push_back(d);
  return fromRealization("gl" + std::to_string(n), std::move(labels), std::move(mats),
                         std::move(degs));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::sl(int n) {
  if (n < 2) throw std::invalid_argument("sl(n): need n >= 2");
  std::vector<MatQ> mats;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      MatQ e = zeroMatrix(n, n);
      e[i][j] = Rational(1);
      mats.push_back(std::move(e));
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  for (int k = 0; k + 1 < n; ++k) {
    MatQ h = zeroMatrix(n, n);
    h[k][k] = Rational(1);
    h[k + 1][k + 1] = Rational(-1);
    mats.push_back(std::move(h));
    labels.push_back("H" + std::to_string(k + 1));
  }
  std::vector<int> degs;
  for (int d = 2; d <= n; ++d) degs.push_back(d);
  return fromRealization("sl" + std::to_string(n), std::move(labels), std::move(mats),
                         std::move(degs));
}

std::shared_ptr<const LieAlgebra> LieAlgebra::builtin(const std::string &name, int n) {
  if (name == "gl") return gl(n);
  if (name == "sl") return sl(n);
  throw std::invalid_argument("builtin algebra: unsupported name '" + name + "'");
}

namespace {

// Spec file grammar (line oriented, '#' comments):
//   name <id>
//   dim <n>
//   basis <label_1> ... <label_n>
//   c <i> <j> <k> <value>          (1-based; [e_i, e_j] has coefficient value on e_k)
//   degrees <d_1> ... <d_N>
//   realization <s>                (followed by dim blocks of s rows, s entries each)
struct SpecParser {
  std::istringstream in;
  int lineNo = 0;

  explicit SpecParser(const std::string &text) : in(text) {}

  [[noreturn]] void fail(const std::string &msg) const {
    throw std::runtime_error("algebra spec, line " + std::to_string(lineNo) + ": " + msg);
  }

  bool nextLine(std::string &line) {
    while (std::getline(in, line)) {
      ++lineNo;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) return true;
    }
    return false;
  }
};

} // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::fromSpecText(const std::string &text) {
  SpecParser p(text);
  auto alg = std::make_shared<LieAlgebra>();
  std::vector<std::tuple<int, int, int, Rational>> triples;
  std::string line;
  int realizationSize = 0;
  while (p.nextLine(line)) {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "name") {
      ls >> alg->name;
    } else if (key == "dim") {
      if (!(ls >> alg->dim) || alg->dim < 1) p.fail("bad dim");
    } else if (key == "basis") {
      std::string lbl;
      while (ls >> lbl) alg->basisLabels.push_back(lbl);
    } else if (key == "c") {
      int i, j, k;
      std::string val;
      if (!(ls >> i >> j >> k >> val)) p.fail("bad structure-constant triple");
      triples.emplace_back(i - 1, j - 1, k - 1, Rational::fromString(val));
    } else if (key == "degrees") {
      int d;
      while (ls >> d) alg->degrees.push_back(d);
    } else if (key == "realization") {
      if (!(ls >> realizationSize) || realizationSize < 1) p.fail("bad realization size");
      std::vector<MatQ> mats;
      for (int b = 0; b < alg->dim; ++b) {
        MatQ m = zeroMatrix(realizationSize, realizationSize);
        for (int r = 0; r < realizationSize; ++r) {
          if (!p.nextLine(line)) p.fail("realization rows missing");
          std::istringstream rs(line);
          std::string ent;
          for (int c = 0; c < realizationSize; ++c) {
            if (!(rs >> ent)) p.fail("realization row too short");
            m[r][c] = Rational::fromString(ent);
          }
        }
        mats.push_back(std::move(m));
      }
      alg->realization = std::move(mats);
    } else {
      p.fail("unknown key '" + key + "'");
    }
  }
  if (alg->dim < 1) throw std::runtime_error("algebra spec: missing dim");
  if (alg->basisLabels.empty())
    for (int i = 0; i < alg->dim; ++i) alg->basisLabels.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(alg->basisLabels.size()) != alg->dim)
    throw std::runtime_error("algebra spec: basis label count != dim");
  alg->table.assign(alg->dim, std::vector<SparseVec>(alg->dim));
  for (const auto &[i, j, k, v] : triples) {
    if (i < 0 || i >= alg->dim || j < 0 || j >= alg->dim || k < 0 || k >= alg->dim)
      throw std::runtime_error("algebra spec: structure-constant index out of range");
    alg->table[i][j].emplace_back(k, v);
    alg->table[j][i].emplace_back(k, -v);
  }
  alg->validate();
  return alg;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::fromSpecFile(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open algebra spec file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return fromSpecText(buf.str());
}

} // namespace linf
