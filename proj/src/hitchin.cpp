#include "linf/hitchin.hpp"

#include <fstream>
#include <sstream>

namespace linf {

namespace {

void enumerateCompositions(int total, int parts, Expo &cur, std::vector<Expo> &out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    cur.push_back(first);
    enumerateCompositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Expo> compositions(int total, int parts) {
  std::vector<Expo> out;
  Expo cur;
  enumerateCompositions(total, parts, cur, out);
  return out;
}

ArtinElem randomIdealElement(const std::shared_ptr<const ArtinRing> &ring, Prng &rng) {
  ArtinElem c = ArtinElem::zero(ring);
  for (int v = 0; v < ring->numVars; ++v) {
    c += ArtinElem::variable(ring, v, rng.smallInt());
    if (ring->truncationOrder > 2)
      c += ArtinElem::variable(ring, v, Rational(1)) * ArtinElem::variable(ring, 0, rng.smallInt());
  }
  return c;
}

} // namespace

HitchinModel buildHitchinModel(std::string name, FormAlgebra forms,
                               std::shared_ptr<const LieAlgebra> alg,
                               std::vector<LieElement<Rational>> theta,
                               std::vector<InvariantPolynomial> invariants) {
  forms.validate();
  if (static_cast<int>(theta.size()) != forms.a)
    throw std::invalid_argument("buildHitchinModel: one Higgs coefficient per horizontal form");
  for (size_t i = 0; i < theta.size(); ++i)
    for (size_t j = i + 1; j < theta.size(); ++j)
      if (!bracket(theta[i], theta[j]).isZero())
        throw std::invalid_argument("buildHitchinModel: Higgs coefficients must commute");
  for (const auto &p : invariants)
    if (p.alg.get() != alg.get())
      throw std::invalid_argument("buildHitchinModel: invariant on the wrong algebra");

  HitchinModel m;
  m.name = std::move(name);
  m.forms = std::move(forms);
  m.alg = std::move(alg);
  m.theta = std::move(theta);
  m.invariants = std::move(invariants);

  int gens = m.forms.gens();
  int dim = m.alg->dim;
  m.masksByDegree.assign(gens + 1, {});
  for (uint32_t mask = 0; mask < (1u << gens); ++mask)
    m.masksByDegree[FormAlgebra::popcount(mask)].push_back(mask);
  for (int deg = 0; deg <= gens; ++deg)
    for (size_t p = 0; p < m.masksByDegree[deg].size(); ++p)
      m.maskPos[m.masksByDegree[deg][p]] = static_cast<int>(p);

  m.dgla.name = m.name + "-forms";
  for (int deg = 0; deg <= gens; ++deg) {
    std::vector<std::string> labels;
    for (uint32_t mask : m.masksByDegree[deg])
      for (int g = 0; g < dim; ++g)
        labels.push_back(m.forms.monomialName(mask) + "(x)" + m.alg->basisLabels[g]);
    m.dgla.space.addComponent(deg, std::move(labels));
  }

  // differential dbar (x) 1 + ad(theta)
  for (int deg = 0; deg < gens; ++deg) {
    MatQ d = zeroMatrix(m.dgla.space.dim(deg + 1), m.dgla.space.dim(deg));
    for (uint32_t mask : m.masksByDegree[deg])
      for (int g = 0; g < dim; ++g) {
        int col = m.dglaIndex(mask, g);
        for (const auto &[mask2, c] : m.forms.dbar(mask)) d[m.dglaIndex(mask2, g)][col] += c;
        for (int l = 0; l < m.forms.a; ++l) {
          auto [s, merged] = FormAlgebra::wedge(m.forms.xiBit(l), mask);
          if (s.isZero()) continue;
          for (int i = 0; i < dim; ++i) {
            if (m.theta[l].coeffs[i].isZero()) continue;
            for (const auto &[k, c] : m.alg->table[i][g])
              d[m.dglaIndex(merged, k)][col] += s * m.theta[l].coeffs[i] * c;
          }
        }
      }
    m.dgla.diff[deg] = std::move(d);
  }

  // bracket: wedge of the form parts, bracket of the g parts
  for (int p = 0; p <= gens; ++p)
    for (int q = 0; p + q <= gens; ++q)
      for (uint32_t m1 : m.masksByDegree[p])
        for (uint32_t m2 : m.masksByDegree[q]) {
          auto [s, merged] = FormAlgebra::wedge(m1, m2);
          if (s.isZero()) continue;
          for (int g1 = 0; g1 < dim; ++g1)
            for (int g2 = 0; g2 < dim; ++g2) {
              if (m.alg->table[g1][g2].empty()) continue;
              Dgla::Sparse val;
              for (const auto &[k, c] : m.alg->table[g1][g2])
                val.push_back({m.dglaIndex(merged, k), s * c});
              m.dgla.table[{{p, m.dglaIndex(m1, g1)}, {q, m.dglaIndex(m2, g2)}}] = std::move(val);
            }
        }
  m.dgla.validate();

  // target: one symmetric power per invariant, tensored with vertical forms
  m.target.name = m.name + "-target";
  std::map<int, std::vector<std::string>> tlabels;
  for (size_t i = 0; i < m.invariants.size(); ++i)
    for (const auto &alpha : compositions(m.invariants[i].degree, m.forms.a))
      for (uint32_t em = 0; em < (1u << m.forms.b); ++em) {
        uint32_t eta = em << m.forms.a;
        int deg = FormAlgebra::popcount(eta) + 1;
        auto &list = m.targetBasis[deg];
        m.targetIndex[{static_cast<int>(i), alpha, eta}] = {deg, static_cast<int>(list.size())};
        list.push_back({static_cast<int>(i), alpha, eta});
        std::string lbl = m.invariants[i].label;
        for (int l = 0; l < m.forms.a; ++l)
          if (alpha[l] > 0) lbl += "*u" + std::to_string(l + 1) + "^" + std::to_string(alpha[l]);
        if (eta) lbl += "(x)" + m.forms.monomialName(eta);
        tlabels[deg].push_back(std::move(lbl));
      }
  for (auto &[deg, lbls] : tlabels) m.target.space.addComponent(deg, std::move(lbls));
  for (const auto &[deg, list] : m.targetBasis) {
    if (m.target.space.dim(deg + 1) == 0) continue;
    MatQ d = zeroMatrix(m.target.space.dim(deg + 1), m.target.space.dim(deg));
    for (size_t col = 0; col < list.size(); ++col)
      for (const auto &[mask2, c] : m.forms.dbar(list[col].eta)) {
        auto [tdeg, row] = m.targetIndex.at({list[col].inv, list[col].alpha, mask2});
        d[row][col] += c;
      }
    m.target.diff[deg] = std::move(d);
  }
  m.target.validate();
  return m;
}

MorphismMap hitchinMorphism(const HitchinModel &m, bool naiveVerticalSign) {
  auto cache = std::make_shared<std::map<Word, GradedElement<Rational>>>();
  return [&m, naiveVerticalSign, cache](const Word &w) -> GradedElement<Rational> {
    auto hit = cache->find(w);
    if (hit != cache->end()) return hit->second;
    GradedElement<Rational> out;
    int k = static_cast<int>(w.size());
    if (k == 0) return out;

    std::vector<int> xiIdx(k), gIdx(k);
    uint32_t etaAcc = 0;
    Rational wsign(1);
    bool dead = false;
    for (int j = 0; j < k; ++j) {
      auto [mask, g] = m.dglaFactor(w[j].degree, w[j].index);
      if (m.forms.xiDegree(mask) != 1) { dead = true; break; }
      xiIdx[j] = __builtin_ctz(mask & m.forms.xiMask());
      auto [s, merged] = FormAlgebra::wedge(etaAcc, mask & m.forms.etaMask());
      if (s.isZero()) { dead = true; break; }
      wsign *= s;
      etaAcc = merged;
      gIdx[j] = g;
    }
    if (!dead) {
      int etaDeg = FormAlgebra::popcount(etaAcc);
      if (!naiveVerticalSign && etaDeg % 2 == 1) wsign = -wsign;
      int outDeg = etaDeg + 1;
      for (size_t i = 0; i < m.invariants.size(); ++i) {
        const auto &p = m.invariants[i];
        int d = p.degree;
        if (k > d) continue;
        std::vector<int> caps(m.forms.a, d + 1);
        caps.insert(caps.end(), k, 2);
        auto ring = std::make_shared<const ArtinRing>(m.forms.a + k, d + 1, caps);
        std::vector<ArtinElem> coords;
        coords.reserve(m.alg->dim);
        for (int beta = 0; beta < m.alg->dim; ++beta) {
          ArtinElem y = ArtinElem::zero(ring);
          for (int l = 0; l < m.forms.a; ++l)
            if (!m.theta[l].coeffs[beta].isZero())
              y += ArtinElem::variable(ring, l, m.theta[l].coeffs[beta]);
          for (int j = 0; j < k; ++j)
            if (gIdx[j] == beta) y += ArtinElem::variable(ring, m.forms.a + j, Rational(1));
          coords.push_back(std::move(y));
        }
        ArtinElem val = p.poly.eval(coords);
        for (const auto &[e, c] : val.terms()) {
          bool allSlots = true;
          for (int j = 0; j < k; ++j)
            if (e[m.forms.a + j] != 1) { allSlots = false; break; }
          if (!allSlots) continue;
          Expo alpha(e.begin(), e.begin() + m.forms.a);
          for (int j = 0; j < k; ++j) ++alpha[xiIdx[j]];
          auto [tdeg, idx] = m.targetIndex.at({static_cast<int>(i), alpha, etaAcc});
          (void)tdeg;
          auto &slot = out.comps[outDeg];
          if (static_cast<int>(slot.size()) < m.target.space.dim(outDeg))
            slot.resize(m.target.space.dim(outDeg));
          slot[idx] += wsign * c;
        }
      }
    }
    (*cache)[w] = out;
    return out;
  };
}

std::vector<int> commutingBasis(const std::shared_ptr<const LieAlgebra> &alg) {
  std::vector<int> out;
  if (alg->name.rfind("gl", 0) == 0) {
    int n = alg->degrees.back();
    for (int i = 0; i < n; ++i) out.push_back(i * n + i);
  } else if (alg->name.rfind("sl", 0) == 0) {
    int n = alg->degrees.back();
    for (int k = 0; k + 1 < n; ++k) out.push_back(n * (n - 1) + k);
  } else {
    throw std::invalid_argument("commutingBasis: only built-in algebras supported");
  }
  return out;
}

GradedElement<ArtinElem> hitchinSample(const HitchinModel &m,
                                       const std::shared_ptr<const ArtinRing> &ring, Prng &rng,
                                       const std::string &stratum) {
  bool horizontal = stratum == "horizontal" || stratum == "mixed";
  bool vertical = stratum == "vertical" || stratum == "mixed";
  if (!horizontal && !vertical)
    throw std::invalid_argument("hitchinSample: unknown stratum '" + stratum + "'");
  auto diag = commutingBasis(m.alg);
  GradedElement<ArtinElem> x;
  auto &slot = x.comps[1];
  slot.assign(m.dgla.space.dim(1), ArtinElem::zero(ring));
  if (horizontal)
    for (int l = 0; l < m.forms.a; ++l)
      for (int g : diag) slot[m.dglaIndex(m.forms.xiBit(l), g)] = randomIdealElement(ring, rng);
  if (vertical)
    for (int j = 0; j < m.forms.b; ++j) {
      if (!m.forms.dbarVertical[j].empty()) continue; // keep to derivation-closed generators
      for (int g : diag) slot[m.dglaIndex(m.forms.etaBit(j), g)] = randomIdealElement(ring, rng);
    }
  return x;
}

bool verifyDefEqualsHitchin(const HitchinModel &m, const MorphismMap &h,
                            const GradedElement<ArtinElem> &x) {
  if (!mcDefect(m.dgla, x).isZero()) return false;
  int dmax = m.maxInvariantDegree();
  auto pushed = mcPushforward(h, x, dmax);
  if (!pushed.concentratedIn(1)) return false;

  std::shared_ptr<const ArtinRing> base;
  for (const auto &[d, v] : x.comps)
    for (const auto &c : v)
      if (c.ring()) { base = c.ring(); break; }
  if (!base) return pushed.isZero();

  using T = TruncPoly<ArtinElem>;
  auto uring = ArtinRing::make(m.forms.a, dmax + 1);
  ArtinElem oneA = ArtinElem::scalar(base, Rational(1));
  std::vector<T> z, z0;
  for (int beta = 0; beta < m.alg->dim; ++beta) {
    T zb = T::zero(uring), z0b = T::zero(uring);
    for (int l = 0; l < m.forms.a; ++l) {
      ArtinElem coeff = oneA * m.theta[l].coeffs[beta];
      ArtinElem pert = x.get(1, m.dglaIndex(m.forms.xiBit(l), beta));
      z0b += T::variable(uring, l, coeff);
      zb += T::variable(uring, l, coeff + pert);
    }
    z.push_back(std::move(zb));
    z0.push_back(std::move(z0b));
  }

  GradedElement<ArtinElem> expect;
  auto &slot = expect.comps[1];
  slot.assign(m.target.space.dim(1), ArtinElem::zero(base));
  for (size_t i = 0; i < m.invariants.size(); ++i) {
    T diff = m.invariants[i].poly.eval(z) - m.invariants[i].poly.eval(z0);
    for (const auto &[alpha, c] : diff.terms()) {
      auto [deg, idx] = m.targetIndex.at({static_cast<int>(i), alpha, 0u});
      (void)deg;
      slot[idx] = c;
    }
  }
  auto &got = pushed.comps[1];
  got.resize(m.target.space.dim(1), ArtinElem{});
  return pushed == expect;
}

bool targetExact(const HitchinModel &m, const GradedElement<ArtinElem> &y, int degree) {
  for (const auto &[d, v] : y.comps) {
    if (d == degree) continue;
    for (const auto &c : v)
      if (!c.isZero()) return false; // supported outside the stated degree
  }
  auto it = y.comps.find(degree);
  if (it == y.comps.end()) return true;
  const MatQ *din = m.target.diffMatrix(degree - 1);
  int n = m.target.space.dim(degree);

  std::map<Expo, VecQ, GrlexLess> perMonomial;
  for (size_t i = 0; i < it->second.size(); ++i)
    for (const auto &[e, c] : it->second[i].terms()) {
      auto &vec = perMonomial[e];
      if (vec.empty()) vec.assign(n, Rational(0));
      vec[i] += c;
    }
  for (const auto &[e, vec] : perMonomial) {
    if (!din) {
      for (const auto &c : vec)
        if (!c.isZero()) return false;
      continue;
    }
    if (!inColumnSpace(*din, vec)) return false;
  }
  return true;
}

namespace {

FormAlgebra makeForms(int a, int b, std::vector<FormAlgebra::FormSum> dbar) {
  FormAlgebra f;
  f.a = a;
  f.b = b;
  f.dbarVertical = std::move(dbar);
  return f;
}

} // namespace

HitchinModel hitchinFixture(const std::string &name) {
  if (name == "curve_sl2") {
    auto sl2 = LieAlgebra::sl(2);
    auto h = LieElement<Rational>::basis(sl2, 2, Rational(1));
    return buildHitchinModel(name, makeForms(1, 1, {{}}), sl2, {h},
                             charPolyQuotient(sl2).components);
  }
  if (name == "curve_sl2_b2") {
    auto sl2 = LieAlgebra::sl(2);
    auto h = LieElement<Rational>::basis(sl2, 2, Rational(1));
    // dbar eta1 = eta1 ^ eta2, dbar eta2 = 0 (bits: xi1 = 1, eta1 = 2, eta2 = 4)
    FormAlgebra::FormSum d1 = {{6u, Rational(1)}};
    return buildHitchinModel(name, makeForms(1, 2, {d1, {}}), sl2, {h},
                             charPolyQuotient(sl2).components);
  }
  if (name == "surface_gl2") {
    auto gl2 = LieAlgebra::gl(2);
    auto t1 = LieElement<Rational>::basis(gl2, 0, Rational(1)); // E11
    auto t2 = LieElement<Rational>::basis(gl2, 3, Rational(1)); // E22
    return buildHitchinModel(name, makeForms(2, 2, {{}, {}}), gl2, {t1, t2},
                             charPolyQuotient(gl2).components);
  }
  if (name == "twisted_sl2") {
    auto sl2 = LieAlgebra::sl(2);
    auto h = LieElement<Rational>::basis(sl2, 2, Rational(1));
    return buildHitchinModel(name, makeForms(2, 1, {{}}), sl2, {h, h * Rational(2)},
                             charPolyQuotient(sl2).components);
  }
  if (name == "surface_sl2_dbar") {
    auto sl2 = LieAlgebra::sl(2);
    auto h = LieElement<Rational>::basis(sl2, 2, Rational(1));
    // two horizontal and two vertical generators, dbar eta1 = eta1 ^ eta2
    FormAlgebra::FormSum d1 = {{(1u << 2) | (1u << 3), Rational(1)}};
    return buildHitchinModel(name, makeForms(2, 2, {d1, {}}), sl2, {h, h * Rational(2)},
                             charPolyQuotient(sl2).components);
  }
  throw std::invalid_argument("hitchinFixture: unknown model '" + name + "'");
}

std::vector<std::string> hitchinFixtureNames() {
  return {"curve_sl2", "curve_sl2_b2", "surface_gl2", "twisted_sl2", "surface_sl2_dbar"};
}

HitchinModel hitchinModelFromSpecText(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::string name = "model";
  std::shared_ptr<const LieAlgebra> alg;
  int a = -1, b = -1;
  std::map<int, FormAlgebra::FormSum> dbar;
  std::map<int, VecQ> thetaRows;
  int lineNo = 0;
  auto fail = [&](const std::string &msg) -> void {
    throw std::runtime_error("model spec, line " + std::to_string(lineNo) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "name") {
      ls >> name;
    } else if (key == "algebra") {
      std::string fam;
      int n;
      if (!(ls >> fam >> n)) fail("bad algebra");
      alg = LieAlgebra::builtin(fam, n);
    } else if (key == "xi") {
      if (!(ls >> a) || a < 0) fail("bad horizontal count");
    } else if (key == "eta") {
      if (!(ls >> b) || b < 0) fail("bad vertical count");
    } else if (key == "dbar") {
      if (a < 0 || b < 0) fail("dbar before xi/eta");
      int j;
      std::string colon;
      if (!(ls >> j >> colon) || colon != ":") fail("bad dbar line");
      FormAlgebra::FormSum sum;
      int p, q;
      std::string val;
      while (ls >> p >> q >> val) {
        if (p < 1 || p > b || q < 1 || q > b || p == q) fail("bad vertical pair");
        uint32_t mask = (1u << (a + p - 1)) | (1u << (a + q - 1));
        Rational c = Rational::fromString(val);
        if (q < p) c = -c; // stated in descending order
        FormAlgebra::accumulate(sum, mask, c);
      }
      dbar[j - 1] = std::move(sum);
    } else if (key == "theta") {
      if (!alg) fail("theta before algebra");
      int l;
      std::string colon;
      if (!(ls >> l >> colon) || colon != ":") fail("bad theta line");
      VecQ row;
      std::string val;
      while (ls >> val) row.push_back(Rational::fromString(val));
      if (static_cast<int>(row.size()) != alg->dim) fail("theta coefficient count != dim");
      thetaRows[l - 1] = std::move(row);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!alg) throw std::runtime_error("model spec: missing algebra");
  if (a < 0 || b < 0) throw std::runtime_error("model spec: missing xi/eta counts");
  std::vector<FormAlgebra::FormSum> dv(b);
  for (auto &[j, sum] : dbar) {
    if (j < 0 || j >= b) throw std::runtime_error("model spec: dbar index out of range");
    dv[j] = std::move(sum);
  }
  std::vector<LieElement<Rational>> theta;
  for (int l = 0; l < a; ++l) {
    auto it = thetaRows.find(l);
    if (it == thetaRows.end()) throw std::runtime_error("model spec: missing theta row");
    theta.emplace_back(alg, it->second);
  }
  return buildHitchinModel(name, makeForms(a, b, std::move(dv)), alg, std::move(theta),
                           charPolyQuotient(alg).components);
}

HitchinModel hitchinModelFromSpecFile(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open model spec file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return hitchinModelFromSpecText(buf.str());
}

} // namespace linf
