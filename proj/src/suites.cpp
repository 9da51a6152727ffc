#include "linf/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "linf/hitchin.hpp"
#include "linf/kuranishi.hpp"

namespace linf {
namespace {

using OrderedJson = nlohmann::ordered_json;

struct TrialResult {
  bool ok = true;
  std::string note;
};

void checkNegctl(const SuiteConfig &cfg) {
  if (cfg.negctl.empty()) return;
  auto names = negctlNames(cfg.suite);
  if (std::find(names.begin(), names.end(), cfg.negctl) == names.end())
    throw std::runtime_error("suite '" + cfg.suite + "' has no sabotage flag '" + cfg.negctl + "'");
}

/// Indexed trial loop with a deterministic ordered merge: trial i always uses
/// the stream Prng::forTrial(seed, i), so the report is independent of the
/// execution order (and of whether OpenMP is enabled at all).
void runTrials(const SuiteConfig &cfg, SuiteReport &rep,
               const std::function<TrialResult(int, Prng &)> &fn) {
  int n = cfg.trials;
  std::vector<uint8_t> ok(n, 1);
  std::vector<std::string> notes(n);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
  for (int i = 0; i < n; ++i) {
    Prng rng = Prng::forTrial(cfg.seed, static_cast<uint64_t>(i));
    TrialResult r;
    try {
      r = fn(i, rng);
    } catch (const std::exception &e) {
      r.ok = false;
      r.note = e.what();
    }
    ok[i] = r.ok ? 1 : 0;
    notes[i] = std::move(r.note);
  }
  rep.trials = n;
  for (int i = 0; i < n; ++i) {
    if (ok[i]) continue;
    if (rep.failures == 0)
      rep.firstCounterexample = "trial " + std::to_string(i) +
                                (notes[i].empty() ? "" : ": " + notes[i]);
    ++rep.failures;
  }
}

} // namespace

std::shared_ptr<const LieAlgebra> resolveAlgebra(const std::string &name) {
  if (name.rfind("spec:", 0) == 0) return LieAlgebra::fromSpecFile(name.substr(5));
  if (name.size() == 3 && (name.substr(0, 2) == "sl" || name.substr(0, 2) == "gl") &&
      name[2] >= '1' && name[2] <= '9')
    return LieAlgebra::builtin(name.substr(0, 2), name[2] - '0');
  throw std::runtime_error("unknown algebra '" + name + "' (expected sl<n>, gl<n> or spec:<file>)");
}

namespace {

std::vector<std::shared_ptr<const LieAlgebra>> algebraList(const SuiteConfig &cfg,
                                                           std::vector<std::string> defaults) {
  std::vector<std::shared_ptr<const LieAlgebra>> out;
  if (!cfg.algebra.empty()) {
    out.push_back(resolveAlgebra(cfg.algebra));
    return out;
  }
  for (const auto &d : defaults) out.push_back(resolveAlgebra(d));
  return out;
}

LieElement<Rational> regularSemisimple(const std::shared_ptr<const LieAlgebra> &alg) {
  auto v = LieElement<Rational>::zero(alg);
  if (alg->name == "sl2") {
    v.coeffs[2] = Rational(1); // h
  } else if (alg->name == "sl3") {
    v.coeffs[6] = Rational(1); // diag(1, 0, -1)
    v.coeffs[7] = Rational(1);
  } else if (alg->name == "gl2") {
    v.coeffs[0] = Rational(1); // diag(1, 2)
    v.coeffs[3] = Rational(2);
  } else if (alg->name == "gl3") {
    v.coeffs[0] = Rational(1); // diag(1, 2, 4)
    v.coeffs[4] = Rational(2);
    v.coeffs[8] = Rational(4);
  } else {
    throw std::runtime_error("no regular-ss fixture for algebra '" + alg->name + "'");
  }
  return v;
}

LieElement<Rational> regularNilpotent(const std::shared_ptr<const LieAlgebra> &alg) {
  auto v = LieElement<Rational>::zero(alg);
  if (alg->name == "sl2") {
    v.coeffs[0] = Rational(1); // e
  } else if (alg->name == "sl3") {
    v.coeffs[0] = Rational(1); // e12 + e23
    v.coeffs[3] = Rational(1);
  } else if (alg->name == "gl2") {
    v.coeffs[1] = Rational(1); // E12
  } else if (alg->name == "gl3") {
    v.coeffs[1] = Rational(1); // E12 + E23
    v.coeffs[5] = Rational(1);
  } else {
    throw std::runtime_error("no regular-nilpotent fixture for algebra '" + alg->name + "'");
  }
  return v;
}

} // namespace

LieElement<Rational> resolveV(const std::shared_ptr<const LieAlgebra> &alg,
                              const std::string &desc) {
  if (desc == "regular-ss") return regularSemisimple(alg);
  if (desc == "regular-nilpotent") return regularNilpotent(alg);
  if (desc == "zero") return LieElement<Rational>::zero(alg);
  if (desc.rfind("coeffs:", 0) == 0) {
    auto v = LieElement<Rational>::zero(alg);
    std::string body = desc.substr(7);
    for (auto &c : body)
      if (c == ',') c = ' ';
    std::istringstream in(body);
    long val;
    int i = 0;
    while (in >> val) {
      if (i >= alg->dim) throw std::runtime_error("too many coefficients in '" + desc + "'");
      v.coeffs[i++] = Rational(val);
    }
    if (i != alg->dim) throw std::runtime_error("need " + std::to_string(alg->dim) +
                                                " coefficients in '" + desc + "'");
    return v;
  }
  throw std::runtime_error("unknown base point '" + desc +
                           "' (expected regular-ss, regular-nilpotent, zero or coeffs:c1,..,cn)");
}

namespace {

std::vector<std::string> vDescList(const SuiteConfig &cfg) {
  if (!cfg.vDesc.empty()) return {cfg.vDesc};
  return {"regular-ss", "regular-nilpotent", "zero"};
}

HitchinModel resolveModel(const std::string &name) {
  for (const auto &f : hitchinFixtureNames())
    if (f == name) return hitchinFixture(name);
  return hitchinModelFromSpecFile(name.rfind("spec:", 0) == 0 ? name.substr(5) : name);
}

std::vector<HitchinModel> modelList(const SuiteConfig &cfg) {
  std::vector<HitchinModel> out;
  if (!cfg.model.empty()) {
    out.push_back(resolveModel(cfg.model));
    return out;
  }
  for (const auto &f : hitchinFixtureNames()) out.push_back(hitchinFixture(f));
  return out;
}

ArtinElem randomRingElement(const std::shared_ptr<const ArtinRing> &ring, Prng &rng) {
  ArtinElem c = ArtinElem::scalar(ring, rng.smallInt());
  for (int v = 0; v < ring->numVars; ++v) c += ArtinElem::variable(ring, v, rng.smallInt());
  if (ring->numVars >= 1 && ring->truncationOrder > 2)
    c += ArtinElem::variable(ring, 0, rng.smallInt()) *
         ArtinElem::variable(ring, ring->numVars - 1, Rational(1));
  return c;
}

/// g (x) m_A element with full basis support and a quadratic salt.
LieElement<ArtinElem> randomDeformation(const std::shared_ptr<const LieAlgebra> &alg,
                                        const std::shared_ptr<const ArtinRing> &ring, Prng &rng) {
  auto b = LieElement<ArtinElem>::zero(alg);
  for (int i = 0; i < alg->dim; ++i) {
    ArtinElem c = ArtinElem::zero(ring);
    for (int v = 0; v < ring->numVars; ++v) c += ArtinElem::variable(ring, v, rng.smallInt());
    if (ring->truncationOrder > 2)
      c += ArtinElem::variable(ring, 0, Rational(1)) *
           ArtinElem::variable(ring, 0, rng.smallInt());
    b.coeffs[i] = std::move(c);
  }
  return b;
}

std::shared_ptr<const ArtinRing> cfgRing(const SuiteConfig &cfg) {
  return ArtinRing::make(std::max(1, cfg.ringVars), std::max(2, cfg.ringOrder));
}

// ---------------------------------------------------------------- suites ---

SuiteReport suiteArtin(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  bool broken = cfg.negctl == "break-distributivity";
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    auto ring = cfgRing(cfg);
    ArtinElem x = randomRingElement(ring, rng);
    ArtinElem y = randomRingElement(ring, rng);
    ArtinElem z = randomRingElement(ring, rng);
    if (!((x * y) * z == x * (y * z)))
      return {false, "associativity failed for x=" + x.str() + ", y=" + y.str() +
                         ", z=" + z.str()};
    ArtinElem dist = x * (y + z) - x * y - x * z;
    if (broken) dist += x;
    if (!dist.isZero())
      return {false, "distributivity failed for x=" + x.str() + ", y=" + y.str() +
                         ", z=" + z.str()};
    if (!(x * y == y * x)) return {false, "commutativity failed"};
    ArtinElem t = ArtinElem::variable(ring, 0, Rational(1));
    ArtinElem pow = ArtinElem::scalar(ring, Rational(1));
    for (int i = 0; i < ring->truncationOrder; ++i) pow *= t;
    if (!pow.isZero()) return {false, "maximal ideal is not nilpotent of the stated order"};
    if (ring->numVars == 1 && ring->truncationOrder >= 3) {
      auto ext = smallExtensionPair(ring->truncationOrder - 1);
      if (!(ext.project(x * y) == ext.project(x) * ext.project(y)))
        return {false, "truncation projection is not multiplicative"};
    }
    return {};
  });
  return rep;
}

SuiteReport suiteLie(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto algebras = algebraList(cfg, {"sl2", "gl2", "sl3", "gl3"});
  bool broken = cfg.negctl == "flip-jacobi";
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    for (const auto &alg : algebras) {
      auto x = randomElement(alg, rng, Rational());
      auto y = randomElement(alg, rng, Rational());
      auto z = randomElement(alg, rng, Rational());
      auto jac = bracket(bracket(x, y), z) + bracket(bracket(z, x), y);
      jac += broken ? -bracket(bracket(y, z), x) : bracket(bracket(y, z), x);
      if (!jac.isZero())
        return {false, alg->name + ": Jacobi identity failed for x=" + x.str() +
                           ", y=" + y.str() + ", z=" + z.str()};
      if (!bracket(x, x).isZero()) return {false, alg->name + ": [x,x] != 0"};
      if (!(bracket(x + y, z) == bracket(x, z) + bracket(y, z)))
        return {false, alg->name + ": bracket is not bilinear"};
    }
    return {};
  });
  return rep;
}

SuiteReport suitePolarisation(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto algebras = algebraList(cfg, {"sl2", "gl2", "sl3", "gl3"});
  std::vector<std::vector<InvariantPolynomial>> invs;
  for (const auto &alg : algebras) invs.push_back(builtinInvariants(alg));
  bool broken = cfg.negctl == "scale-dual";
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    for (size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto &alg = algebras[ai];
      const auto &p = invs[ai][rng.uniform(0, static_cast<long>(invs[ai].size()) - 1)];
      int k = static_cast<int>(rng.uniform(1, p.degree));
      auto v = randomElement(alg, rng, Rational());
      std::vector<LieElement<Rational>> args;
      for (int i = 0; i < k; ++i) args.push_back(randomElement(alg, rng, Rational()));
      if (broken) {
        std::vector<LieElement<Rational>> full(p.degree - k, v);
        full.insert(full.end(), args.begin(), args.end());
        Rational direct = polarize(p, k, args, v);
        Rational dual =
            polarizeFull(p, full) * inverse(Rational::factorial(p.degree - k)) * Rational(2);
        if (!(direct == dual))
          return {false, alg->name + "/" + p.label + ": routes disagree at k=" +
                             std::to_string(k)};
        continue;
      }
      polarizeChecked(p, k, args, v); // throws if the two routes disagree
      if (k >= 2) {
        auto swapped = args;
        std::swap(swapped[0], swapped[1]);
        if (!(polarize(p, k, args, v) == polarize(p, k, swapped, v)))
          return {false, alg->name + "/" + p.label + ": not symmetric at k=" + std::to_string(k)};
      }
      auto w = randomElement(alg, rng, Rational());
      auto shifted = args;
      shifted[0] = args[0] + w;
      auto sub = args;
      sub[0] = w;
      if (!(polarize(p, k, shifted, v) == polarize(p, k, args, v) + polarize(p, k, sub, v)))
        return {false, alg->name + "/" + p.label + ": not additive in slot 0"};
    }
    return {};
  });
  return rep;
}

SuiteReport suiteTaylor(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto algebras = algebraList(cfg, {"sl2", "gl2", "sl3", "gl3"});
  std::vector<std::vector<InvariantPolynomial>> invs;
  for (const auto &alg : algebras) invs.push_back(builtinInvariants(alg));
  bool broken = cfg.negctl == "drop-linear";
  runTrials(cfg, rep, [&](int trial, Prng &rng) -> TrialResult {
    for (size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto &alg = algebras[ai];
      const auto &p = invs[ai][rng.uniform(0, static_cast<long>(invs[ai].size()) - 1)];
      auto v = randomElement(alg, rng, Rational());
      auto x = randomElement(alg, rng, Rational());
      if (broken) {
        Rational lhs = p.poly.eval((v + x).coeffs) - p.poly.eval(v.coeffs);
        Rational rhs(0);
        for (int k = 2; k <= p.degree; ++k) {
          std::vector<LieElement<Rational>> args(k, x);
          rhs += polarize(p, k, args, v) * inverse(Rational::factorial(k));
        }
        if (!(lhs == rhs))
          return {false, alg->name + "/" + p.label + ": expansion mismatch at v=" + v.str() +
                             ", x=" + x.str()};
        continue;
      }
      if (!checkTaylor(p, v, x))
        return {false, alg->name + "/" + p.label + ": expansion failed at v=" + v.str() +
                           ", x=" + x.str()};
      if (trial % 10 == 0) {
        auto ring = cfgRing(cfg);
        auto one = ArtinElem::scalar(ring, Rational(1));
        auto vA = promoteElement(v, one) + randomDeformation(alg, ring, rng);
        auto xA = promoteElement(x, one) + randomDeformation(alg, ring, rng);
        if (!checkTaylor(p, vA, xA))
          return {false, alg->name + "/" + p.label + ": expansion failed over the Artin ring"};
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteLemma(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto algebras = algebraList(cfg, {"sl2", "gl2", "sl3", "gl3"});
  std::vector<std::vector<InvariantPolynomial>> invs;
  for (const auto &alg : algebras) invs.push_back(builtinInvariants(alg));
  bool broken = cfg.negctl == "unbracketed";
  runTrials(cfg, rep, [&](int trial, Prng &rng) -> TrialResult {
    for (size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto &alg = algebras[ai];
      for (const auto &p : invs[ai]) {
        auto v = randomElement(alg, rng, Rational());
        auto x = randomElement(alg, rng, Rational());
        if (broken) {
          // orbit-direction bracket replaced by the raw argument
          if (!scalarIsZero(polarize(p, 1, {x}, v)))
            return {false, alg->name + "/" + p.label + ": nonzero at v=" + v.str() +
                               ", x=" + x.str()};
          continue;
        }
        if (!checkLemmaInvariance(p, v, x))
          return {false, alg->name + "/" + p.label + ": invariance failed at v=" + v.str() +
                             ", x=" + x.str()};
        if (trial % 10 == 0) {
          auto ring = cfgRing(cfg);
          auto one = ArtinElem::scalar(ring, Rational(1));
          auto vA = promoteElement(v, one) + randomDeformation(alg, ring, rng);
          auto xA = promoteElement(x, one) + randomDeformation(alg, ring, rng);
          if (!checkLemmaInvariance(p, vA, xA))
            return {false, alg->name + "/" + p.label + ": invariance failed over the Artin ring"};
        }
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteFunny(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto algebras = algebraList(cfg, {"sl2", "gl2", "sl3", "gl3"});
  std::vector<std::vector<InvariantPolynomial>> invs;
  for (const auto &alg : algebras) invs.push_back(builtinInvariants(alg));
  bool broken = cfg.negctl == "drop-last-term";
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    for (size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto &alg = algebras[ai];
      for (const auto &p : invs[ai]) {
        for (int k = 2; k <= p.degree; ++k) {
          auto v = randomElement(alg, rng, Rational());
          auto y = randomElement(alg, rng, Rational());
          std::vector<LieElement<Rational>> xs;
          for (int i = 0; i < k - 1; ++i) xs.push_back(randomElement(alg, rng, Rational()));
          if (broken) {
            std::vector<LieElement<Rational>> first = {bracket(y, v)};
            first.insert(first.end(), xs.begin(), xs.end());
            Rational total = polarize(p, k, first, v);
            for (int j = 0; j + 1 < k - 1; ++j) { // deliberately skips the last term
              std::vector<LieElement<Rational>> rest = {bracket(y, xs[j])};
              for (int l = 0; l < k - 1; ++l)
                if (l != j) rest.push_back(xs[l]);
              total += polarize(p, k - 1, rest, v);
            }
            if (!scalarIsZero(total))
              return {false, alg->name + "/" + p.label + ": nonzero at k=" + std::to_string(k)};
            continue;
          }
          if (!checkFunnyIdentity(p, k, y, xs, v))
            return {false, alg->name + "/" + p.label + ": identity failed at k=" +
                               std::to_string(k) + ", v=" + v.str() + ", y=" + y.str()};
        }
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteFactor(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto algebras = algebraList(cfg, {"gl2", "gl3", "sl3"});
  std::vector<std::vector<InvariantPolynomial>> invs;
  for (const auto &alg : algebras) {
    std::vector<InvariantPolynomial> keep;
    for (auto &p : charPolyQuotient(alg).components)
      if (p.degree >= 2 && p.degree <= 3) keep.push_back(std::move(p));
    invs.push_back(std::move(keep));
  }
  bool broken = cfg.negctl == "asymmetric";
  runTrials(cfg, rep, [&](int trial, Prng &rng) -> TrialResult {
    for (size_t ai = 0; ai < algebras.size(); ++ai) {
      const auto &alg = algebras[ai];
      for (const auto &p : invs[ai]) {
        SymForm f = fullPolarisationForm(p);
        if (broken)
          f = [&p](const std::vector<LieElement<ArtinElem>> &ws) {
            return polarizeFull(p, ws) + ws[0].coeffs[0];
          };
        LinMap lin;
        if (trial % 2 == 0) {
          lin = [](const LieElement<ArtinElem> &w) { return w; };
        } else {
          auto yq = randomElement(alg, rng, Rational());
          auto y = promoteElement(yq, ArtinElem::constant(Rational(1)));
          lin = [y](const LieElement<ArtinElem> &w) { return bracket(y, w); };
        }
        for (int k = 2; k <= std::min(3, p.degree); ++k) {
          auto v = randomElement(alg, rng, Rational());
          std::vector<LieElement<Rational>> xs;
          for (int i = 0; i < k - 1; ++i) xs.push_back(randomElement(alg, rng, Rational()));
          if (!checkFactorLemma(f, p.degree, lin, v, xs, rng))
            return {false, alg->name + "/" + p.label + ": count mismatch at k=" +
                               std::to_string(k)};
        }
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteCodifferential(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  struct Named {
    std::string name;
    Dgla dgla;
  };
  std::vector<Named> dglas;
  {
    auto sl2 = LieAlgebra::sl(2);
    auto gl2 = LieAlgebra::gl(2);
    dglas.push_back({"sl2/regular-ss",
                     buildAdjointModel(sl2, regularSemisimple(sl2), builtinInvariants(sl2)).dgla});
    dglas.push_back({"gl2/regular-nilpotent",
                     buildAdjointModel(gl2, regularNilpotent(gl2), builtinInvariants(gl2)).dgla});
    for (const auto &f : {std::string("curve_sl2_b2"), std::string("surface_sl2_dbar")})
      dglas.push_back({f, hitchinFixture(f).dgla});
  }
  if (cfg.negctl == "flip-bracket-sign") {
    // negate one bracket value (both orientations): the structure stays
    // antisymmetric but violates the Leibniz rule, so Q^2 must catch it
    Dgla broken = dglas[0].dgla;
    for (auto &[key, val] : broken.table) {
      if (key.first.first != 0 || key.second.first != 1) continue;
      bool any = false;
      for (auto &[k, c] : val) {
        c = -c;
        any = true;
      }
      if (any) {
        for (auto &[k, c] : broken.table[{key.second, key.first}]) c = -c;
        break;
      }
    }
    runTrials(cfg, rep, [&](int, Prng &) -> TrialResult {
      for (int i = 0; i < broken.space.dim(0); ++i)
        for (int j = i; j < broken.space.dim(0); ++j)
          if (!checkCodifferential(broken, {{0, i}, {0, j}}))
            return {false, dglas[0].name + ": Q^2 != 0 on word (0," + std::to_string(i) +
                               ")(0," + std::to_string(j) + ")"};
      return {};
    });
    return rep;
  }
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    for (const auto &[name, d] : dglas) {
      std::vector<Factor> pool;
      for (const auto &[deg, dim] : d.space.dims)
        for (int i = 0; i < dim; ++i) pool.push_back({deg, i});
      int len = static_cast<int>(rng.uniform(2, 4));
      Word w;
      for (int i = 0; i < len; ++i)
        w.push_back(pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)]);
      auto n = normalizeWord(w);
      if (n.sign.isZero()) continue;
      if (!checkCodifferential(d, n.word)) {
        std::string desc;
        for (const auto &f : n.word)
          desc += "(" + std::to_string(f.degree) + "," + std::to_string(f.index) + ")";
        return {false, name + ": Q^2 != 0 on word " + desc};
      }
    }
    return {};
  });
  return rep;
}

std::vector<std::pair<std::string, AdjointModel>> adjointFixtures(const SuiteConfig &cfg) {
  std::vector<std::pair<std::string, AdjointModel>> out;
  for (const auto &alg : algebraList(cfg, {"sl2", "gl2"}))
    for (const auto &desc : vDescList(cfg))
      out.push_back({alg->name + "/" + desc,
                     buildAdjointModel(alg, resolveV(alg, desc), builtinInvariants(alg))});
  return out;
}

SuiteReport suiteAdjointMorphism(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto fixtures = adjointFixtures(cfg);
  bool broken = cfg.negctl == "scale-quadratic";
  // enumerate once, spread the word list across the indexed trials
  std::vector<std::pair<int, Word>> work; // (fixture, word)
  for (size_t fi = 0; fi < fixtures.size(); ++fi) {
    int maxLen = std::min(3, std::max(2, cfg.kmax));
    for (int len = 1; len <= maxLen; ++len)
      for (auto &w : enumerateWords(fixtures[fi].second.dgla.space, {0, 1}, len))
        work.push_back({static_cast<int>(fi), std::move(w)});
  }
  runTrials(cfg, rep, [&](int trial, Prng &) -> TrialResult {
    for (size_t i = trial; i < work.size(); i += cfg.trials) {
      const auto &[fi, w] = work[i];
      const auto &m = fixtures[fi].second;
      auto h = adjointMorphism(m, broken);
      if (!checkMorphismWord(m.dgla, m.base, h, w)) {
        std::string desc;
        for (const auto &f : w)
          desc += "(" + std::to_string(f.degree) + "," + std::to_string(f.index) + ")";
        return {false, fixtures[fi].first + ": equation failed on word " + desc};
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteDefChi(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto fixtures = adjointFixtures(cfg);
  bool broken = cfg.negctl == "scale-quadratic";
  std::vector<std::shared_ptr<const ArtinRing>> rings = {
      ArtinRing::make(1, 2), ArtinRing::make(1, 4), ArtinRing::make(2, 3)};
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    for (const auto &[name, m] : fixtures) {
      auto h = adjointMorphism(m, broken);
      for (const auto &ring : rings) {
        auto b = randomDeformation(m.alg, ring, rng);
        if (!verifyDefEqualsChi(m, h, b))
          return {false, name + ": pushforward != invariant difference over Q[" +
                             std::to_string(ring->numVars) + " vars]/(deg >= " +
                             std::to_string(ring->truncationOrder) + ") at b=" + b.str()};
        auto lambda = randomDeformation(m.alg, ring, rng);
        if (!verifyGaugeDescent(m, h, b, lambda))
          return {false, name + ": gauge descent failed at b=" + b.str() +
                             ", lambda=" + lambda.str()};
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteHull(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  struct Fixture {
    std::string name;
    AdjointModel model;
    HullData hull;
  };
  std::vector<Fixture> fixtures;
  for (const auto &alg : algebraList(cfg, {"sl2", "sl3"})) {
    std::vector<std::string> descs =
        cfg.vDesc.empty() ? std::vector<std::string>{"regular-ss", "regular-nilpotent"}
                          : std::vector<std::string>{cfg.vDesc};
    for (const auto &desc : descs) {
      auto v = resolveV(alg, desc);
      fixtures.push_back({alg->name + "/" + desc,
                          buildAdjointModel(alg, v, charPolyQuotient(alg).components),
                          computeHull(alg, v)});
    }
  }
  bool broken = cfg.negctl == "no-gauge";
  runTrials(cfg, rep, [&](int trial, Prng &rng) -> TrialResult {
    auto ring = cfgRing(cfg);
    for (const auto &fx : fixtures) {
      if (trial == 0 && !verifyHullTangent(fx.model, fx.hull))
        return {false, fx.name + ": slice is not a tangent-level complement"};
      auto b = randomDeformation(fx.model.alg, ring, rng);
      auto onSlice = [&](const LieElement<ArtinElem> &w) {
        for (int i = 0; i < fx.model.alg->dim; ++i) {
          bool in = false;
          for (int s : fx.hull.sliceIndices)
            if (s == i) in = true;
          if (!in && !w.coeffs[i].isZero()) return false;
        }
        return true;
      };
      if (broken) {
        if (!onSlice(b)) return {false, fx.name + ": raw sample already off the slice"};
        continue;
      }
      auto res = normalizeIntoHull(fx.model, fx.hull, b);
      if (!res.ok || !onSlice(res.normalized))
        return {false, fx.name + ": normalization left the slice at b=" + b.str()};
      auto one = ArtinElem::scalar(ring, Rational(1));
      auto vA = promoteElement(fx.model.v, one);
      for (const auto &p : fx.model.invariants)
        if (!(p.poly.eval((vA + b).coeffs) == p.poly.eval((vA + res.normalized).coeffs)))
          return {false, fx.name + "/" + p.label + ": invariant value changed under gauge"};
    }
    return {};
  });
  return rep;
}

SuiteReport suiteHitchinMorphism(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto models = modelList(cfg);
  bool broken = cfg.negctl == "flip-vertical-sign";
  std::vector<std::pair<int, Word>> work;
  for (size_t mi = 0; mi < models.size(); ++mi) {
    std::vector<int> degrees;
    for (int d = 0; d <= models[mi].forms.gens(); ++d) degrees.push_back(d);
    int maxLen = std::min(2, std::max(1, cfg.kmax));
    for (int len = 1; len <= maxLen; ++len)
      for (auto &w : enumerateWords(models[mi].dgla.space, degrees, len))
        work.push_back({static_cast<int>(mi), std::move(w)});
  }
  runTrials(cfg, rep, [&](int trial, Prng &rng) -> TrialResult {
    for (size_t i = trial; i < work.size(); i += cfg.trials) {
      const auto &[mi, w] = work[i];
      const auto &m = models[mi];
      auto h = hitchinMorphism(m, broken);
      if (!checkMorphismWord(m.dgla, m.target, h, w)) {
        std::string desc;
        for (const auto &f : w)
          desc += "(" + std::to_string(f.degree) + "," + std::to_string(f.index) + ")";
        return {false, m.name + ": equation failed on word " + desc};
      }
    }
    if (cfg.kmax >= 3) {
      // one sampled length-3 word per trial and model
      for (const auto &m : models) {
        auto h = hitchinMorphism(m, broken);
        auto pool = enumerateWords(m.dgla.space, {0, 1, 2}, 1);
        Word w;
        for (int i = 0; i < 3; ++i)
          w.push_back(pool[rng.uniform(0, static_cast<long>(pool.size()) - 1)][0]);
        auto n = normalizeWord(w);
        if (n.sign.isZero()) continue;
        if (!checkMorphismWord(m.dgla, m.target, h, n.word)) {
          std::string desc;
          for (const auto &f : n.word)
            desc += "(" + std::to_string(f.degree) + "," + std::to_string(f.index) + ")";
          return {false, m.name + ": equation failed on word " + desc};
        }
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteDefHitchin(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto models = modelList(cfg);
  std::vector<HitchinModel> scaled;
  if (cfg.negctl == "wrong-theta")
    for (const auto &m : models) {
      std::vector<LieElement<Rational>> twice;
      for (const auto &t : m.theta) twice.push_back(t * Rational(2));
      scaled.push_back(buildHitchinModel(m.name + "-scaled", m.forms, m.alg, twice,
                                         charPolyQuotient(m.alg).components));
    }
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    auto ring = cfgRing(cfg);
    for (size_t mi = 0; mi < models.size(); ++mi) {
      const auto &m = models[mi];
      auto h = hitchinMorphism(scaled.empty() ? m : scaled[mi]);
      for (const auto &stratum :
           {std::string("horizontal"), std::string("vertical"), std::string("mixed")}) {
        auto x = hitchinSample(m, ring, rng, stratum);
        if (!mcDefect(m.dgla, x).isZero())
          return {false, m.name + "/" + stratum + ": sample violates the deformation equation"};
        if (!verifyDefEqualsHitchin(m, h, x))
          return {false, m.name + "/" + stratum + ": pushforward != invariant difference"};
      }
    }
    return {};
  });
  return rep;
}

SuiteReport suiteObstruction(const SuiteConfig &cfg) {
  SuiteReport rep{cfg.suite, cfg};
  auto models = modelList(cfg);
  bool broken = cfg.negctl == "skip-cocycle";
  std::vector<std::vector<VecQ>> kernels;
  for (const auto &m : models)
    kernels.push_back(kernelBasis(m.dgla.diff.at(1), m.dgla.space.dim(1)));
  runTrials(cfg, rep, [&](int, Prng &rng) -> TrialResult {
    auto ring = ArtinRing::make(1, 3); // the total ring of the t^2 small extension
    ArtinElem t = ArtinElem::variable(ring, 0, Rational(1));
    for (size_t mi = 0; mi < models.size(); ++mi) {
      const auto &m = models[mi];
      if (broken && m.name != "curve_sl2") continue;
      int dim1 = m.dgla.space.dim(1);
      std::vector<Rational> first(dim1);
      if (broken) {
        for (auto &c : first) c = rng.smallInt(); // not a cocycle in general
      } else {
        for (const auto &v : kernels[mi]) {
          Rational c = rng.smallInt();
          for (int i = 0; i < dim1; ++i) first[i] += c * v[i];
        }
      }
      GradedElement<ArtinElem> x;
      auto &slot = x.comps[1];
      slot.assign(dim1, ArtinElem::zero(ring));
      for (int i = 0; i < dim1; ++i)
        slot[i] = t * first[i] + t * t * rng.smallInt();
      auto image = applyLinearPart(hitchinMorphism(m), mcDefect(m.dgla, x));
      if (!targetExact(m, image, 2))
        return {false, m.name + ": obstruction image is not exact"};
    }
    return {};
  });
  return rep;
}

} // namespace

std::vector<std::string> suiteNames() {
  return {"artin", "lie", "polarisation", "taylor", "lemma", "funny", "factor",
          "codifferential", "adjoint-morphism", "def-chi", "hull",
          "hitchin-morphism", "def-hitchin", "obstruction"};
}

std::vector<std::string> negctlNames(const std::string &suite) {
  if (suite == "artin") return {"break-distributivity"};
  if (suite == "lie") return {"flip-jacobi"};
  if (suite == "polarisation") return {"scale-dual"};
  if (suite == "taylor") return {"drop-linear"};
  if (suite == "lemma") return {"unbracketed"};
  if (suite == "funny") return {"drop-last-term"};
  if (suite == "factor") return {"asymmetric"};
  if (suite == "codifferential") return {"flip-bracket-sign"};
  if (suite == "adjoint-morphism") return {"scale-quadratic"};
  if (suite == "def-chi") return {"scale-quadratic"};
  if (suite == "hull") return {"no-gauge"};
  if (suite == "hitchin-morphism") return {"flip-vertical-sign"};
  if (suite == "def-hitchin") return {"wrong-theta"};
  if (suite == "obstruction") return {"skip-cocycle"};
  throw std::runtime_error("unknown suite '" + suite + "'");
}

SuiteReport runSuite(const SuiteConfig &cfg) {
  checkNegctl(cfg);
  if (cfg.trials < 1) throw std::runtime_error("need at least one trial");
  if (cfg.suite == "artin") return suiteArtin(cfg);
  if (cfg.suite == "lie") return suiteLie(cfg);
  if (cfg.suite == "polarisation") return suitePolarisation(cfg);
  if (cfg.suite == "taylor") return suiteTaylor(cfg);
  if (cfg.suite == "lemma") return suiteLemma(cfg);
  if (cfg.suite == "funny") return suiteFunny(cfg);
  if (cfg.suite == "factor") return suiteFactor(cfg);
  if (cfg.suite == "codifferential") return suiteCodifferential(cfg);
  if (cfg.suite == "adjoint-morphism") return suiteAdjointMorphism(cfg);
  if (cfg.suite == "def-chi") return suiteDefChi(cfg);
  if (cfg.suite == "hull") return suiteHull(cfg);
  if (cfg.suite == "hitchin-morphism") return suiteHitchinMorphism(cfg);
  if (cfg.suite == "def-hitchin") return suiteDefHitchin(cfg);
  if (cfg.suite == "obstruction") return suiteObstruction(cfg);
  throw std::runtime_error("unknown suite '" + cfg.suite + "'");
}

std::vector<SuiteReport> runAll(uint64_t seed, const std::string &only, bool parallel) {
  if (!only.empty()) {
    auto names = suiteNames();
    if (std::find(names.begin(), names.end(), only) == names.end())
      throw std::runtime_error("unknown suite '" + only + "'");
  }
  std::map<std::string, int> trials = {
      {"artin", 100}, {"lie", 100},   {"polarisation", 50}, {"taylor", 100},
      {"lemma", 100}, {"funny", 100}, {"factor", 10},       {"codifferential", 50},
      {"adjoint-morphism", 16},       {"def-chi", 50},      {"hull", 50},
      {"hitchin-morphism", 24},       {"def-hitchin", 8},   {"obstruction", 20}};
  std::vector<SuiteReport> out;
  for (const auto &name : suiteNames()) {
    if (!only.empty() && name != only) continue;
    SuiteConfig cfg;
    cfg.suite = name;
    cfg.seed = seed;
    cfg.trials = trials.at(name);
    cfg.parallel = parallel;
    out.push_back(runSuite(cfg));
  }
  return out;
}

std::string reportJson(const std::vector<SuiteReport> &reports) {
  OrderedJson root;
  root["schema"] = "linfver-report/1";
  root["prng"] = Prng::kAlgorithm;
  root["suites"] = OrderedJson::array();
  for (const auto &r : reports) {
    OrderedJson j;
    j["suite"] = r.suite;
    OrderedJson c;
    c["algebra"] = r.config.algebra;
    c["model"] = r.config.model;
    c["v"] = r.config.vDesc;
    c["trials"] = r.config.trials;
    c["seed"] = r.config.seed;
    c["kmax"] = r.config.kmax;
    c["ring"] = OrderedJson{{"vars", r.config.ringVars}, {"order", r.config.ringOrder}};
    c["negctl"] = r.config.negctl;
    j["config"] = std::move(c);
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["pass"] = r.pass();
    if (r.firstCounterexample.empty())
      j["first_counterexample"] = nullptr;
    else
      j["first_counterexample"] = r.firstCounterexample;
    root["suites"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string reportHuman(const std::vector<SuiteReport> &reports, double wallSeconds) {
  std::ostringstream out;
  size_t width = 0;
  for (const auto &r : reports) width = std::max(width, r.suite.size());
  int failed = 0;
  for (const auto &r : reports) {
    out << "  " << r.suite << std::string(width - r.suite.size() + 2, ' ')
        << (r.pass() ? "pass" : "FAIL") << "  (trials " << r.trials << ", failures "
        << r.failures << ")";
    if (!r.config.negctl.empty()) out << "  [negctl " << r.config.negctl << "]";
    out << "\n";
    if (!r.pass()) {
      out << "      counterexample: " << r.firstCounterexample << "\n";
      ++failed;
    }
  }
  out << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed");
  char buf[64];
  std::snprintf(buf, sizeof(buf), " in %.2fs\n", wallSeconds);
  out << buf;
  return out.str();
}

} // namespace linf
