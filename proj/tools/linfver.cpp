#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "linf/kuranishi.hpp"
#include "linf/suites.hpp"

using namespace linf;

namespace {

int emit(const std::vector<SuiteReport> &reports, const std::string &jsonPath,
         double wallSeconds) {
  std::cout << reportHuman(reports, wallSeconds);
  if (!jsonPath.empty()) {
    std::ofstream out(jsonPath);
    if (!out) {
      std::cerr << "error: cannot write '" << jsonPath << "'\n";
      return 2;
    }
    out << reportJson(reports);
  }
  for (const auto &r : reports)
    if (!r.pass()) return 1;
  return 0;
}

// `hull` emits the slice basis and the per-trial normal forms.
int runHullCommand(const std::string &algebra, const std::string &vDesc, int trials,
                   uint64_t seed, int ringOrder, const std::string &jsonPath) {
  SuiteConfig probe; // reuse the suite fixture resolution
  probe.suite = "hull";
  probe.algebra = algebra.empty() ? "sl2" : algebra;
  probe.vDesc = vDesc.empty() ? "regular-ss" : vDesc;
  probe.trials = trials;
  probe.seed = seed;
  probe.ringOrder = ringOrder;
  auto rep = runSuite(probe);

  // reconstruct the fixture for the printed data
  auto alg = resolveAlgebra(probe.algebra);
  auto model = buildAdjointModel(alg, resolveV(alg, probe.vDesc),
                                 charPolyQuotient(alg).components);
  auto hull = computeHull(alg, model.v);

  std::cout << "slice complement of Im(ad v) in " << alg->name << " at v = " << model.v.str()
            << ":\n";
  for (int i : hull.sliceIndices) std::cout << "  " << alg->basisLabels[i] << "\n";

  nlohmann::ordered_json root;
  root["schema"] = "linfver-hull/1";
  root["algebra"] = alg->name;
  root["v"] = model.v.str();
  root["slice"] = nlohmann::ordered_json::array();
  for (int i : hull.sliceIndices) root["slice"].push_back(alg->basisLabels[i]);
  root["normal_forms"] = nlohmann::ordered_json::array();
  auto ring = ArtinRing::make(1, std::max(2, ringOrder));
  for (int trial = 0; trial < trials; ++trial) {
    Prng rng = Prng::forTrial(seed, static_cast<uint64_t>(trial));
    auto b = LieElement<ArtinElem>::zero(alg);
    for (int i = 0; i < alg->dim; ++i) {
      ArtinElem c = ArtinElem::variable(ring, 0, rng.smallInt());
      if (ring->truncationOrder > 2)
        c += ArtinElem::variable(ring, 0, Rational(1)) *
             ArtinElem::variable(ring, 0, rng.smallInt());
      b.coeffs[i] = std::move(c);
    }
    auto res = normalizeIntoHull(model, hull, b);
    nlohmann::ordered_json item;
    item["trial"] = trial;
    item["input"] = b.str();
    item["normal_form"] = res.ok ? res.normalized.str() : "FAILED";
    root["normal_forms"].push_back(std::move(item));
    std::cout << "  trial " << trial << ": " << (res.ok ? res.normalized.str() : "FAILED")
              << "\n";
    if (!res.ok) {
      std::cerr << "error: normalization failed on trial " << trial << "\n";
      return 1;
    }
  }
  if (!jsonPath.empty()) {
    std::ofstream out(jsonPath);
    if (!out) {
      std::cerr << "error: cannot write '" << jsonPath << "'\n";
      return 2;
    }
    out << root.dump(2) << "\n";
  }
  return rep.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification of polarisation, transfer-morphism and deformation "
               "identities for adjoint-quotient and spectral-data models"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string jsonPath;
  std::string only;
  bool serial = false;

  auto *verify = app.add_subcommand("verify", "run one verification suite");
  std::string suiteArg;
  verify->add_option("suite", suiteArg, "suite id: " + [] {
                      std::string s;
                      for (const auto &n : suiteNames()) s += (s.empty() ? "" : "|") + n;
                      return s;
                    }())
      ->required();
  verify->add_option("--algebra", cfg.algebra, "sl<n>, gl<n> or spec:<file>");
  verify->add_option("--model", cfg.model, "fixture name or model spec file");
  verify->add_option("--v", cfg.vDesc, "regular-ss|regular-nilpotent|zero|coeffs:c1,..,cn");
  verify->add_option("--trials", cfg.trials, "number of seeded trials");
  verify->add_option("--seed", cfg.seed, "PRNG seed");
  verify->add_option("--kmax", cfg.kmax, "maximum word length / Taylor order");
  verify->add_option("--ring-vars", cfg.ringVars, "coefficient ring variable count");
  verify->add_option("--ring-order", cfg.ringOrder, "coefficient ring truncation order");
  verify->add_option("--negctl", cfg.negctl, "built-in sabotage flag (suite must then fail)");
  verify->add_option("--json", jsonPath, "write the JSON report to this path");
  verify->add_flag("--serial", serial, "disable the parallel trial loop");

  auto *all = app.add_subcommand("run-all", "run every suite in dependency order");
  all->add_option("--seed", cfg.seed, "PRNG seed");
  all->add_option("--only", only, "restrict to one suite id");
  all->add_option("--json", jsonPath, "write the JSON report to this path");
  all->add_flag("--serial", serial, "disable the parallel trial loop");

  auto *hullCmd = app.add_subcommand("hull", "emit the slice basis and per-trial normal forms");
  std::string hullAlgebra = "sl2", hullV = "regular-ss";
  int hullTrials = 5, hullOrder = 3;
  uint64_t hullSeed = 0;
  hullCmd->add_option("--algebra", hullAlgebra, "sl<n>, gl<n> or spec:<file>");
  hullCmd->add_option("--v", hullV, "regular-ss|regular-nilpotent|zero|coeffs:c1,..,cn");
  hullCmd->add_option("--trials", hullTrials, "number of seeded trials");
  hullCmd->add_option("--seed", hullSeed, "PRNG seed");
  hullCmd->add_option("--ring-order", hullOrder, "coefficient ring truncation order");
  hullCmd->add_option("--json", jsonPath, "write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage/parse problems exit with 2
  }

  try {
    auto start = std::chrono::steady_clock::now();
    if (verify->parsed()) {
      cfg.suite = suiteArg;
      cfg.parallel = !serial;
      auto rep = runSuite(cfg);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return emit({rep}, jsonPath, secs);
    }
    if (all->parsed()) {
      auto reports = runAll(cfg.seed, only, !serial);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return emit(reports, jsonPath, secs);
    }
    return runHullCommand(hullAlgebra, hullV, hullTrials, hullSeed, hullOrder, jsonPath);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
