#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linf/lie.hpp"

namespace linf {

/// One verification suite invocation. Suites are identified by the ids in
/// suiteNames(); every suite carries at least one built-in sabotage flag
/// (negctl) that must make it fail, guarding against vacuous passes.
struct SuiteConfig {
  std::string suite;
  std::string algebra;   // "" = built-in fixture list; sl2|sl3|gl2|gl3|spec:<file>
  std::string model;     // "" = built-in fixture list; fixture name or spec:<file>
  std::string vDesc;     // "" = fixture list; regular-ss|regular-nilpotent|zero|coeffs:c1,..,cn
  int trials = 50;
  uint64_t seed = 0;
  int kmax = 3;
  int ringVars = 1;      // coefficient ring Q[t_1..t_r]/(deg >= m)
  int ringOrder = 3;
  std::string negctl;    // sabotage flag, "" = off
  bool parallel = true;  // OpenMP trial loop; false = serial reference path
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  int trials = 0;
  int failures = 0;
  std::string firstCounterexample; // canonical serialization, "" if none

  bool pass() const { return failures == 0; }
};

/// Ids in run-all dependency order.
std::vector<std::string> suiteNames();

/// Recognized sabotage flags for one suite.
std::vector<std::string> negctlNames(const std::string &suite);

/// Execute one suite. Configuration problems (unknown suite/algebra/model,
/// unreadable spec file) throw std::runtime_error; mathematical failures are
/// counted in the report.
SuiteReport runSuite(const SuiteConfig &cfg);

/// All suites in dependency order with default fixtures; `only` restricts to
/// a single suite id ("" = everything).
std::vector<SuiteReport> runAll(uint64_t seed, const std::string &only = "",
                                bool parallel = true);

/// Deterministic JSON serialization: same configs and seed give bytewise
/// identical output (wall time deliberately excluded).
std::string reportJson(const std::vector<SuiteReport> &reports);

/// Human-readable summary table.
std::string reportHuman(const std::vector<SuiteReport> &reports, double wallSeconds);

/// Fixture resolution shared with the CLI: sl<n>, gl<n> or spec:<file>.
std::shared_ptr<const LieAlgebra> resolveAlgebra(const std::string &name);

/// Base point from a description: regular-ss, regular-nilpotent, zero or
/// coeffs:c1,..,cn.
LieElement<Rational> resolveV(const std::shared_ptr<const LieAlgebra> &alg,
                              const std::string &desc);

} // namespace linf
