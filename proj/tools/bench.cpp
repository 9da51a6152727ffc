// Compares the OpenMP trial loop against the serial reference path on the
// heavier suites and checks that both produce the identical report.
#include <chrono>
#include <cstdio>
#include <iostream>

#include "linf/suites.hpp"

using namespace linf;

namespace {

double timed(const SuiteConfig &cfg, SuiteReport &out) {
  auto start = std::chrono::steady_clock::now();
  out = runSuite(cfg);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
  std::vector<SuiteConfig> configs;
  for (const auto &suite : {"funny", "def-chi", "hitchin-morphism", "def-hitchin"}) {
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.seed = 0;
    cfg.trials = suite == std::string("def-hitchin") ? 6 : 24;
    configs.push_back(cfg);
  }
  bool ok = true;
  std::printf("%-20s %10s %10s %8s\n", "suite", "serial[s]", "openmp[s]", "speedup");
  for (auto cfg : configs) {
    SuiteReport serial, parallel;
    cfg.parallel = false;
    double ts = timed(cfg, serial);
    cfg.parallel = true;
    double tp = timed(cfg, parallel);
    bool same = reportJson({serial}) == reportJson({parallel});
    ok = ok && same && serial.pass() && parallel.pass();
    std::printf("%-20s %10.2f %10.2f %7.2fx%s\n", cfg.suite.c_str(), ts, tp, ts / tp,
                same ? "" : "  REPORTS DIFFER");
  }
  if (!ok) {
    std::cerr << "bench: verification or report mismatch\n";
    return 1;
  }
  return 0;
}
