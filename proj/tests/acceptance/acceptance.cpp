// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 only when every criterion passes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ordlen/checks.hpp"

using namespace ordlen::checks;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> suites;
  std::optional<double> limit_seconds;
};

CorpusOptions acceptance_corpus() {
  CorpusOptions o;
  o.max_vars = 3;
  o.max_deg = 3;
  o.random_pairs = 500;
  o.seed = 1;
  o.truncation = 8;
  o.max_oracle_dim = 10;
  return o;
}

} // namespace

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  const std::vector<Criterion> criteria{
      {1, "worked examples", {"examples"}, 1.0},
      {2, "domain lengths", {"domain"}, 1.0},
      {3, "F2 chain oracle on all J above m^4", {"oracle-artinian"}, 60.0},
      {4, "semi-additivity sweep", {"semiadd"}, 120.0},
      {5, "submodule monotonicity sweep", {"submod"}, std::nullopt},
      {6, "lattice law and strict join", {"latt"}, std::nullopt},
      {7, "dimension filtration", {"dimfil"}, std::nullopt},
      {8, "localization kernel identity", {"primmin"}, std::nullopt},
      {9, "maximal embedded prime is open", {"maxassopen"}, std::nullopt},
      {10, "multiplication endomorphism laws", {"endo-mult"}, std::nullopt},
      {11, "endomorphism fixture", {"endo-fixture"}, 30.0},
      {12, "ordinal algebra", {"ordinal"}, 10.0},
  };

  const CorpusOptions opts = acceptance_corpus();
  bool all_ok = true;
  for (const auto& c : criteria) {
    std::vector<CheckResult> results;
    std::string error;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      for (const auto& s : c.suites) {
        auto r = run_suite(s, opts);
        results.insert(results.end(), r.begin(), r.end());
      }
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::size_t cases = 0, failed = 0;
    for (const auto& r : results) {
      cases += r.cases;
      failed += r.pass ? 0 : 1;
    }
    const bool in_time = !c.limit_seconds || secs < *c.limit_seconds;
    const bool ok = error.empty() && failed == 0 && !results.empty() && in_time;
    all_ok = all_ok && ok;

    char timing[64];
    if (c.limit_seconds) {
      std::snprintf(timing, sizeof timing, "%.3fs / limit %.0fs", secs, *c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.3fs", secs);
    }
    std::cout << "CRITERION " << c.id << (ok ? " PASS " : " FAIL ") << c.title << " ("
              << results.size() << " checks, " << cases << " cases, " << timing << ")";
    if (!error.empty()) std::cout << " error: " << error;
    if (!in_time) std::cout << " over time limit";
    std::cout << '\n';
    for (const auto& r : results) {
      if (verbose || !r.pass) std::cout << "  " << format_report({r});
    }
  }
  std::cout << (all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << '\n';
  return all_ok ? 0 : 1;
}
