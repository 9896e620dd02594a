#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ordlen/finite_module.hpp"
#include "ordlen/module.hpp"
#include "ordlen/monomial.hpp"

namespace ordlen::checks {

/// One verified property: how many instances were examined and, on failure,
/// the first few counterexamples.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;
  std::vector<std::string> witnesses;
};

struct CorpusOptions {
  /// Exhaustive sweeps cover rings with 1 .. min(max_vars, 2) variables.
  std::size_t max_vars = 2;
  /// Generator degree bound of the exhaustive corpus.
  Exponent max_deg = 3;
  /// Random J ⊆ I pairs drawn in 3 variables when max_vars >= 3.
  std::size_t random_pairs = 500;
  std::uint64_t seed = 1;
  /// Truncation order of the endomorphism fixture.
  std::size_t truncation = 8;
  /// Dimension cap for the F2 submodule enumeration.
  std::size_t max_oracle_dim = 10;
};

/// Every monomial ideal of n variables generated in degree <= d, including
/// the zero ideal, sorted.
std::vector<MonomialIdeal> all_ideals(std::size_t n, Exponent d);

/// Every pair J ⊆ I with both ideals in all_ideals(n, d).
std::vector<MonomialModule> exhaustive_pairs(std::size_t n, Exponent d);

/// Seeded pairs J ⊆ I in n variables: I random with generators of degree
/// <= d, J = I ∩ C for an independent random C. Deterministic in the seed.
std::vector<MonomialModule> random_pairs(std::size_t n, Exponent d, std::size_t count,
                                         std::uint64_t seed);

/// Submodules I'/J of I/J with I' = J + (m1, m2) for monomials m1, m2 of I
/// of degree <= d, plus I itself. Deduplicated.
std::vector<MonomialIdeal> sandwich_family(const MonomialModule& M, Exponent d);

/// Every monomial ideal of n variables containing the d-th power of the
/// maximal ideal.
std::vector<MonomialIdeal> artinian_ideals(std::size_t n, Exponent d);

/// Names accepted by run_suite, in canonical order ("all" excluded).
const std::vector<std::string>& suite_names();

/// Runs a named suite ("all" runs every suite). Throws InvalidArgument for an
/// unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const CorpusOptions& opts = {});

// Individual suites.
std::vector<CheckResult> check_ordinals(Exponent max_degree = 3, unsigned max_coeff = 3);
std::vector<CheckResult> check_examples();
std::vector<CheckResult> check_domains(std::size_t max_vars = 3);
std::vector<CheckResult> check_semiadd(const CorpusOptions& opts);
std::vector<CheckResult> check_submod(const CorpusOptions& opts);
std::vector<CheckResult> check_latt(const CorpusOptions& opts);
std::vector<CheckResult> check_dimfil(const CorpusOptions& opts);
std::vector<CheckResult> check_primmin(const CorpusOptions& opts);
std::vector<CheckResult> check_maxassopen(const CorpusOptions& opts);
std::vector<CheckResult> check_endo_mult(const CorpusOptions& opts);
std::vector<CheckResult> check_oracle_artinian(const CorpusOptions& opts);
std::vector<CheckResult> check_endo_fixture(const CorpusOptions& opts);

bool all_pass(const std::vector<CheckResult>& results);

/// "CHECK <name> PASS|FAIL <cases> cases; <detail>" plus indented witnesses.
std::string format_report(const std::vector<CheckResult>& results);
nlohmann::json report_json(const std::vector<CheckResult>& results);

} // namespace ordlen::checks
