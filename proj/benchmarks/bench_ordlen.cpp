#include <benchmark/benchmark.h>

#include "ordlen/calculus.hpp"
#include "ordlen/checks.hpp"
#include "ordlen/finite_module.hpp"
#include "ordlen/io.hpp"
#include "ordlen/ordinal.hpp"
#include "ordlen/standard_pairs.hpp"

using namespace ordlen;

static void BM_OrdSum(benchmark::State& state) {
  const Ordinal a = parse_ordinal("3w^3 + 2w^2 + w + 7");
  const Ordinal b = parse_ordinal("w^2 + 5w + 1");
  for (auto _ : state) benchmark::DoNotOptimize(ord_sum(a, b));
}
BENCHMARK(BM_OrdSum);

static void BM_ShuffleSum(benchmark::State& state) {
  const Ordinal a = parse_ordinal("3w^3 + 2w^2 + w + 7");
  const Ordinal b = parse_ordinal("w^2 + 5w + 1");
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_sum(a, b));
}
BENCHMARK(BM_ShuffleSum);

// Length of R/J for a staircase J in n variables: 2^n localizations.
static void BM_Length(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Exponent> e(n, 0);
    e[i] = 2;
    e[i + 1] = 1;
    gens.emplace_back(e);
  }
  gens.push_back(Monomial::variable(n, n - 1, 4));
  const MonomialModule M = MonomialModule::quotient(MonomialIdeal(n, gens));
  for (auto _ : state) benchmark::DoNotOptimize(length(M));
}
BENCHMARK(BM_Length)->DenseRange(2, 6);

static void BM_StandardPairs(benchmark::State& state) {
  const auto vars = io::default_vars(3);
  const MonomialIdeal I = io::parse_ideal("x^3*y, x*y^2*z, y^4, x^2*z^3, z^5", vars);
  for (auto _ : state) benchmark::DoNotOptimize(standard_pairs(I));
}
BENCHMARK(BM_StandardPairs);

static void BM_LongestChain(benchmark::State& state) {
  const auto d = static_cast<Exponent>(state.range(0));
  const MonomialModule M = MonomialModule::quotient(MonomialIdeal::maximal_power(2, d));
  const auto F = oracle::FiniteModule::from_subquotient(M);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::longest_chain(F, 10));
}
BENCHMARK(BM_LongestChain)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SemiaddSweep(benchmark::State& state) {
  checks::CorpusOptions o;
  o.max_vars = 2;
  o.max_deg = static_cast<Exponent>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(checks::check_semiadd(o));
}
BENCHMARK(BM_SemiaddSweep)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
