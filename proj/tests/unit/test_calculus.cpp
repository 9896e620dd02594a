#include <doctest.h>

#include "oracles.hpp"
#include "ordlen/calculus.hpp"
#include "ordlen/checks.hpp"
#include "ordlen/error.hpp"
#include "ordlen/io.hpp"
#include "ordlen/standard_pairs.hpp"

using namespace ordlen;

namespace {

const io::VarNames xy{"x", "y"};
const MonomialPrime px(2, {0});
const MonomialPrime pxy(2, {0, 1});

MonomialIdeal I2(const char* s) { return io::parse_ideal(s, xy); }
Monomial m2(const char* s) { return io::parse_monomial(s, xy); }

const MonomialIdeal J = io::parse_ideal("x^2, x*y", xy);
const MonomialModule R_J = MonomialModule::quotient(J);

MonomialModule sub(const char* gens) { return MonomialModule(ideal_sum(I2(gens), J), J); }

Ordinal w_plus_1() { return Ordinal{1, 1}; }

} // namespace

TEST_CASE("bivalent ring k[x,y]/(x^2, xy)") {
  CHECK(length(R_J) == w_plus_1());
  CHECK(length(sub("y")) == Ordinal{0, 1});
  CHECK(length(sub("x, y")) == w_plus_1());
  Cycle expected(2);
  expected.add(px);
  expected.add(pxy);
  CHECK(fcyc(R_J) == expected);
  CHECK(fcyc(sub("x, y")) == expected);
  CHECK(fcyc(R_J).is_binary());
  CHECK(associated_primes(R_J) == std::set<MonomialPrime>{px, pxy});
  CHECK(annihilator(sub("y")) == I2("x"));
}

TEST_CASE("domains have length w^dim") {
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(length(MonomialModule::quotient(MonomialIdeal::zero(n))) == Ordinal::monomial(n));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) gens.push_back(i);
      }
      const MonomialPrime P(n, gens);
      CHECK(length(MonomialModule::quotient(P.ideal())) == Ordinal::monomial(P.dim()));
    }
  }
}

TEST_CASE("length agrees with brute-force localization") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& M : checks::exhaustive_pairs(n, 3)) {
      CHECK(oracle_ref::cnf(length(M)) == oracle_ref::brute_length(M.numerator(), M.denominator()));
    }
  }
  for (const auto& M : checks::random_pairs(3, 2, 60, 11)) {
    CHECK(oracle_ref::cnf(length(M)) == oracle_ref::brute_length(M.numerator(), M.denominator(), 5));
  }
}

TEST_CASE("fundamental cycle of R/I matches standard pair counts") {
  for (const auto& I : checks::all_ideals(2, 3)) {
    if (I.is_unit()) continue;
    const Cycle c = fcyc(MonomialModule::quotient(I));
    const auto counts = pair_counts(standard_pairs(I));
    for (const auto& [P, k] : c.terms()) {
      const auto it = counts.find(P.complement());
      REQUIRE(it != counts.end());
      CHECK(k == it->second);
    }
  }
}

TEST_CASE("profile") {
  const ModuleProfile p = profile(R_J);
  CHECK(p.length == w_plus_1());
  CHECK(p.dim == 1u);
  CHECK(p.order == 0u);
  CHECK(p.valence == 2);
  CHECK(p.is_binary);
  const ModuleProfile z = profile(MonomialModule::quotient(MonomialIdeal::unit(2)));
  CHECK(z.length.is_zero());
  CHECK_FALSE(z.dim.has_value());
  CHECK_FALSE(profile(MonomialModule::quotient(I2("x^2"))).is_binary);
}

TEST_CASE("dimension filtration") {
  const MonomialModule D0 = dim_filtration(R_J, 0);
  CHECK(D0.numerator() == I2("x"));
  CHECK(length(D0) == Ordinal{1});
  CHECK(dim_filtration(R_J, 1) == R_J);
  CHECK(dim_filtration(MonomialModule::quotient(I2("x")), 0).is_zero());
  CHECK_THROWS_AS(dim_filtration(R_J, 3), InvalidArgument);
}

TEST_CASE("localization kernels") {
  CHECK(prim_kernel(R_J, pxy).kernel.is_zero());
  CHECK(prim_kernel(MonomialModule::quotient(I2("x^2")), px).kernel.is_zero());
  const PrimKernel k = prim_kernel(R_J, px);
  CHECK(k.prime_is_associated);
  CHECK(k.kernel.numerator() == I2("x"));
  CHECK(associated_primes(k.quotient) == std::set<MonomialPrime>{px});
  CHECK(shuffle_sum(length(k.kernel), length(k.quotient)) == length(R_J));
}

TEST_CASE("open submodules") {
  CHECK(is_open_submodule(R_J, sub("x, y^2")));
  CHECK_FALSE(is_open_submodule(R_J, sub("y")));
  CHECK(is_open_submodule(R_J, R_J));
  CHECK(open_via_witnesses(R_J, sub("x, y^2")));
  CHECK_FALSE(open_via_witnesses(R_J, sub("y")));
  CHECK_THROWS_WITH_AS(open_via_witnesses(MonomialModule::quotient(I2("x^2")),
                                          MonomialModule(I2("x"), I2("x^2"))),
                       doctest::Contains("requires binary module"), InvalidArgument);
}

TEST_CASE("open forms agree on binary corpus modules") {
  for (const auto& M : checks::exhaustive_pairs(2, 2)) {
    if (M.is_zero() || !fcyc(M).is_binary()) continue;
    for (const auto& N : checks::sandwich_family(M, 2)) {
      const MonomialModule S(N, M.denominator());
      CHECK(is_open_submodule(M, S) == open_via_witnesses(M, S));
    }
  }
}

TEST_CASE("split binary submodule") {
  const SplitBinary s = split_binary_submodule(R_J);
  CHECK(s.submodule.numerator() == I2("x, y"));
  REQUIRE(s.witnesses.size() == 2);
  CHECK(s.witnesses[0] == std::pair{px, m2("y")});
  CHECK(s.witnesses[1] == std::pair{pxy, m2("x")});
  const SplitBinary d = split_binary_submodule(MonomialModule::quotient(I2("x")));
  CHECK(d.submodule == MonomialModule::quotient(I2("x")));
  const SplitBinary q = split_binary_submodule(MonomialModule::quotient(I2("x^2")));
  CHECK(q.witnesses.size() == 1);
  CHECK(q.witnesses[0].second == m2("x"));
  CHECK_THROWS_AS(split_binary_submodule(MonomialModule::quotient(MonomialIdeal::unit(2))),
                  InvalidArgument);
}

TEST_CASE("univalence") {
  const auto d = univalent_data(MonomialModule::quotient(I2("x")));
  REQUIRE(d.has_value());
  CHECK(d->annihilator_is_prime);
  const auto y = univalent_data(sub("y"));
  REQUIRE(y.has_value());
  CHECK(y->prime == px);
  CHECK(y->annihilator == I2("x"));
  CHECK_FALSE(is_univalent(R_J));
  CHECK(ass_poset_length(R_J) == 2);
  CHECK(ass_poset_length(sub("y")) == 1);
  CHECK(ass_poset_length(MonomialModule::quotient(I2("x^2"))) == 1);
}

TEST_CASE("multiplication endomorphisms") {
  const EndoAnalysis ex = mult_endo(R_J, m2("x"));
  CHECK(ex.kernel.numerator() == I2("x, y"));
  CHECK(ex.kappa == w_plus_1());
  CHECK(ex.image.numerator() == I2("x"));
  CHECK(ex.theta == Ordinal{1});
  CHECK(ex.nilpotent);
  CHECK(ex.nilpotency_index == 2u);

  const EndoAnalysis ey = mult_endo(R_J, m2("y"));
  CHECK(ey.kernel.numerator() == I2("x"));
  CHECK(ey.kappa == Ordinal{1});
  CHECK(ey.image.numerator() == I2("x^2, y"));
  CHECK(ey.theta == Ordinal{0, 1});
  CHECK(ey.satisfies_rank_nullity);
  CHECK(ey.low_kernel);
  CHECK_FALSE(ey.nilpotent);

  const EndoAnalysis d = mult_endo(MonomialModule::quotient(I2("x")), m2("y"));
  CHECK(d.monic);
  CHECK(d.open_image);
  CHECK(d.regular);
}

TEST_CASE("submodules of every smaller length exist at finite length") {
  const MonomialModule M = MonomialModule::quotient(I2("x^2, x*y, y^3"));
  REQUIRE(length(M) == Ordinal{4});
  for (unsigned k = 0; k <= 4; ++k) CHECK(find_submodule_of_length(M, Ordinal{k}).has_value());
}
