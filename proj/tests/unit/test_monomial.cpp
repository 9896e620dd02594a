#include <doctest.h>

#include "oracles.hpp"
#include "ordlen/checks.hpp"
#include "ordlen/error.hpp"
#include "ordlen/io.hpp"
#include "ordlen/local_cohomology.hpp"
#include "ordlen/monomial.hpp"
#include "ordlen/standard_pairs.hpp"

using namespace ordlen;

namespace {

const io::VarNames xy{"x", "y"};

MonomialIdeal I2(const char* s) { return io::parse_ideal(s, xy); }
Monomial m2(const char* s) { return io::parse_monomial(s, xy); }

} // namespace

TEST_CASE("membership") {
  CHECK(member(m2("x*y"), I2("x^2, x*y")));
  CHECK_FALSE(member(m2("y^3"), I2("x^2, x*y")));
  CHECK(member(m2("x^5*y^7"), MonomialIdeal::unit(2)));
  CHECK_FALSE(member(m2("1"), MonomialIdeal::zero(2)));
}

TEST_CASE("generators are minimalized") {
  CHECK(I2("x^2, x^3*y, x*y, x*y^4") == I2("x^2, x*y"));
  CHECK(I2("1, x") == MonomialIdeal::unit(2));
  CHECK(MonomialIdeal::maximal_power(2, 2) == I2("x^2, x*y, y^2"));
}

TEST_CASE("colon and saturation") {
  const MonomialIdeal J = I2("x^2, x*y");
  CHECK(colon_mono(J, m2("x")) == I2("x, y"));
  CHECK(colon_mono(J, m2("y")) == I2("x"));
  CHECK(saturate(J, I2("x, y")) == I2("x"));
  CHECK(colon_ideal(J, I2("x, y")) == I2("x"));
  CHECK(saturate(J, m2("y")) == I2("x"));
  CHECK(colon_mono(J, m2("1")) == J);
  CHECK_THROWS_AS(colon_ideal(J, MonomialIdeal::zero(2)), InvalidArgument);
}

TEST_CASE("saturation agrees with brute force") {
  // m is in J : m^inf iff m times a high power of every variable lands in J.
  for (const auto& J : checks::all_ideals(2, 3)) {
    const MonomialIdeal S = saturate(J, I2("x, y"));
    const auto gj = oracle_ref::gens_of(J);
    oracle_ref::for_each_exps(2, 6, [&](const oracle_ref::Exps& e) {
      const bool in_sat = oracle_ref::in_ideal({e[0] + 8, e[1]}, gj) &&
                          oracle_ref::in_ideal({e[0], e[1] + 8}, gj);
      CHECK(member(Monomial{e[0], e[1]}, S) == in_sat);
    });
  }
}

TEST_CASE("intersection, sum, containment") {
  CHECK(intersect(I2("y"), I2("x, y^2")) == I2("x*y, y^2"));
  CHECK(ideal_sum(I2("x^2, x*y"), I2("y")) == I2("x^2, y"));
  CHECK(contains(I2("x, y"), I2("x^2, x*y")));
  CHECK_FALSE(contains(I2("x^2, x*y"), I2("x, y")));
  CHECK(intersect(I2("x"), MonomialIdeal::zero(2)).is_zero());
  CHECK(ideal_sum(I2("x"), MonomialIdeal::zero(2)) == I2("x"));
}

TEST_CASE("intersection agrees with brute force") {
  const auto ideals = checks::all_ideals(2, 2);
  for (const auto& A : ideals) {
    for (const auto& B : ideals) {
      const MonomialIdeal C = intersect(A, B);
      const auto ga = oracle_ref::gens_of(A), gb = oracle_ref::gens_of(B);
      oracle_ref::for_each_exps(2, 4, [&](const oracle_ref::Exps& e) {
        const Monomial m{e[0], e[1]};
        CHECK(member(m, C) == (oracle_ref::in_ideal(e, ga) && oracle_ref::in_ideal(e, gb)));
      });
    }
  }
}

TEST_CASE("standard pairs") {
  auto pairs = standard_pairs(I2("x^2, x*y"));
  CHECK(pairs == std::vector<StandardPair>{{m2("1"), {1}}, {m2("x"), {}}});
  pairs = standard_pairs(I2("x^2"));
  CHECK(pairs == std::vector<StandardPair>{{m2("1"), {1}}, {m2("x"), {1}}});
  CHECK(standard_pairs(MonomialIdeal::zero(2)) == std::vector<StandardPair>{{m2("1"), {0, 1}}});
  CHECK(standard_pairs(MonomialIdeal::unit(2)).empty());
}

TEST_CASE("standard pairs cover exactly the standard monomials") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& I : checks::all_ideals(n, 3)) {
      const auto pairs = standard_pairs(I);
      const auto gi = oracle_ref::gens_of(I);
      oracle_ref::for_each_exps(n, 5, [&](const oracle_ref::Exps& e) {
        std::size_t covers = 0;
        for (const auto& p : pairs) {
          bool in_cone = true;
          for (std::size_t i = 0; i < n; ++i) {
            const bool free = std::find(p.free.begin(), p.free.end(), i) != p.free.end();
            in_cone = in_cone && (free ? e[i] >= p.head[i] : e[i] == p.head[i]);
          }
          covers += in_cone;
        }
        CHECK((covers > 0) == !oracle_ref::in_ideal(e, gi));
      });
    }
  }
}

TEST_CASE("localization") {
  const MonomialModule M = MonomialModule::quotient(I2("x^2, x*y"));
  const MonomialModule at_x = localize(M, MonomialPrime(2, {0}));
  CHECK(at_x.num_vars() == 1);
  CHECK(at_x.denominator() == MonomialIdeal(1, {Monomial{1}}));
  CHECK(h0_length(at_x) == 1);
  CHECK(localize(M, MonomialPrime(2, {0, 1})) == M);
  const MonomialModule Q = localize(MonomialModule::quotient(I2("x^2")), MonomialPrime(2, {0}));
  CHECK(Q.denominator() == MonomialIdeal(1, {Monomial{2}}));
  CHECK(h0_length(Q) == 2);
}

TEST_CASE("zeroth local cohomology") {
  CHECK(h0_length(MonomialModule::quotient(I2("x^2, x*y"))) == 1);
  CHECK(h0_length(MonomialModule::quotient(I2("x^2, x*y, y^2"))) == 3);
  CHECK(h0_length(MonomialModule::quotient(I2("x"))) == 0);
  CHECK(h0_length(MonomialModule(I2("x^2, y"), I2("x^2, x*y"))) == 0);
  CHECK(in_maximal_saturation(m2("x"), I2("x^2, x*y")));
  CHECK_FALSE(in_maximal_saturation(m2("y^4"), I2("x^2, x*y")));
}

TEST_CASE("zeroth local cohomology agrees with bounded brute force") {
  for (const auto& M : checks::exhaustive_pairs(2, 3)) {
    const auto gi = oracle_ref::gens_of(M.numerator()), gj = oracle_ref::gens_of(M.denominator());
    CHECK(h0_length(M) == oracle_ref::torsion_count(gi, gj, 2, 8));
  }
}

TEST_CASE("malformed inputs") {
  CHECK_THROWS_AS(MonomialModule(I2("x^2"), I2("x")), InvalidArgument);
  CHECK_THROWS_AS(MonomialPrime(2, {2}), InvalidArgument);
}
