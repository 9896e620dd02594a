#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "ordlen/calculus.hpp"
#include "ordlen/checks.hpp"
#include "ordlen/error.hpp"
#include "ordlen/finite_module.hpp"
#include "ordlen/io.hpp"

using namespace ordlen;
using namespace ordlen::oracle;

namespace {

const io::VarNames xy{"x", "y"};

FiniteModule fm(const char* J) {
  return FiniteModule::from_subquotient(MonomialModule::quotient(io::parse_ideal(J, xy)));
}

// Submodules counted as subsets of F2^d closed under + and every action, by
// trying all 2^(2^d) subsets. Only for d <= 4.
std::size_t brute_submodule_count(const FiniteModule& M) {
  const std::size_t d = M.dim();
  const std::size_t vectors = std::size_t{1} << d;
  std::size_t count = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << vectors); ++subset) {
    if (!(subset & 1)) continue;
    bool closed = true;
    for (std::size_t a = 0; a < vectors && closed; ++a) {
      if (!(subset >> a & 1)) continue;
      for (std::size_t b = 0; b < vectors && closed; ++b) {
        if ((subset >> b & 1) && !(subset >> (a ^ b) & 1)) closed = false;
      }
      for (const auto& act : M.action()) {
        if (!(subset >> act.apply(a) & 1)) closed = false;
      }
    }
    count += closed;
  }
  return count;
}

} // namespace

TEST_CASE("submodule enumeration") {
  CHECK(enumerate_submodules(fm("x^2, x*y, y^2")).size() == 6);
  CHECK(enumerate_submodules(fm("x, y")).size() == 2);
  CHECK(enumerate_submodules(fm("1")).size() == 1);
}

TEST_CASE("submodule count agrees with subset brute force") {
  for (const auto& J : checks::artinian_ideals(2, 3)) {
    const FiniteModule M = FiniteModule::from_subquotient(MonomialModule::quotient(J));
    if (M.dim() > 4) continue;
    CHECK(enumerate_submodules(M).size() == brute_submodule_count(M));
  }
}

TEST_CASE("longest chain") {
  CHECK(longest_chain(fm("x^2, x*y, y^2")) == 3);
  CHECK(longest_chain(fm("x^2, x*y, y^3")) == 4);
  CHECK(longest_chain(fm("x, y")) == 1);
  CHECK(longest_chain(fm("1")) == 0);
}

TEST_CASE("longest chain equals standard monomial count on all ideals above m^4") {
  for (const auto& J : checks::artinian_ideals(2, 4)) {
    const MonomialModule M = MonomialModule::quotient(J);
    const std::size_t standard =
        oracle_ref::count_between({{0, 0}}, oracle_ref::gens_of(J), 2, 4);
    CHECK(longest_chain(FiniteModule::from_subquotient(M), 10) == standard);
    CHECK(length(M) == Ordinal::finite(standard));
  }
}

TEST_CASE("endomorphism theorems at finite length") {
  const EndoTheoremReport simple = check_endo_theorems(fm("x, y"));
  CHECK(simple.simple);
  CHECK(simple.schur);
  CHECK(simple.ok());
  const EndoTheoremReport r = check_endo_theorems(fm("x^2, x*y, y^2"));
  CHECK(r.ok());
  CHECK(r.non_reductive > 0);
}

TEST_CASE("a non-reductive endomorphism of R/m^2 has a reductive square") {
  const FiniteModule M = fm("x^2, x*y, y^2");
  bool found = false;
  for (const auto& f : enumerate_endos(M)) {
    if (kernel(f) == kernel(power(f, 2))) continue;
    found = true;
    const F2Matrix f2 = power(f, 2);
    CHECK(intersect(kernel(f2), image(f2)).dim() == 0);
  }
  CHECK(found);
}

TEST_CASE("zero endomorphism is reductive with the whole module as tectonics") {
  const FiniteModule M = fm("x^2, x*y, y^2");
  const F2Matrix zero = F2Matrix::zero(M.dim());
  CHECK(intersect(kernel(zero), image(zero)).dim() == 0);
  CHECK(kernel(zero).dim() + image(zero).dim() == M.dim());
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(fm("x^2"), InvalidArgument);
  CHECK_THROWS_AS(enumerate_submodules(fm("x^3, y^3"), 8), GuardError);
  CHECK_THROWS_AS(enumerate_endos(fm("x^3, y^3")), GuardError);
}
