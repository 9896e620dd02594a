#include <doctest.h>

#include "ordlen/calculus.hpp"
#include "ordlen/error.hpp"
#include "ordlen/io.hpp"

using namespace ordlen;

TEST_CASE("variables") {
  CHECK(io::parse_vars("x, y ,z") == io::VarNames{"x", "y", "z"});
  CHECK(io::default_vars(2) == io::VarNames{"x", "y"});
  CHECK(io::default_vars(4).size() == 4);
  CHECK_THROWS_AS(io::parse_vars("x,x"), ParseError);
  CHECK_THROWS_AS(io::parse_vars("x,2y"), ParseError);
  CHECK(io::parse_vars("").empty());
}

TEST_CASE("ideals") {
  const io::VarNames v{"x", "y"};
  const MonomialIdeal J = io::parse_ideal("x^2, x*y", v);
  CHECK(io::format_ideal(J, v) == "x^2, x*y");
  CHECK(io::parse_ideal("", v).is_zero());
  CHECK(io::parse_ideal("0", v).is_zero());
  CHECK(io::parse_ideal("1", v).is_unit());
  CHECK(io::format_ideal(MonomialIdeal::zero(2), v) == "0");
  CHECK(io::format_monomial(io::parse_monomial("y*x^3", v), v) == "x^3*y");
  CHECK(io::format_monomial(Monomial(2), v) == "1");
}

TEST_CASE("parse errors carry offsets") {
  const io::VarNames v{"x", "y"};
  try {
    io::parse_ideal("x^2, z", v);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(io::parse_ideal("x^", v), ParseError);
  CHECK_THROWS_AS(io::parse_ideal("x**y", v), ParseError);
  CHECK_THROWS_AS(io::parse_ideal("x^99999999999", v), GuardError);
}

TEST_CASE("primes and cycles") {
  const io::VarNames v{"x", "y"};
  CHECK(io::format_prime(MonomialPrime(2, {0, 1}), v) == "[x,y]");
  CHECK(io::format_prime(MonomialPrime(2, {}), v) == "[0]");
  CHECK(io::parse_prime("[x,y]", v) == MonomialPrime(2, {0, 1}));
  CHECK(io::parse_prime("0", v) == MonomialPrime(2, {}));
  const Cycle c = fcyc(MonomialModule::quotient(io::parse_ideal("x^2, x*y", v)));
  CHECK(io::format_cycle(c, v) == "1*[x] + 1*[x,y]");
  CHECK(io::format_cycle(Cycle(2), v) == "0");
  CHECK(io::cycle_from_json(io::to_json(c)) == c);
}

TEST_CASE("module text") {
  const auto pm = io::parse_module("vars: x,y ; J: x^2, x*y");
  CHECK(pm.module.numerator().is_unit());
  CHECK(io::format_module(pm.module, pm.vars) == "vars: x,y ; I: 1 ; J: x^2, x*y");
  const auto again = io::parse_module(io::format_module(pm.module, pm.vars));
  CHECK(again.module == pm.module);
  CHECK_THROWS_AS(io::parse_module("vars: x,y ; I: x^2 ; J: x"), ParseError);
  CHECK_THROWS_AS(io::parse_module("I: 1 ; J: x"), ParseError);
  CHECK_THROWS_AS(io::parse_module("vars: x ; J: x ; J: x"), ParseError);
  CHECK_THROWS_AS(io::parse_module("vars: x ; K: x"), ParseError);
}

TEST_CASE("json round trips") {
  const Ordinal a = parse_ordinal("2w^3 + w + 5");
  CHECK(io::to_json(a) == nlohmann::json::parse("[[3,2],[1,1],[0,5]]"));
  CHECK(io::ordinal_from_json(io::to_json(a)) == a);
  const Ordinal big = Ordinal::monomial(1, Natural("99999999999999999999999"));
  CHECK(io::ordinal_from_json(io::to_json(big)) == big);
  const auto pm = io::parse_module("vars: a,b,c ; I: a, b ; J: a^2*b");
  const auto back = io::module_from_json(io::to_json(pm.module, pm.vars));
  CHECK(back.module == pm.module);
  CHECK(back.vars == pm.vars);
  CHECK_THROWS(io::ordinal_from_json(nlohmann::json::parse("[[1,1],[2,1]]")));
}
