#include <doctest.h>

#include "ordlen/cycle.hpp"
#include "ordlen/error.hpp"

using namespace ordlen;

namespace {

const MonomialPrime px(2, {0});
const MonomialPrime pxy(2, {0, 1});
const MonomialPrime p0(2, {});

Cycle make(std::initializer_list<std::pair<MonomialPrime, unsigned>> terms) {
  Cycle c(2);
  for (const auto& [p, k] : terms) c.add(p, k);
  return c;
}

} // namespace

TEST_CASE("cycle sum and order") {
  const Cycle d = make({{px, 1}});
  const Cycle e = make({{px, 1}, {pxy, 1}});
  CHECK(cycle_sum(d, e) == make({{px, 2}, {pxy, 1}}));
  CHECK(cycle_weaker(d, e));
  CHECK_FALSE(cycle_weaker(e, make({{px, 2}})));
  CHECK(is_effective(e));
  CHECK(e.degree() == 2);
  CHECK(e.is_binary());
  CHECK_FALSE(cycle_sum(d, e).is_binary());
  CHECK(cycle_sum(d, Cycle(2)) == d);
}

TEST_CASE("zero coefficients are not stored") {
  Cycle c(2);
  c.add(px, 0);
  CHECK(c.is_zero());
  CHECK(c.coefficient(pxy) == 0);
}

TEST_CASE("binord weighs primes by dimension") {
  CHECK(binord(make({{px, 1}, {pxy, 1}})) == Ordinal{1, 1});
  CHECK(binord(make({{p0, 1}})) == Ordinal{0, 0, 1});
  CHECK(binord(Cycle(2)) == Ordinal{});
  CHECK(binord(make({{px, 3}, {pxy, 2}})) == Ordinal{2, 3});
}

TEST_CASE("binary cycles") {
  CHECK(binary_cycle(2, {px}) == make({{px, 1}}));
  CHECK(binary_cycle(2, {}).is_zero());
  CHECK(binary_cycle(2, {px, pxy}) == make({{px, 1}, {pxy, 1}}));
}

TEST_CASE("mismatched rings are rejected") {
  Cycle one(1);
  one.add(MonomialPrime(1, {0}));
  CHECK_THROWS_AS(cycle_sum(one, make({{px, 1}})), InvalidArgument);
  CHECK_THROWS_AS(cycle_weaker(one, make({{px, 1}})), InvalidArgument);
  Cycle c(2);
  CHECK_THROWS_AS(c.add(MonomialPrime(3, {0})), InvalidArgument);
}

TEST_CASE("prime inclusion") {
  CHECK(px.is_subset_of(pxy));
  CHECK_FALSE(pxy.is_subset_of(px));
  CHECK(p0.is_subset_of(px));
  CHECK(px.dim() == 1);
  CHECK(pxy.complement().empty());
  CHECK_THROWS_AS(MonomialPrime(2, {2}), InvalidArgument);
}
