#include <doctest.h>

#include <set>

#include "ordlen/checks.hpp"
#include "ordlen/error.hpp"

using namespace ordlen;
using namespace ordlen::checks;

TEST_CASE("ideal corpus") {
  // One variable: 0 and x^k for k <= d.
  CHECK(all_ideals(1, 3).size() == 5);
  const auto two = all_ideals(2, 2);
  CHECK(std::set<MonomialIdeal>(two.begin(), two.end()).size() == two.size());
  for (const auto& I : two) CHECK(I.max_degree() <= 2);
  CHECK(std::find(two.begin(), two.end(), MonomialIdeal::zero(2)) != two.end());
  CHECK(std::find(two.begin(), two.end(), MonomialIdeal::unit(2)) != two.end());
}

TEST_CASE("pairs are nested") {
  for (const auto& M : exhaustive_pairs(2, 2)) CHECK(contains(M.numerator(), M.denominator()));
  const auto r = random_pairs(3, 3, 50, 5);
  CHECK(r.size() == 50);
  for (const auto& M : r) CHECK(contains(M.numerator(), M.denominator()));
  CHECK(r == random_pairs(3, 3, 50, 5));
}

TEST_CASE("sandwich family stays between J and I") {
  const MonomialModule M(MonomialIdeal::unit(2), MonomialIdeal(2, {Monomial{2, 0}, Monomial{1, 1}}));
  const auto fam = sandwich_family(M, 3);
  CHECK(fam.size() > 3);
  for (const auto& N : fam) {
    CHECK(contains(M.numerator(), N));
    CHECK(contains(N, M.denominator()));
  }
}

TEST_CASE("artinian corpus contains a power of the maximal ideal") {
  const MonomialIdeal m4 = MonomialIdeal::maximal_power(2, 4);
  for (const auto& J : artinian_ideals(2, 4)) CHECK(contains(J, m4));
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 12);
  CHECK_THROWS_AS(run_suite("nope"), InvalidArgument);
  const auto r = run_suite("examples");
  CHECK(all_pass(r));
  CHECK(format_report(r).rfind("CHECK ", 0) == 0);
  CHECK(report_json(r)["checks"].size() == r.size());
  CHECK(report_json(r)["pass"] == true);
}

TEST_CASE("failing results are reported with witnesses") {
  CheckResult bad{"demo", false, 3, "detail", {"w1"}};
  const std::string text = format_report({bad});
  CHECK(text == "CHECK demo FAIL 3 cases; detail\n  witness: w1\n");
  CHECK_FALSE(all_pass({bad}));
  CHECK(report_json({bad})["checks"][0]["witnesses"][0] == "w1");
  CHECK(report_json({bad})["checks"][0]["status"] == "FAIL");
}
