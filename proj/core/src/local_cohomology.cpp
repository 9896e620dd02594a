#include "ordlen/local_cohomology.hpp"

#include "ordlen/error.hpp"

namespace ordlen {

namespace {

MonomialIdeal restrict_to(const MonomialIdeal& I, const std::vector<std::size_t>& kept) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::vector<Exponent> e;
    e.reserve(kept.size());
    for (auto v : kept) e.push_back(g[v]);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(kept.size(), std::move(gens));
}

} // namespace

MonomialModule localize(const MonomialModule& M, const MonomialPrime& P) {
  if (P.num_vars() != M.num_vars()) throw InvalidArgument("prime and module rings differ");
  return MonomialModule(restrict_to(M.numerator(), P.gens()),
                        restrict_to(M.denominator(), P.gens()));
}

bool in_maximal_saturation(const Monomial& m, const MonomialIdeal& J) {
  const auto bound = J.max_exponents();
  std::vector<Exponent> e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] += bound[i];
    const bool absorbed = member(Monomial(e), J);
    e[i] -= bound[i];
    if (!absorbed) return false;
  }
  return true;
}

std::uint64_t h0_length(const MonomialModule& M) {
  const auto& I = M.numerator();
  const auto& J = M.denominator();
  std::uint64_t count = 0;
  for_each_in_box(J.max_exponents(), [&](const Monomial& m) {
    if (member(m, I) && !member(m, J) && in_maximal_saturation(m, J)) ++count;
  });
  return count;
}

} // namespace ordlen
