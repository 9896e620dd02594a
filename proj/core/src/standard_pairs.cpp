#include "ordlen/standard_pairs.hpp"

#include <algorithm>

namespace ordlen {

namespace {

// Drops variable 0; keeps only generators free of it.
MonomialIdeal x_free_part(const MonomialIdeal& I) {
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    if (g[0] != 0) continue;
    gens.emplace_back(std::vector<Exponent>(g.exponents().begin() + 1, g.exponents().end()));
  }
  return MonomialIdeal(I.num_vars() - 1, std::move(gens));
}

StandardPair lift(const StandardPair& p, Exponent x_power, bool x_free) {
  std::vector<Exponent> e;
  e.reserve(p.head.num_vars() + 1);
  e.push_back(x_power);
  e.insert(e.end(), p.head.exponents().begin(), p.head.exponents().end());
  std::vector<std::size_t> free;
  if (x_free) free.push_back(0);
  for (auto v : p.free) free.push_back(v + 1);
  return {Monomial(std::move(e)), std::move(free)};
}

std::vector<StandardPair> recurse(const MonomialIdeal& I) {
  const std::size_t k = I.num_vars();
  if (I.is_unit()) return {};
  if (I.is_zero()) {
    std::vector<std::size_t> all(k);
    for (std::size_t i = 0; i < k; ++i) all[i] = i;
    return {StandardPair{Monomial(k), std::move(all)}};
  }
  const Exponent top = I.max_exponents()[0];
  std::vector<StandardPair> candidates;
  for (Exponent j = 0; j < top; ++j) {
    const auto sub = recurse(x_free_part(colon_mono(I, Monomial::variable(k, 0, j))));
    for (const auto& p : sub) candidates.push_back(lift(p, j, false));
  }
  for (const auto& p : recurse(x_free_part(saturate(I, Monomial::variable(k, 0))))) {
    candidates.push_back(lift(p, 0, true));
  }

  std::vector<StandardPair> maximal;
  for (const auto& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& o) {
      return !(o == c) && pair_dominated_by(c, o);
    });
    if (!dominated) maximal.push_back(c);
  }
  return maximal;
}

} // namespace

bool pair_dominated_by(const StandardPair& lhs, const StandardPair& rhs) {
  if (!rhs.head.divides(lhs.head)) return false;
  if (!std::includes(rhs.free.begin(), rhs.free.end(), lhs.free.begin(), lhs.free.end())) {
    return false;
  }
  const Monomial q = colon(lhs.head, rhs.head);
  for (auto v : q.support()) {
    if (!std::binary_search(rhs.free.begin(), rhs.free.end(), v)) return false;
  }
  return true;
}

std::vector<StandardPair> standard_pairs(const MonomialIdeal& I) {
  auto pairs = recurse(I);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::map<std::vector<std::size_t>, std::uint64_t> pair_counts(const std::vector<StandardPair>& pairs) {
  std::map<std::vector<std::size_t>, std::uint64_t> counts;
  for (const auto& p : pairs) ++counts[p.free];
  return counts;
}

} // namespace ordlen
