#include "ordlen/cycle.hpp"

#include <algorithm>

#include "ordlen/error.hpp"

namespace ordlen {

MonomialPrime::MonomialPrime(std::size_t n, std::vector<std::size_t> gens)
    : n_(n), gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (!gens_.empty() && gens_.back() >= n_) {
    throw InvalidArgument("prime generator index out of range");
  }
}

bool MonomialPrime::contains_variable(std::size_t i) const {
  return std::binary_search(gens_.begin(), gens_.end(), i);
}

bool MonomialPrime::is_subset_of(const MonomialPrime& other) const {
  return n_ == other.n_ &&
         std::includes(other.gens_.begin(), other.gens_.end(), gens_.begin(), gens_.end());
}

std::vector<std::size_t> MonomialPrime::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!contains_variable(i)) out.push_back(i);
  }
  return out;
}

Monomial MonomialPrime::complement_monomial() const {
  std::vector<Exponent> e(n_, 1);
  for (auto g : gens_) e[g] = 0;
  return Monomial(std::move(e));
}

MonomialIdeal MonomialPrime::ideal() const { return MonomialIdeal::from_variables(n_, gens_); }

void Cycle::add(const MonomialPrime& p, const Natural& c) {
  if (p.num_vars() != n_) throw InvalidArgument("cycle terms must share the ambient ring");
  if (c < 0) throw InvalidArgument("cycle coefficients must be non-negative");
  if (c == 0) return;
  terms_[p] += c;
}

const Natural& Cycle::coefficient(const MonomialPrime& p) const {
  static const Natural zero = 0;
  auto it = terms_.find(p);
  return it == terms_.end() ? zero : it->second;
}

std::set<MonomialPrime> Cycle::support() const {
  std::set<MonomialPrime> s;
  for (const auto& [p, c] : terms_) s.insert(p);
  return s;
}

Natural Cycle::degree() const {
  Natural total = 0;
  for (const auto& [p, c] : terms_) total += c;
  return total;
}

bool Cycle::is_binary() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

Cycle cycle_sum(const Cycle& d, const Cycle& e) {
  if (d.num_vars() != e.num_vars()) throw InvalidArgument("cycles over different rings");
  Cycle out = d;
  for (const auto& [p, c] : e.terms()) out.add(p, c);
  return out;
}

bool cycle_weaker(const Cycle& d, const Cycle& e) {
  if (d.num_vars() != e.num_vars()) throw InvalidArgument("cycles over different rings");
  return std::all_of(d.terms().begin(), d.terms().end(),
                     [&](const auto& t) { return t.second <= e.coefficient(t.first); });
}

bool is_effective(const Cycle&) { return true; }

Ordinal binord(const Cycle& d) {
  Ordinal out;
  for (const auto& [p, c] : d.terms()) out = shuffle_sum(out, Ordinal::monomial(p.dim(), c));
  return out;
}

Cycle binary_cycle(std::size_t n, const std::set<MonomialPrime>& s) {
  Cycle out(n);
  for (const auto& p : s) out.add(p, 1);
  return out;
}

} // namespace ordlen
