#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "ordlen/monomial.hpp"
#include "ordlen/ordinal.hpp"

namespace oracle_ref {

using Exps = std::vector<unsigned>;

// exponent -> coefficient, zero coefficients never stored.
using Cnf = std::map<unsigned, unsigned long long>;

inline Cnf cnf(const ordlen::Ordinal& a) {
  Cnf out;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) {
    const auto& c = a.coefficients()[i];
    if (!c.is_zero()) out[static_cast<unsigned>(i)] = c.convert_to<unsigned long long>();
  }
  return out;
}

// Ordinal addition term by term: each term c*w^e of b absorbs every term of
// the running sum with smaller exponent.
inline Cnf add(Cnf a, const Cnf& b) {
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    const unsigned e = it->first;
    for (auto jt = a.begin(); jt != a.end();) {
      jt = jt->first < e ? a.erase(jt) : std::next(jt);
    }
    a[e] += it->second;
  }
  return a;
}

// Lexicographic comparison from the top exponent.
inline bool less(const Cnf& a, const Cnf& b) {
  auto ia = a.rbegin();
  auto ib = b.rbegin();
  for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.rend() && ib != b.rend();
}

inline bool divides(const Exps& g, const Exps& m) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > m[i]) return false;
  }
  return true;
}

inline bool in_ideal(const Exps& m, const std::vector<Exps>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

inline std::vector<Exps> gens_of(const ordlen::MonomialIdeal& I) {
  std::vector<Exps> out;
  for (const auto& g : I.gens()) {
    Exps e(I.num_vars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g[i];
    out.push_back(e);
  }
  return out;
}

// Calls f on every exponent vector with all entries <= bound.
template <class F>
void for_each_exps(std::size_t n, unsigned bound, F&& f) {
  Exps e(n, 0);
  while (true) {
    f(e);
    std::size_t i = 0;
    while (i < n && e[i] == bound) e[i++] = 0;
    if (i == n) return;
    ++e[i];
  }
}

// Monomials of I outside J with every exponent <= bound.
inline std::size_t count_between(const std::vector<Exps>& I, const std::vector<Exps>& J,
                                 std::size_t n, unsigned bound) {
  std::size_t count = 0;
  for_each_exps(n, bound, [&](const Exps& m) { count += in_ideal(m, I) && !in_ideal(m, J); });
  return count;
}

// Sets the variables outside `keep` to 1 and drops them.
inline std::vector<Exps> localize(const std::vector<Exps>& gens, const std::vector<std::size_t>& keep) {
  std::vector<Exps> out;
  for (const auto& g : gens) {
    Exps h;
    for (auto i : keep) h.push_back(g[i]);
    out.push_back(h);
  }
  return out;
}

// Torsion monomials of I/J at the maximal ideal, searched in a box of side
// `bound`: m in I \ J with m * v^bound in J for every variable v.
inline std::size_t torsion_count(const std::vector<Exps>& I, const std::vector<Exps>& J,
                                 std::size_t n, unsigned bound) {
  std::size_t count = 0;
  for_each_exps(n, bound, [&](const Exps& m) {
    if (!in_ideal(m, I) || in_ideal(m, J)) return;
    for (std::size_t v = 0; v < n; ++v) {
      Exps w = m;
      w[v] += bound;
      if (!in_ideal(w, J)) return;
    }
    ++count;
  });
  return count;
}

// Length of I/J as the sum over monomial primes P of finlen(M_P) w^dim(R/P),
// with finlen found by bounded brute force after inverting the variables
// outside P. `bound` must exceed every exponent appearing in I and J.
inline Cnf brute_length(const ordlen::MonomialIdeal& I, const ordlen::MonomialIdeal& J,
                        unsigned bound = 8) {
  const std::size_t n = I.num_vars();
  const auto gi = gens_of(I);
  const auto gj = gens_of(J);
  Cnf out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) keep.push_back(i);
    }
    const std::size_t c = torsion_count(localize(gi, keep), localize(gj, keep), keep.size(), bound);
    if (c) out[static_cast<unsigned>(n - keep.size())] += c;
  }
  return out;
}

} // namespace oracle_ref
