#include "ordlen/monomial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ordlen/error.hpp"

namespace ordlen {

namespace {

void require_same_ring(std::size_t a, std::size_t b) {
  if (a != b) {
    throw InvalidArgument("ambient variable counts differ: " + std::to_string(a) + " vs " +
                          std::to_string(b));
  }
}

// Keeps only generators not divisible by another, sorted descending.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), std::greater<>());
  return kept;
}

} // namespace

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  std::vector<Exponent> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s.push_back(i);
  }
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(num_vars(), other.num_vars());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::pow(Exponent k) const {
  std::vector<Exponent> e = exps_;
  for (auto& x : e) x *= k;
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a.num_vars(), b.num_vars());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a.num_vars(), b.num_vars());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a.num_vars(), b.num_vars());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_ring(a.num_vars(), b.num_vars());
  std::vector<Exponent> e(a.num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return Monomial(std::move(e));
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
  for (const auto& g : gens) require_same_ring(n, g.num_vars());
  gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::from_variables(std::size_t n, const std::vector<std::size_t>& vars) {
  std::vector<Monomial> gens;
  for (auto v : vars) {
    if (v >= n) throw InvalidArgument("variable index out of range");
    gens.push_back(Monomial::variable(n, v));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal MonomialIdeal::maximal_power(std::size_t n, Exponent d) {
  std::vector<Monomial> gens;
  for (auto& m : monomials_up_to_degree(n, d)) {
    if (m.degree() == d) gens.push_back(std::move(m));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Exponent> e(n_, 0);
  for (const auto& g : gens_) {
    for (std::size_t i = 0; i < n_; ++i) e[i] = std::max(e[i], g[i]);
  }
  return e;
}

std::uint64_t MonomialIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool member(const Monomial& m, const MonomialIdeal& I) {
  require_same_ring(m.num_vars(), I.num_vars());
  return std::any_of(I.gens().begin(), I.gens().end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool contains(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.num_vars(), J.num_vars());
  return std::all_of(J.gens().begin(), J.gens().end(),
                     [&](const Monomial& g) { return member(g, I); });
}

MonomialIdeal colon_mono(const MonomialIdeal& I, const Monomial& m) {
  require_same_ring(I.num_vars(), m.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(colon(g, m));
  return MonomialIdeal(I.num_vars(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& B) {
  require_same_ring(I.num_vars(), B.num_vars());
  if (B.is_zero()) throw InvalidArgument("colon by the zero ideal (would be the unit ideal)");
  MonomialIdeal result = colon_mono(I, B.gens().front());
  for (std::size_t k = 1; k < B.gens().size(); ++k) {
    result = intersect(result, colon_mono(I, B.gens()[k]));
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& B) {
  MonomialIdeal current = I;
  while (true) {
    MonomialIdeal next = colon_ideal(current, B);
    if (next == current) return current;
    current = std::move(next);
  }
}

MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& s) {
  require_same_ring(I.num_vars(), s.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    std::vector<Exponent> e = g.exponents();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (s[i] != 0) e[i] = 0;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(I.num_vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.num_vars(), J.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& a : I.gens()) {
    for (const auto& b : J.gens()) gens.push_back(lcm(a, b));
  }
  return MonomialIdeal(I.num_vars(), std::move(gens));
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  require_same_ring(I.num_vars(), J.num_vars());
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.num_vars(), std::move(gens));
}

MonomialIdeal product(const Monomial& m, const MonomialIdeal& I) {
  require_same_ring(I.num_vars(), m.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(m * g);
  return MonomialIdeal(I.num_vars(), std::move(gens));
}

std::vector<Monomial> monomials_up_to_degree(std::size_t n, Exponent d) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(n, 0);
  // Compositions of each degree k into n parts, lexicographically descending.
  std::function<void(std::size_t, Exponent)> rec = [&](std::size_t i, Exponent left) {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (Exponent k = left + 1; k-- > 0;) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  for (Exponent k = 0; k <= d; ++k) {
    if (n == 0) {
      out.emplace_back(e);
      break;
    }
    rec(0, k);
  }
  return out;
}

} // namespace ordlen
