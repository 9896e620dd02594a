#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "ordlen/monomial.hpp"
#include "ordlen/ordinal.hpp"

namespace ordlen {

/// A prime generated by a subset of the variables of an n-variable ring.
/// The empty subset is the zero ideal.
class MonomialPrime {
public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t n, std::vector<std::size_t> gens);

  std::size_t num_vars() const noexcept { return n_; }
  /// Sorted variable indices.
  const std::vector<std::size_t>& gens() const noexcept { return gens_; }
  /// Krull dimension of R/P, i.e. the number of variables not in P.
  std::size_t dim() const noexcept { return n_ - gens_.size(); }

  bool contains_variable(std::size_t i) const;
  /// Inclusion of primes: every generator of *this is a generator of other.
  bool is_subset_of(const MonomialPrime& other) const;
  /// Variables not in P (those inverted by localizing at P).
  std::vector<std::size_t> complement() const;
  /// Product of the variables not in P.
  Monomial complement_monomial() const;
  MonomialIdeal ideal() const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  /// Lexicographic on the sorted generator list.
  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::size_t> gens_;
};

/// A formal non-negative combination of monomial primes of one ring.
class Cycle {
public:
  using Terms = std::map<MonomialPrime, Natural>;

  Cycle() = default;
  explicit Cycle(std::size_t n) : n_(n) {}

  std::size_t num_vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c[P]; zero coefficients are not stored.
  void add(const MonomialPrime& p, const Natural& c = 1);
  const Natural& coefficient(const MonomialPrime& p) const;
  std::set<MonomialPrime> support() const;
  /// Sum of all coefficients.
  Natural degree() const;
  /// All coefficients are 1.
  bool is_binary() const;

  friend bool operator==(const Cycle&, const Cycle&) = default;

private:
  std::size_t n_ = 0;
  Terms terms_;
};

Cycle cycle_sum(const Cycle& d, const Cycle& e);
/// Termwise d <= e.
bool cycle_weaker(const Cycle& d, const Cycle& e);
/// Coefficients are naturals, so every stored cycle is effective.
bool is_effective(const Cycle& d);

/// The shuffle sum of a_i * w^dim(P_i).
Ordinal binord(const Cycle& d);

/// The cycle with coefficient 1 on every prime of s. All primes must share
/// the ambient ring of n variables.
Cycle binary_cycle(std::size_t n, const std::set<MonomialPrime>& s);

} // namespace ordlen
