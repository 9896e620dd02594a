#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ordlen {

using Exponent = std::uint32_t;

/// A monomial x_0^e_0 ... x_{n-1}^e_{n-1} of a polynomial ring in n variables.
class Monomial {
public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  /// Indices of variables with positive exponent.
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial pow(Exponent k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / gcd(a, b): the generator of the colon (a) : b.
Monomial colon(const Monomial& a, const Monomial& b);

/// A monomial ideal, stored by its unique minimal generating set.
///
/// Generators are kept sorted in descending lexicographic order of exponent
/// vectors. No generators means the zero ideal; the single generator 1 means
/// the unit ideal.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// The ideal generated by `gens` in n variables (any generating set).
  MonomialIdeal(std::size_t n, std::vector<Monomial> gens);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n, {}); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial(n)}); }
  /// The prime generated by the listed variables.
  static MonomialIdeal from_variables(std::size_t n, const std::vector<std::size_t>& vars);
  /// All monomials of degree d.
  static MonomialIdeal maximal_power(std::size_t n, Exponent d);

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  /// Largest exponent of each variable over the generators.
  std::vector<Exponent> max_exponents() const;
  /// Largest total degree of a generator (0 for the zero ideal).
  std::uint64_t max_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

bool member(const Monomial& m, const MonomialIdeal& I);
/// I contains J.
bool contains(const MonomialIdeal& I, const MonomialIdeal& J);

/// I : m
MonomialIdeal colon_mono(const MonomialIdeal& I, const Monomial& m);
/// I : B, the intersection of I : g over the generators g of B. Throws for
/// the zero ideal B.
MonomialIdeal colon_ideal(const MonomialIdeal& I, const MonomialIdeal& B);
/// I : B^infinity, iterating colon_ideal until it stabilizes.
MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& B);
/// I : s^infinity for a single monomial s.
MonomialIdeal saturate(const MonomialIdeal& I, const Monomial& s);

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
/// m * I
MonomialIdeal product(const Monomial& m, const MonomialIdeal& I);

/// Calls f(m) for every monomial with 0 <= m_i < bound[i], in lexicographic
/// order of exponent vectors.
template <class F>
void for_each_in_box(const std::vector<Exponent>& bound, F&& f) {
  for (auto b : bound) {
    if (b == 0) return;
  }
  std::vector<Exponent> e(bound.size(), 0);
  while (true) {
    f(Monomial(e));
    std::size_t i = e.size();
    while (i > 0) {
      --i;
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      if (i == 0) return;
    }
    if (e.empty()) return;
  }
}

/// Monomials of total degree <= d in n variables, ordered by degree and then
/// descending lexicographically.
std::vector<Monomial> monomials_up_to_degree(std::size_t n, Exponent d);

} // namespace ordlen
