#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace ordlen {

using Natural = boost::multiprecision::cpp_int;

/// An ordinal strictly below w^w, stored in Cantor normal form.
///
/// `coefficient(i)` is the coefficient of w^i. The coefficient vector is kept
/// canonical: no trailing zeros, so the zero ordinal has an empty vector and
/// two ordinals are equal iff their vectors are equal.
///
/// `operator<=>` is the usual (lexicographic) ordinal order. The coefficientwise
/// partial order is `weaker()`.
class Ordinal {
public:
  /// Inline storage covers ordinals below w^4 without heap allocation.
  using Coefficients = boost::container::small_vector<Natural, 4>;

  Ordinal() = default;

  /// Coefficients indexed by exponent, lowest first.
  explicit Ordinal(std::vector<Natural> coeffs);
  Ordinal(std::initializer_list<unsigned long long> coeffs);

  static Ordinal finite(const Natural& n);
  /// c * w^e
  static Ordinal monomial(std::uint64_t exponent, const Natural& coeff = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_finite() const noexcept { return coeffs_.size() <= 1; }

  /// Coefficient of w^e; zero beyond the degree.
  const Natural& coefficient(std::uint64_t e) const;
  const Coefficients& coefficients() const noexcept { return coeffs_; }

  /// Highest exponent with a nonzero coefficient. Throws on zero.
  std::uint64_t degree() const;
  /// Lowest exponent with a nonzero coefficient. Throws on zero.
  std::uint64_t order() const;
  /// Sum of all coefficients.
  Natural valence() const;
  /// Exponents with nonzero coefficients, ascending.
  std::vector<std::uint64_t> support() const;
  /// All coefficients are 0 or 1.
  bool is_binary() const;

  friend bool operator==(const Ordinal&, const Ordinal&) = default;
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend Ordinal ord_sum(const Ordinal& a, const Ordinal& b);
  friend Ordinal shuffle_sum(const Ordinal& a, const Ordinal& b);

private:
  void normalize();
  Coefficients coeffs_;
};

/// Ordinal sum a + b (not commutative).
Ordinal ord_sum(const Ordinal& a, const Ordinal& b);
/// Natural (shuffle) sum: coefficientwise addition.
Ordinal shuffle_sum(const Ordinal& a, const Ordinal& b);

/// a <= b in the ordinal order.
bool leq_total(const Ordinal& a, const Ordinal& b);
/// Coefficientwise a_i <= b_i for all i.
bool weaker(const Ordinal& a, const Ordinal& b);

/// Coefficientwise minimum and maximum (lattice operations for `weaker`).
Ordinal meet(const Ordinal& a, const Ordinal& b);
Ordinal join(const Ordinal& a, const Ordinal& b);

/// Coefficientwise b - a. Requires weaker(a, b); it is the unique g with
/// shuffle_sum(a, g) == b.
Ordinal shuffle_difference(const Ordinal& b, const Ordinal& a);

struct OrdinalSplit {
  Ordinal high; ///< terms with exponent > e
  Ordinal low;  ///< terms with exponent <= e
};

OrdinalSplit split(const Ordinal& a, std::uint64_t e);

/// n-fold sum a + ... + a, i.e. every coefficient scaled by n.
Ordinal nat_multiple(const Natural& n, const Ordinal& a);

/// "w^2 + 3w + 1"; "0" for zero.
std::string to_string(const Ordinal& a);
/// Inverse of to_string. Terms must have strictly descending exponents;
/// whitespace is optional and explicit coefficients of 1 are accepted.
Ordinal parse_ordinal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

} // namespace ordlen
