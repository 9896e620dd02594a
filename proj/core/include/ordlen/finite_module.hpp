#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ordlen/module.hpp"

namespace ordlen::oracle {

/// A vector over F2 in a module of dimension <= 32, one bit per basis element.
using F2Vector = std::uint32_t;

/// Square matrix over F2 stored by columns: column j is the image of basis
/// vector j.
class F2Matrix {
public:
  F2Matrix() = default;
  explicit F2Matrix(std::vector<F2Vector> columns) : cols_(std::move(columns)) {}
  static F2Matrix identity(std::size_t d);
  static F2Matrix zero(std::size_t d) { return F2Matrix(std::vector<F2Vector>(d, 0)); }

  std::size_t dim() const noexcept { return cols_.size(); }
  const std::vector<F2Vector>& columns() const noexcept { return cols_; }
  F2Vector apply(F2Vector v) const;
  bool is_zero() const;

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b); ///< a after b
  friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
  std::vector<F2Vector> cols_;
};

F2Matrix power(const F2Matrix& a, std::size_t k);

/// A subspace in reduced row echelon form: basis vectors with distinct
/// leading bits, each leading bit cleared from all other basis vectors,
/// sorted by leading bit. This form is canonical.
class Subspace {
public:
  Subspace() = default;
  static Subspace span(const std::vector<F2Vector>& vectors);

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<F2Vector>& basis() const noexcept { return basis_; }
  /// v reduced modulo the subspace; zero iff v is a member.
  F2Vector reduce(F2Vector v) const;
  bool contains(F2Vector v) const { return reduce(v) == 0; }
  bool contains(const Subspace& other) const;
  /// Adds v; returns false if it was already a member.
  bool insert(F2Vector v);

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

private:
  std::vector<F2Vector> basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace kernel(const F2Matrix& f);
Subspace image(const F2Matrix& f);

/// A finite-length monomial subquotient I/J viewed as an F2-vector space with
/// the commuting nilpotent actions of the variables.
class FiniteModule {
public:
  /// Basis: the monomials of I \ J. Throws InvalidArgument unless J contains a
  /// power of every variable (or I = J), GuardError above 32 basis elements.
  static FiniteModule from_subquotient(const MonomialModule& M);

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t num_vars() const noexcept { return action_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  const std::vector<F2Matrix>& action() const noexcept { return action_; }
  /// Every vector of the module, i.e. all 2^dim bitmasks.
  F2Vector full_mask() const;

  /// The smallest submodule containing `seed` and v.
  Subspace closure(Subspace seed, F2Vector v) const;
  bool is_submodule(const Subspace& s) const;

private:
  std::vector<Monomial> basis_;
  std::vector<F2Matrix> action_;
};

/// Default cap on the F2-dimension for exhaustive submodule enumeration.
inline constexpr std::size_t kDefaultMaxSubmoduleDim = 8;
/// Default cap on the F2-dimension for exhaustive endomorphism enumeration.
inline constexpr std::size_t kDefaultMaxEndoDim = 5;

/// Every submodule (F2-subspace stable under all actions), sorted; includes
/// 0 and M. GuardError when dim exceeds max_dim.
std::vector<Subspace> enumerate_submodules(const FiniteModule& M,
                                           std::size_t max_dim = kDefaultMaxSubmoduleDim);

/// Number of steps in a longest strictly descending chain of submodules.
///
/// Computed as a longest path in the graph whose edges join S to the
/// closure of S + v; any strict chain refines to such a path, so no
/// Jordan-Hölder argument is involved.
std::size_t longest_chain(const FiniteModule& M, std::size_t max_dim = kDefaultMaxSubmoduleDim);

/// All F2-linear maps commuting with every action matrix. GuardError when
/// dim exceeds max_dim or the commutant has more than 2^20 elements.
std::vector<F2Matrix> enumerate_endos(const FiniteModule& M,
                                      std::size_t max_dim = kDefaultMaxEndoDim);

struct EndoTheoremReport {
  std::size_t endomorphisms = 0;
  std::size_t non_reductive = 0;
  std::size_t essential_kernels = 0;
  bool kernels_stabilize_to_reductive = true; ///< some power f^k is reductive
  bool rank_nullity_at_reductive_power = true;
  bool tectonics_open = true;                 ///< ker f^k + im f^k = M
  bool essential_kernel_implies_nilpotent = true;
  /// Only meaningful for simple modules: every nonzero endo is invertible.
  bool schur = true;
  bool simple = false;
  std::string failure; ///< first counterexample, empty when all hold

  bool ok() const {
    return kernels_stabilize_to_reductive && rank_nullity_at_reductive_power &&
           tectonics_open && essential_kernel_implies_nilpotent && schur;
  }
};

EndoTheoremReport check_endo_theorems(const FiniteModule& M,
                                      std::size_t max_dim = kDefaultMaxEndoDim);

} // namespace ordlen::oracle
